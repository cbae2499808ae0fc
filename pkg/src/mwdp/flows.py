"""Exact maximum flow on integer capacities (Dinic's algorithm).

Capacities are Python ints, so there is no precision ceiling: callers
with rational capacities clear denominators first and rescale the
result.  Everything is deterministic given the edge insertion order.
"""

from __future__ import annotations

from collections import deque


class Dinic:
    __slots__ = ("n", "adj", "to", "cap", "level", "it")

    def __init__(self, n: int):
        self.n = n
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, cap: int, rev_cap: int = 0) -> int:
        """Add edge u->v; returns its index.  The paired reverse edge is index^1."""
        if cap < 0 or rev_cap < 0:
            raise ValueError("capacities must be nonnegative")
        idx = len(self.to)
        self.adj[u].append(idx)
        self.to.append(v)
        self.cap.append(cap)
        self.adj[v].append(idx + 1)
        self.to.append(u)
        self.cap.append(rev_cap)
        return idx

    def add_undirected_edge(self, u: int, v: int, cap: int) -> int:
        return self.add_edge(u, v, cap, cap)

    def _bfs(self, s: int, t: int) -> bool:
        self.level = [-1] * self.n
        self.level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for idx in self.adj[u]:
                v = self.to[idx]
                if self.cap[idx] > 0 and self.level[v] < 0:
                    self.level[v] = self.level[u] + 1
                    queue.append(v)
        return self.level[t] >= 0

    def _dfs(self, s: int, t: int) -> int:
        # Iterative blocking-flow search; `it` holds per-vertex arc cursors.
        total = 0
        path: list[int] = []
        u = s
        while True:
            if u == t:
                bottleneck = min(self.cap[idx] for idx in path)
                for idx in path:
                    self.cap[idx] -= bottleneck
                    self.cap[idx ^ 1] += bottleneck
                total += bottleneck
                # retreat to just before the first saturated arc on the path
                k = 0
                while self.cap[path[k]] > 0:
                    k += 1
                del path[k:]
                u = self.to[path[-1]] if path else s
                continue
            advanced = False
            while self.it[u] < len(self.adj[u]):
                idx = self.adj[u][self.it[u]]
                v = self.to[idx]
                if self.cap[idx] > 0 and self.level[v] == self.level[u] + 1:
                    path.append(idx)
                    u = v
                    advanced = True
                    break
                self.it[u] += 1
            if advanced:
                continue
            if u == s:
                return total
            self.level[u] = -1  # dead end; prune from the level graph
            dead_arc = path.pop()
            u = self.to[dead_arc ^ 1]
            self.it[u] += 1

    def max_flow(self, s: int, t: int) -> int:
        if s == t:
            raise ValueError("source equals sink")
        flow = 0
        while self._bfs(s, t):
            self.it = [0] * self.n
            flow += self._dfs(s, t)
        return flow

    def residual_reachable(self, s: int) -> frozenset[int]:
        """Vertices reachable from s through positive residual capacity.

        After max_flow this is the canonical minimum-cut source side (the
        inclusion-minimal one), used everywhere for deterministic tie-breaking.
        """
        seen = [False] * self.n
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for idx in self.adj[u]:
                v = self.to[idx]
                if self.cap[idx] > 0 and not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return frozenset(i for i in range(self.n) if seen[i])
