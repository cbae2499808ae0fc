"""Polynomial-time optimal solvers.

Families where m11 (resp. m22) is maximal in every matrix admit the
trivial all-on-one-side optimum.  Families whose matrices all satisfy
the diagonal dominance inequality m11+m22 >= m12+m21 are solved by
building an undirected weighted graph H on the instance vertices plus
two terminals s,t such that for every (s,t)-cut C,

    w(C) = -(partition weight of the cut's induced bipartition),

so a minimum cut of H maximizes the partition weight.  H's terminal
edges are shifted by theta, the minimum edge weight, to make all
capacities nonnegative; every cut crosses exactly one terminal edge per
vertex, so the shift changes all cut values by the same |V|*theta.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm

from .classify import Case, classify
from .core import Instance, Partition, format_rational, partition_weight
from .errors import HardInstanceTooLarge, InternalCheckFailed, PreconditionViolated
from .flows import Dinic

DEFAULT_CAP = 26


class Method(Enum):
    TRIVIAL_ALL_X1 = "trivial_all_x1"
    TRIVIAL_ALL_X2 = "trivial_all_x2"
    MIN_CUT = "min_cut"
    BRUTE_FORCE = "brute_force"
    LOCAL_SEARCH = "local_search"


@dataclass(frozen=True)
class Solution:
    partition: Partition
    weight: Fraction
    method: Method

    def to_json(self, vertex_order) -> dict:
        return {
            "method": self.method.value,
            "weight": format_rational(self.weight),
            "x1": [v for v in vertex_order if v in self.partition.x1],
            "x2": [v for v in vertex_order if v in self.partition.x2],
        }


@dataclass(frozen=True)
class CutGraph:
    """The terminal-augmented undirected graph behind the min-cut solver.

    Vertices 0..n-1 are the instance vertices in declaration order;
    `s` == n and `t` == n+1 are the terminals.  `edges` holds the raw
    accumulated weights (parallel contributions already merged by
    summation), `w_star` the theta-shifted ones used as capacities.
    """

    names: tuple[str, ...]
    s: int
    t: int
    edges: dict[tuple[int, int], Fraction]
    theta: Fraction
    w_star: dict[tuple[int, int], Fraction]

    def name(self, i: int) -> str:
        if i == self.s:
            return "s"
        if i == self.t:
            return "t"
        return self.names[i]

    def to_json(self) -> dict:
        # terminal display names dodge collisions with instance vertex ids
        s_name, t_name = "s", "t"
        while s_name in self.names:
            s_name = "_" + s_name
        while t_name in self.names:
            t_name = "_" + t_name
        label = {self.s: s_name, self.t: t_name}
        name = lambda i: label.get(i, self.names[i] if i < len(self.names) else "?")
        return {
            "vertices": list(self.names) + [s_name, t_name],
            "theta": format_rational(self.theta),
            "edges": [
                {
                    "u": name(i),
                    "v": name(j),
                    "w": format_rational(self.edges[i, j]),
                    "w_star": format_rational(self.w_star[i, j]),
                }
                for (i, j) in sorted(self.edges)
            ],
        }


def _require_property(instance: Instance, prop: str) -> None:
    checks = {"a": "property_a", "b": "property_b", "c": "property_c"}[prop]
    for key, m in instance.family.items():
        if not getattr(m, checks)():
            raise PreconditionViolated(prop, f"matrix {key!r} fails it")


def solve_trivial_b(instance: Instance) -> Solution:
    """All vertices on side 1; optimal when every matrix has m11 maximal."""
    _require_property(instance, "b")
    partition = Partition(x1=frozenset(instance.vertices), x2=frozenset())
    weight = sum((a.cost * instance.family[a.matrix_id].m11 for a in instance.arcs), Fraction(0))
    return Solution(partition=partition, weight=weight, method=Method.TRIVIAL_ALL_X1)


def solve_trivial_c(instance: Instance) -> Solution:
    """All vertices on side 2; optimal when every matrix has m22 maximal."""
    _require_property(instance, "c")
    partition = Partition(x1=frozenset(), x2=frozenset(instance.vertices))
    weight = sum((a.cost * instance.family[a.matrix_id].m22 for a in instance.arcs), Fraction(0))
    return Solution(partition=partition, weight=weight, method=Method.TRIVIAL_ALL_X2)


def build_cut_graph(instance: Instance) -> CutGraph:
    """Accumulate the five per-arc weight rules, then apply the theta shift."""
    _require_property(instance, "a")
    index = instance.vertex_index()
    n = len(instance.vertices)
    s, t = n, n + 1

    edges: dict[tuple[int, int], Fraction] = {}
    for i in range(n):
        edges[i, s] = Fraction(0)
        edges[i, t] = Fraction(0)

    def key(i: int, j: int) -> tuple[int, int]:
        return (i, j) if i < j else (j, i)

    def add(i: int, j: int, value: Fraction) -> None:
        k = key(i, j)
        edges[k] = edges.get(k, Fraction(0)) + value

    for arc in instance.arcs:
        u, v = index[arc.tail], index[arc.head]
        m = instance.family[arc.matrix_id]
        c = arc.cost
        add(u, v, c * (m.m11 + m.m22 - m.m12 - m.m21) / 2)
        add(s, u, c * (-m.m22) / 2)
        add(s, v, c * (-m.m22) / 2)
        add(t, u, c * (m.m21 - m.m11 - m.m12) / 2)
        add(t, v, c * (m.m12 - m.m11 - m.m21) / 2)

    theta = min(edges.values()) if edges else Fraction(0)
    w_star = {}
    for (i, j), w in edges.items():
        shifted = w - theta if (s in (i, j) or t in (i, j)) else w
        w_star[i, j] = shifted

    for (i, j), w in edges.items():
        if s not in (i, j) and t not in (i, j) and w < 0:
            raise InternalCheckFailed(f"non-terminal edge {i},{j} has negative weight {w}")
    for (i, j), w in w_star.items():
        if w < 0:
            raise InternalCheckFailed(f"shifted weight of edge {i},{j} is negative: {w}")

    return CutGraph(
        names=instance.vertices, s=s, t=t, edges=edges, theta=theta, w_star=dict(sorted(w_star.items()))
    )


def min_st_cut(graph: CutGraph) -> tuple[Fraction, frozenset[int]]:
    """Minimum (s,t)-cut of H under the shifted weights.

    Capacities are cleared of denominators so the flow algorithm runs on
    exact integers; the cut value is rescaled back.  Returns the cut
    value and the canonical source side (vertices reachable from s in
    the residual network), which contains s and excludes t.
    """
    scale = lcm(*(w.denominator for w in graph.w_star.values())) if graph.w_star else 1
    dinic = Dinic(len(graph.names) + 2)
    for (i, j) in sorted(graph.w_star):
        w = graph.w_star[i, j]
        if w > 0:
            dinic.add_undirected_edge(i, j, w.numerator * (scale // w.denominator))
    flow = dinic.max_flow(graph.s, graph.t)
    side = dinic.residual_reachable(graph.s)
    cut_value = Fraction(flow, scale)
    # strong duality: the flow value must equal the weight crossing the side
    crossing = sum(
        (w for (i, j), w in graph.w_star.items() if (i in side) != (j in side)), Fraction(0)
    )
    if crossing != cut_value:
        raise InternalCheckFailed(
            f"max-flow value {cut_value} does not match its cut weight {crossing}"
        )
    if graph.t in side:
        raise InternalCheckFailed("sink ended up on the source side of the cut")
    return cut_value, side


def solve_mincut(instance: Instance) -> Solution:
    """Optimal partition via the minimum cut of the constructed graph.

    The optimum weight is -(cut value) - |V|*theta; the result is
    re-verified against a direct partition-weight evaluation.  Isolated
    vertices contribute nothing and are placed on side 1.
    """
    graph = build_cut_graph(instance)
    cut_value, side = min_st_cut(graph)
    n = len(instance.vertices)
    x1 = {graph.names[i] for i in side if i < n}
    x1 |= instance.isolated_vertices()
    partition = Partition.from_x1(instance.vertices, x1)
    weight = -cut_value - n * graph.theta
    direct = partition_weight(instance, partition)
    if direct != weight:
        raise InternalCheckFailed(
            f"cut-derived weight {weight} disagrees with recomputed weight {direct}"
        )
    return Solution(partition=partition, weight=weight, method=Method.MIN_CUT)


def solve(instance: Instance, cap: int = DEFAULT_CAP) -> Solution:
    """Dispatch on the family classification.

    Hard families fall back to exhaustive search while the vertex count
    stays within `cap`; beyond that the caller must raise the cap or use
    the local-search heuristic explicitly.
    """
    from .solve_exact import brute_force  # local import: solve_exact imports our types

    verdict = classify(instance.family)
    if verdict.case is Case.POLY_B:
        return solve_trivial_b(instance)
    if verdict.case is Case.POLY_C:
        return solve_trivial_c(instance)
    if verdict.case is Case.POLY_A:
        return solve_mincut(instance)
    if len(instance.vertices) > cap:
        raise HardInstanceTooLarge(len(instance.vertices), cap)
    return brute_force(instance, cap=cap)
