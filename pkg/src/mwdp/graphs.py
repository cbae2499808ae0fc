"""Plain graph input types used by the reductions and application adapters."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import parse_rational
from .errors import BadColor, InputError, ValidationError


def _check_vertices(vertices) -> tuple[str, ...]:
    out = tuple(str(v) for v in vertices)
    seen = set()
    for v in out:
        if v in seen:
            raise ValidationError(f"duplicate vertex id {v!r}")
        seen.add(v)
    return out


@dataclass(frozen=True)
class UndirectedGraph:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    @classmethod
    def from_json(cls, obj) -> "UndirectedGraph":
        if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
            raise InputError('graph JSON must be {"vertices": [...], "edges": [[u,v], ...]}')
        vertices = _check_vertices(obj["vertices"])
        known = set(vertices)
        edges = []
        seen = set()
        for raw in obj["edges"]:
            if not isinstance(raw, (list, tuple)) or len(raw) != 2:
                raise InputError(f"edge entries must be pairs, got {raw!r}")
            u, v = str(raw[0]), str(raw[1])
            if u == v:
                raise ValidationError(f"edge {u!r}-{v!r} is a loop")
            if u not in known or v not in known:
                raise ValidationError(f"edge {u!r}-{v!r} uses an undeclared vertex")
            key = frozenset((u, v))
            if key in seen:
                raise ValidationError(f"duplicate edge {u!r}-{v!r}")
            seen.add(key)
            edges.append((u, v))
        return cls(vertices=vertices, edges=tuple(edges))

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class WeightedDigraph:
    """Simple digraph with nonnegative rational arc weights (default 1)."""

    vertices: tuple[str, ...]
    arcs: tuple[tuple[str, str, Fraction], ...]

    @classmethod
    def from_json(cls, obj) -> "WeightedDigraph":
        if not isinstance(obj, dict) or "vertices" not in obj or "arcs" not in obj:
            raise InputError(
                'digraph JSON must be {"vertices": [...], "arcs": [{"tail":..,"head":..,"w":..}, ...]}'
            )
        vertices = _check_vertices(obj["vertices"])
        known = set(vertices)
        arcs = []
        seen = set()
        for raw in obj["arcs"]:
            if isinstance(raw, (list, tuple)) and len(raw) == 2:
                tail, head, w = str(raw[0]), str(raw[1]), Fraction(1)
            elif isinstance(raw, dict):
                try:
                    tail, head = str(raw["tail"]), str(raw["head"])
                except KeyError as exc:
                    raise InputError(f"arc entry {raw!r} is missing field {exc}") from None
                w = parse_rational(raw.get("w", 1))
            else:
                raise InputError(f"arc entries must be pairs or objects, got {raw!r}")
            if tail == head:
                raise ValidationError(f"arc {tail}->{head} is a self-loop")
            if tail not in known or head not in known:
                raise ValidationError(f"arc {tail}->{head} uses an undeclared vertex")
            if (tail, head) in seen:
                raise ValidationError(f"duplicate arc {tail}->{head}")
            seen.add((tail, head))
            arcs.append((tail, head, w))
        return cls(vertices=vertices, arcs=tuple(arcs))


@dataclass(frozen=True)
class ColoredGraph:
    """Undirected graph with 2-colored, optionally weighted edges."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, int, Fraction], ...]

    @classmethod
    def from_json(cls, obj) -> "ColoredGraph":
        if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
            raise InputError(
                'colored graph JSON must be '
                '{"vertices": [...], "edges": [{"u":..,"v":..,"color":1|2,"w":..}, ...]}'
            )
        vertices = _check_vertices(obj["vertices"])
        known = set(vertices)
        edges = []
        seen = set()
        for raw in obj["edges"]:
            if not isinstance(raw, dict):
                raise InputError(f"colored edge entries must be objects, got {raw!r}")
            try:
                u, v, color = str(raw["u"]), str(raw["v"]), raw["color"]
            except KeyError as exc:
                raise InputError(f"edge entry {raw!r} is missing field {exc}") from None
            if color not in (1, 2):
                raise BadColor(f"edge {u!r}-{v!r} has color {color!r}; expected 1 or 2")
            w = parse_rational(raw.get("w", 1))
            if u == v:
                raise ValidationError(f"edge {u!r}-{v!r} is a loop")
            if u not in known or v not in known:
                raise ValidationError(f"edge {u!r}-{v!r} uses an undeclared vertex")
            key = frozenset((u, v))
            if key in seen:
                raise ValidationError(f"duplicate edge {u!r}-{v!r}")
            seen.add(key)
            edges.append((u, v, int(color), w))
        return cls(vertices=vertices, edges=tuple(edges))
