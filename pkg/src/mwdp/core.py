"""Domain types, exact arithmetic and weight evaluation.

Everything is exact: matrix entries and arc costs are rationals
(`fractions.Fraction`), so the strict/non-strict comparisons the
classifier and the cut construction rely on can never be blurred by
floating point.  Inputs are parsed from integers, decimal strings or
"p/q" strings; floats are rejected unless they are integral.

All types here are immutable after validation and safe to share across
threads; the operations are pure functions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    DuplicateArc,
    InputError,
    KindViolation,
    NegativeCost,
    SelfLoop,
    UnknownMatrix,
    UnknownVertex,
    ValidationError,
)

Rational = Fraction


def parse_rational(value) -> Fraction:
    """Parse an integer, a decimal string like "2.5", or a "p/q" string."""
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if value.is_integer():
            return Fraction(int(value))
        raise InputError(
            f"non-integral float {value!r}: write it as a string (\"p/q\" or decimal) "
            "to keep the arithmetic exact"
        )
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse rational from {value!r}") from exc
    raise InputError(f"cannot parse rational from {value!r}")


def format_rational(q: Fraction):
    """Integers serialize as JSON numbers, everything else as "p/q"."""
    if q.denominator == 1:
        return int(q)
    return f"{q.numerator}/{q.denominator}"


class Kind(Enum):
    GENERAL = "general"
    ORIENTED = "oriented"
    SYMMETRIC = "symmetric"

    @classmethod
    def parse(cls, text: str) -> "Kind":
        try:
            return cls(text)
        except ValueError:
            raise InputError(
                f"unknown kind {text!r}; expected general, oriented or symmetric"
            ) from None


@dataclass(frozen=True)
class Matrix2x2:
    """A 2x2 rational weight matrix.

    Entry m_rc applies when the arc tail is on side r and the head on
    side c of the partition (side 1 first).
    """

    m11: Fraction
    m12: Fraction
    m21: Fraction
    m22: Fraction

    def entries(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.m11, self.m12, self.m21, self.m22)

    def property_a(self) -> bool:
        """Diagonal sum dominates the anti-diagonal sum."""
        return self.m11 + self.m22 >= self.m12 + self.m21

    def property_b(self) -> bool:
        """m11 is a maximum entry."""
        return self.m11 == max(self.entries())

    def property_c(self) -> bool:
        """m22 is a maximum entry."""
        return self.m22 == max(self.entries())

    def max_entry(self) -> Fraction:
        return max(self.entries())

    def min_entry(self) -> Fraction:
        return min(self.entries())

    def transposed(self) -> "Matrix2x2":
        return Matrix2x2(self.m11, self.m21, self.m12, self.m22)

    def rotated(self) -> "Matrix2x2":
        """180-degree rotation: swaps the roles of the two partition sides.

        For every arc and partition, this matrix under the complemented
        partition yields the same weight as the original matrix under the
        original partition.
        """
        return Matrix2x2(self.m22, self.m21, self.m12, self.m11)

    @classmethod
    def parse(cls, obj) -> "Matrix2x2":
        if (
            not isinstance(obj, (list, tuple))
            or len(obj) != 2
            or any(not isinstance(row, (list, tuple)) or len(row) != 2 for row in obj)
        ):
            raise InputError(f"a matrix must be [[m11,m12],[m21,m22]], got {obj!r}")
        (a, b), (c, d) = obj
        return cls(parse_rational(a), parse_rational(b), parse_rational(c), parse_rational(d))

    def to_json(self):
        return [
            [format_rational(self.m11), format_rational(self.m12)],
            [format_rational(self.m21), format_rational(self.m22)],
        ]


def matrix_from_ints(m11, m12, m21, m22) -> Matrix2x2:
    return Matrix2x2(Fraction(m11), Fraction(m12), Fraction(m21), Fraction(m22))


@dataclass(frozen=True)
class Arc:
    tail: str
    head: str
    cost: Fraction
    matrix_id: str

    def __str__(self) -> str:
        return f"{self.tail}->{self.head}"


@dataclass(frozen=True)
class Instance:
    """A digraph with per-arc costs and matrix assignments.

    `vertices` keeps the declaration order, which all solvers use for
    deterministic tie-breaking.
    """

    kind: Kind
    vertices: tuple[str, ...]
    arcs: tuple[Arc, ...]
    family: Mapping[str, Matrix2x2]

    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def matrix_of(self, arc: Arc) -> Matrix2x2:
        return self.family[arc.matrix_id]

    def isolated_vertices(self) -> frozenset[str]:
        touched = set()
        for a in self.arcs:
            touched.add(a.tail)
            touched.add(a.head)
        return frozenset(v for v in self.vertices if v not in touched)

    @classmethod
    def from_json(cls, obj) -> "Instance":
        if not isinstance(obj, dict):
            raise InputError("instance JSON must be an object")
        for key in ("kind", "matrices", "vertices", "arcs"):
            if key not in obj:
                raise InputError(f"instance JSON is missing the {key!r} field")
        kind = Kind.parse(obj["kind"])
        family = {str(k): Matrix2x2.parse(v) for k, v in obj["matrices"].items()}
        vertices = tuple(str(v) for v in obj["vertices"])
        arcs = []
        for raw in obj["arcs"]:
            if not isinstance(raw, dict):
                raise InputError(f"arc entries must be objects, got {raw!r}")
            try:
                arcs.append(
                    Arc(
                        tail=str(raw["tail"]),
                        head=str(raw["head"]),
                        cost=parse_rational(raw["c"]),
                        matrix_id=str(raw["matrix"]),
                    )
                )
            except KeyError as exc:
                raise InputError(f"arc entry {raw!r} is missing field {exc}") from None
        return cls(kind=kind, vertices=vertices, arcs=tuple(arcs), family=family)

    @classmethod
    def from_json_str(cls, text: str) -> "Instance":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from None
        return cls.from_json(obj)

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "matrices": {k: m.to_json() for k, m in self.family.items()},
            "vertices": list(self.vertices),
            "arcs": [
                {
                    "tail": a.tail,
                    "head": a.head,
                    "c": format_rational(a.cost),
                    "matrix": a.matrix_id,
                }
                for a in self.arcs
            ],
        }


@dataclass(frozen=True)
class Partition:
    """A bipartition (x1, x2) of the vertex set."""

    x1: frozenset[str]
    x2: frozenset[str]

    @classmethod
    def from_x1(cls, vertices: Iterable[str], x1: Iterable[str]) -> "Partition":
        x1 = frozenset(x1)
        return cls(x1=x1, x2=frozenset(vertices) - x1)

    def side_of(self, v: str) -> int:
        if v in self.x1:
            return 1
        if v in self.x2:
            return 2
        raise UnknownVertex(f"vertex {v!r} is not covered by the partition")


def validate(instance: Instance) -> None:
    """Check every structural invariant; raises a named error on the first violation."""
    index = {}
    for v in instance.vertices:
        if v in index:
            raise ValidationError(f"duplicate vertex id {v!r}")
        index[v] = len(index)
    seen_pairs = set()
    for arc in instance.arcs:
        if arc.tail not in index:
            raise UnknownVertex(f"arc {arc}: unknown tail vertex {arc.tail!r}")
        if arc.head not in index:
            raise UnknownVertex(f"arc {arc}: unknown head vertex {arc.head!r}")
        if arc.tail == arc.head:
            raise SelfLoop(f"arc {arc} is a self-loop")
        pair = (arc.tail, arc.head)
        if pair in seen_pairs:
            raise DuplicateArc(f"arc {arc} appears more than once")
        seen_pairs.add(pair)
        if arc.cost < 0:
            raise NegativeCost(f"arc {arc} has negative cost {arc.cost}")
        if arc.matrix_id not in instance.family:
            raise UnknownMatrix(f"arc {arc} references unknown matrix {arc.matrix_id!r}")
    if instance.kind is Kind.ORIENTED:
        for tail, head in seen_pairs:
            if (head, tail) in seen_pairs:
                raise KindViolation(
                    f"oriented instance contains both {tail}->{head} and {head}->{tail}"
                )
    elif instance.kind is Kind.SYMMETRIC:
        for tail, head in seen_pairs:
            if (head, tail) not in seen_pairs:
                raise KindViolation(
                    f"symmetric instance has arc {tail}->{head} without its opposite"
                )


def arc_weight(arc: Arc, matrix: Matrix2x2, partition: Partition) -> Fraction:
    """Cost times the matrix entry selected by the endpoint sides."""
    tail_side = partition.side_of(arc.tail)
    head_side = partition.side_of(arc.head)
    if tail_side == 1:
        entry = matrix.m11 if head_side == 1 else matrix.m12
    else:
        entry = matrix.m21 if head_side == 1 else matrix.m22
    return arc.cost * entry


def partition_weight(instance: Instance, partition: Partition) -> Fraction:
    total = Fraction(0)
    for arc in instance.arcs:
        total += arc_weight(arc, instance.family[arc.matrix_id], partition)
    return total


def arc_tables(instance: Instance) -> list[tuple[int, int, Fraction, Fraction, Fraction, Fraction]]:
    """Per-arc lookup rows (tail_idx, head_idx, w11, w12, w21, w22).

    w_rc is the arc's contribution when the tail is on side r and the
    head on side c.  Solvers share this precomputation.
    """
    index = instance.vertex_index()
    rows = []
    for arc in instance.arcs:
        m = instance.family[arc.matrix_id]
        c = arc.cost
        rows.append(
            (index[arc.tail], index[arc.head], c * m.m11, c * m.m12, c * m.m21, c * m.m22)
        )
    return rows
