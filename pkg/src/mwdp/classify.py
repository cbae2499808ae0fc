"""Tractability classification of a matrix family.

A family is polynomial-time solvable when every matrix satisfies one
common property: (a) m11+m22 >= m12+m21, (b) m11 maximal, or (c) m22
maximal.  Otherwise the partition problem over that family is hard and
we report, for each property, the first matrix violating it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Optional

from .core import Matrix2x2
from .errors import EmptyFamily, InternalCheckFailed


class Case(Enum):
    POLY_A = "poly_a"
    POLY_B = "poly_b"
    POLY_C = "poly_c"
    HARD = "hard"


@dataclass(frozen=True)
class Verdict:
    case: Case
    per_matrix: dict[str, tuple[bool, bool, bool]]
    # for the hard case: matrix ids violating properties a, b, c (may coincide)
    witnesses: Optional[dict[str, str]]

    def to_json(self) -> dict:
        return {
            "case": self.case.value,
            "per_matrix": {
                k: {"a": a, "b": b, "c": c} for k, (a, b, c) in self.per_matrix.items()
            },
            "witnesses": dict(self.witnesses) if self.witnesses is not None else None,
        }


def classify(family: Mapping[str, Matrix2x2]) -> Verdict:
    """Decide the tractability case of `family`.

    When several polynomial cases hold simultaneously the cheapest
    solver wins: all-(b) and all-(c) admit constant-time partitions
    while all-(a) needs a max-flow run, so the priority is b > c > a.
    Iteration follows the family's declaration order, which makes the
    hard-case witnesses deterministic.
    """
    if not family:
        raise EmptyFamily("cannot classify an empty matrix family")
    per_matrix: dict[str, tuple[bool, bool, bool]] = {}
    first_violator = {"a": None, "b": None, "c": None}
    for key, m in family.items():
        flags = (m.property_a(), m.property_b(), m.property_c())
        # b and c together force m11 = m22 = max, hence a; a per-matrix table
        # claiming otherwise would be arithmetically impossible.
        if flags[1] and flags[2] and not flags[0]:
            raise InternalCheckFailed(f"matrix {key!r}: (b) and (c) hold but (a) fails")
        per_matrix[key] = flags
        for prop, idx in (("a", 0), ("b", 1), ("c", 2)):
            if not flags[idx] and first_violator[prop] is None:
                first_violator[prop] = key
    if first_violator["b"] is None:
        return Verdict(Case.POLY_B, per_matrix, None)
    if first_violator["c"] is None:
        return Verdict(Case.POLY_C, per_matrix, None)
    if first_violator["a"] is None:
        return Verdict(Case.POLY_A, per_matrix, None)
    return Verdict(Case.HARD, per_matrix, dict(first_violator))
