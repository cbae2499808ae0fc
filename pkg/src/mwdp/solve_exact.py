"""Exhaustive and heuristic solvers for hard matrix families.

`brute_force` is the toolkit's universal oracle: it enumerates all
2^k side assignments of the non-isolated vertices.  Per-arc
contributions are scaled to a common denominator once, so the inner
loop runs on exact integers; when they fit comfortably in int64 the
enumeration is vectorized with numpy in chunks.  Ties are broken
globally by the lexicographically smallest side-1 membership bitmask
(vertices in declaration order), with isolated vertices always placed
on side 1.

`local_search` is a deterministic 1-flip hill climber.  Restart index
r < 2^k starts from the assignment with bitmask r, so with at least
2^k restarts the search provably covers the optimum; higher restart
indices draw random starts from a stream derived from (seed, r), which
keeps results reproducible across thread counts.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import lcm

import numpy as np

from .core import Instance, Partition, arc_tables
from .errors import InputError, TooLarge
from .solve_poly import DEFAULT_CAP, Method, Solution

_NUMPY_MIN_BITS = 14
_CHUNK_BITS = 18
_INT64_SAFE = 1 << 60


def _scaled_rows(instance: Instance, position: dict[str, int]):
    """Integer contribution rows (ti, hi, w22, w21, w12, w11) and their scale.

    Row order matches `2*tail_bit + head_bit` indexing where bit 1 means
    side 1.
    """
    index_to_name = list(instance.vertices)
    rows = []
    denominators = [1]
    tables = arc_tables(instance)
    for (ti, hi, w11, w12, w21, w22) in tables:
        denominators += [w11.denominator, w12.denominator, w21.denominator, w22.denominator]
    scale = lcm(*denominators)
    for (ti, hi, w11, w12, w21, w22) in tables:
        rows.append(
            (
                position[index_to_name[ti]],
                position[index_to_name[hi]],
                int(w22 * scale),
                int(w21 * scale),
                int(w12 * scale),
                int(w11 * scale),
            )
        )
    return rows, scale


def _enumerate_python(rows, k: int) -> tuple[int, int]:
    best_val = None
    best_mask = 0
    for mask in range(1 << k):
        total = 0
        for ti, hi, w22, w21, w12, w11 in rows:
            bt = (mask >> (k - 1 - ti)) & 1
            bh = (mask >> (k - 1 - hi)) & 1
            total += (w22, w21, w12, w11)[2 * bt + bh]
        if best_val is None or total > best_val:
            best_val, best_mask = total, mask
    return best_val if best_val is not None else 0, best_mask


def _enumerate_numpy(rows, k: int) -> tuple[int, int]:
    best_val = None
    best_mask = 0
    total_masks = 1 << k
    chunk = 1 << _CHUNK_BITS
    for lo in range(0, total_masks, chunk):
        hi = min(lo + chunk, total_masks)
        masks = np.arange(lo, hi, dtype=np.int64)
        totals = np.zeros(hi - lo, dtype=np.int64)
        bit_cache: dict[int, np.ndarray] = {}

        def bits_of(j: int) -> np.ndarray:
            arr = bit_cache.get(j)
            if arr is None:
                arr = (masks >> (k - 1 - j)) & 1
                bit_cache[j] = arr
            return arr

        for ti, hj, w22, w21, w12, w11 in rows:
            bt = bits_of(ti)
            bh = bits_of(hj)
            totals += w22
            if w12 != w22:
                totals += bt * (w12 - w22)
            if w21 != w22:
                totals += bh * (w21 - w22)
            cross = w11 + w22 - w12 - w21
            if cross:
                totals += (bt & bh) * cross
        idx = int(np.argmax(totals))
        val = int(totals[idx])
        if best_val is None or val > best_val:
            best_val, best_mask = val, lo + idx
    return best_val if best_val is not None else 0, best_mask


def brute_force(instance: Instance, cap: int = DEFAULT_CAP) -> Solution:
    """Globally optimal partition by exhaustive enumeration."""
    n = len(instance.vertices)
    if n > cap:
        raise TooLarge(n, cap)
    isolated = instance.isolated_vertices()
    free = [v for v in instance.vertices if v not in isolated]
    k = len(free)
    position = {v: j for j, v in enumerate(free)}
    rows, scale = _scaled_rows(instance, position)

    if k == 0:
        best_val, best_mask = 0, 0
    else:
        magnitude = sum(max(abs(w) for w in row[2:]) for row in rows) if rows else 0
        if k >= _NUMPY_MIN_BITS and 8 * magnitude < _INT64_SAFE:
            best_val, best_mask = _enumerate_numpy(rows, k)
        else:
            best_val, best_mask = _enumerate_python(rows, k)

    x1 = set(isolated)
    x1.update(free[j] for j in range(k) if (best_mask >> (k - 1 - j)) & 1)
    return Solution(
        partition=Partition.from_x1(instance.vertices, x1),
        weight=Fraction(best_val, scale),
        method=Method.BRUTE_FORCE,
    )


def _climb(rows, incidence, k: int, mask: int) -> tuple[int, int]:
    """First-improvement 1-flip hill climb from `mask`; returns (value, mask)."""
    sides = [(mask >> (k - 1 - j)) & 1 for j in range(k)]
    value = 0
    for ti, hi, w22, w21, w12, w11 in rows:
        value += (w22, w21, w12, w11)[2 * sides[ti] + sides[hi]]
    improved = True
    while improved:
        improved = False
        for j in range(k):
            delta = 0
            bj = sides[j]
            for row in incidence[j]:
                ti, hi, w22, w21, w12, w11 = row
                table = (w22, w21, w12, w11)
                bt, bh = sides[ti], sides[hi]
                old = table[2 * bt + bh]
                nbt = 1 - bt if ti == j else bt
                nbh = 1 - bh if hi == j else bh
                delta += table[2 * nbt + nbh] - old
            if delta > 0:
                sides[j] = 1 - bj
                value += delta
                improved = True
    out_mask = 0
    for j in range(k):
        if sides[j]:
            out_mask |= 1 << (k - 1 - j)
    return value, out_mask


def local_search(
    instance: Instance, seed: int = 0, restarts: int = 32, threads: int = 1
) -> Solution:
    """Best 1-flip local optimum over deterministic restarts.

    The reported method is distinct from the exact solvers so callers
    can never mistake the result for a certified optimum.
    """
    if restarts < 1:
        raise InputError("restarts must be at least 1")
    if threads < 1:
        raise InputError("threads must be at least 1")
    isolated = instance.isolated_vertices()
    free = [v for v in instance.vertices if v not in isolated]
    k = len(free)
    position = {v: j for j, v in enumerate(free)}
    rows, scale = _scaled_rows(instance, position)
    incidence = [[] for _ in range(k)]
    for row in rows:
        incidence[row[0]].append(row)
        if row[1] != row[0]:
            incidence[row[1]].append(row)

    def start_mask(r: int) -> int:
        if k < 60 and r < (1 << k):
            return r
        rng = random.Random(f"{seed}:{r}")
        return rng.getrandbits(k)

    def run(r: int) -> tuple[int, int]:
        if k == 0:
            return 0, 0
        return _climb(rows, incidence, k, start_mask(r))

    if threads > 1 and restarts > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, range(restarts)))
    else:
        results = [run(r) for r in range(restarts)]

    # deterministic merge regardless of completion order: best value,
    # then lexicographically smallest side-1 bitmask
    best_val, best_mask = max(results, key=lambda vm: (vm[0], -vm[1]))

    x1 = set(isolated)
    x1.update(free[j] for j in range(k) if (best_mask >> (k - 1 - j)) & 1)
    return Solution(
        partition=Partition.from_x1(instance.vertices, x1),
        weight=Fraction(best_val, scale),
        method=Method.LOCAL_SEARCH,
    )
