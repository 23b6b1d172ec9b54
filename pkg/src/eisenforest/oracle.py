"""Brute-force enumerators and the exactly-once verifier.

Nothing here goes through the forest machinery: triples come from a raw
search over the quadratic identity, pairs from a filtered double loop,
and tree membership from the classical mediant construction. That keeps
these routines independent witnesses against the generating side, so a
bug in the shared parameterization cannot confirm itself.

All perfect-square decisions are exact integer comparisons; the large
vectorized path only uses floating point to seed an integer square root
that is then corrected and checked in int64.
"""

from collections import Counter
from math import gcd, isqrt
from typing import NamedTuple

import numpy as np

from .eisenstein import Pair, Triple
from .forest import enumerate_all_triples

# Above this bound the int64-vectorized scan takes over from the plain loop.
_VECTOR_CUTOFF = 1500
# float64 sqrt seeds an isqrt within +-1 only while values stay below 2^52.
_VECTOR_LIMIT = isqrt(2**52) // 2


class VerificationReport(NamedTuple):
    """Outcome of comparing forest output against the brute-force set."""

    bound: int
    forest_count: int
    oracle_count: int
    missing: tuple[Triple, ...]
    duplicated: tuple[Triple, ...]
    ok: bool


def brute_triples(max_a: int) -> set[Triple]:
    """All primitive ordered Eisenstein triples with a <= max_a, by search.

    For each a and each b in (a, 2a/sqrt(3)], solve c^2 - bc + b^2 = a^2:
    the discriminant 4a^2 - 3b^2 must be a perfect square s^2 with b - s
    even, and the two roots (b -+ s)/2 are exactly a twin pair of c
    values. The equilateral (1, 1, 1) never appears (it would need b = c).
    """
    if max_a < 1:
        return set()
    if max_a > _VECTOR_CUTOFF:
        return _scan_vectorized(max_a)
    return _scan_plain(max_a)


def _scan_plain(max_a: int) -> set[Triple]:
    found: set[Triple] = set()
    for a in range(1, max_a + 1):
        aa4 = 4 * a * a
        b = a + 1
        while 3 * b * b <= aa4:
            disc = aa4 - 3 * b * b
            s = isqrt(disc)
            if s * s == disc and (b - s) % 2 == 0:
                c = (b - s) // 2
                # gcd(a, b, c) = gcd(a, b, b - c), so one check covers both roots
                if c >= 1 and gcd(gcd(a, b), c) == 1:
                    found.add(Triple(a, b, c))
                    found.add(Triple(a, b, b - c))
            b += 1
    return found


def _scan_vectorized(max_a: int) -> set[Triple]:
    if max_a > _VECTOR_LIMIT:
        raise ValueError(f"max_a > {_VECTOR_LIMIT} exceeds the exact int64 range")
    found: set[Triple] = set()
    for a in range(2, max_a + 1):
        aa4 = 4 * a * a
        hi = isqrt(aa4 // 3)
        if 3 * (hi + 1) * (hi + 1) <= aa4:
            hi += 1
        if hi <= a:
            continue
        b = np.arange(a + 1, hi + 1, dtype=np.int64)
        disc = aa4 - 3 * b * b
        s = np.sqrt(disc.astype(np.float64)).astype(np.int64)
        s = np.where((s + 1) * (s + 1) <= disc, s + 1, s)
        s = np.where(s * s > disc, s - 1, s)
        mask = (s * s == disc) & ((b - s) & 1 == 0) & (b - s >= 2)
        for bb, ss in zip(b[mask].tolist(), s[mask].tolist()):
            c = (bb - ss) // 2
            if gcd(gcd(a, bb), c) == 1:
                found.add(Triple(a, bb, c))
                found.add(Triple(a, bb, bb - c))
    return found


def brute_pairs(max_m: int) -> set[Pair]:
    """All pairs with m <= max_m passing the coprime and mod-3 filters."""
    return {
        Pair(n, m)
        for m in range(2, max_m + 1)
        for n in range(1, m)
        if gcd(n, m) == 1 and (m - n) % 3 != 0
    }


def sb_modified_pairs(depth: int) -> set[Pair]:
    """Survivors of the filtered mediant tree, levels 1..depth.

    Level 1 is the mediant of 0/1 and 1/1, i.e. 1/2; each node brackets
    its two children. Nodes with m = n (mod 3) are dropped from the
    result but their subtrees are still descended.
    """
    out: set[Pair] = set()
    level = [((0, 1), (1, 1))]
    for _ in range(depth):
        nxt = []
        for lo, hi in level:
            n, m = lo[0] + hi[0], lo[1] + hi[1]
            if (m - n) % 3 != 0:
                out.add(Pair(n, m))
            nxt.append((lo, (n, m)))
            nxt.append(((n, m), hi))
        level = nxt
    return out


def sb_depth(p: Pair) -> int:
    """Level at which n/m appears in the unfiltered mediant tree.

    Locates the fraction by binary descent (exact cross-multiplied
    comparisons), so membership is demonstrated constructively rather
    than assumed from theory.
    """
    n, m = p
    if not 0 < n < m or gcd(n, m) != 1:
        raise ValueError(f"{p} is not a reduced fraction in (0, 1)")
    lo, hi = (0, 1), (1, 1)
    for depth in range(1, n + m + 1):
        mid = (lo[0] + hi[0], lo[1] + hi[1])
        if mid == (n, m):
            return depth
        if n * mid[1] < mid[0] * m:
            hi = mid
        else:
            lo = mid
    raise RuntimeError(f"mediant descent failed to reach {p}")


def verify_bijection(max_a: int) -> VerificationReport:
    """Compare forest output (tree + twin forms) with the brute-force set.

    ok means: nothing missing, nothing duplicated, and the counts agree,
    i.e. the two independently computed collections are equal as sets.
    """
    forest = enumerate_all_triples(max_a, include_equilateral=False)
    counts = Counter(forest)
    oracle = brute_triples(max_a)
    missing = tuple(sorted(oracle - counts.keys()))
    duplicated = tuple(sorted(t for t, k in counts.items() if k > 1))
    ok = not missing and not duplicated and len(forest) == len(oracle)
    return VerificationReport(max_a, len(forest), len(oracle), missing, duplicated, ok)
