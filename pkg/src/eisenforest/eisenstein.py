"""Eisenstein triples, their twins, and the coprime-pair parameterization.

An Eisenstein triple is an integer triangle (a, b, c) whose angle opposite
the side a is 60 degrees; by the law of cosines that is exactly

    a^2 = b^2 + c^2 - bc.

If (a, b, c) is such a triple then so is (a, b, b - c), its twin. We keep
triples in the canonical order b > c (the equilateral (1, 1, 1), where
b = c, is the single admitted exception) and call a triple primitive when
gcd(a, b, c) = 1.

Every primitive non-equilateral triple arises from a unique pair of
integers (n, m) with 0 < n < m, gcd(n, m) = 1 and m != n (mod 3):

    a = n^2 + nm + m^2,  b = m^2 + 2nm,  c = n^2 + 2nm   (tree form)
                                  or  c = m^2 - n^2      (twin form)

and the two c values are twins of each other. triple_from_pair evaluates
the formulas; pair_from_triple inverts them by reducing the fraction
(a - c) / (b - a), which for a tree-form triple equals m / n exactly.
"""

from math import gcd
from typing import NamedTuple
from enum import Enum

from .errors import (
    DegenerateTwin,
    Equilateral,
    InvalidPair,
    NotEisenstein,
    NotPrimitive,
)


class Triple(NamedTuple):
    """Side lengths of an integer triangle; a is opposite the 60 degree angle."""

    a: int
    b: int
    c: int

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


class Pair(NamedTuple):
    """Parameters (n, m) of a primitive triple, representing the fraction n/m."""

    n: int
    m: int

    def __str__(self) -> str:
        return f"{self.n}/{self.m}"


class TwinForm(Enum):
    """Which of the two companion forms a triple is."""

    TREE = "tree"  # c = n^2 + 2nm, the form the forest generates
    TWIN = "twin"  # c = m^2 - n^2, the twin of a tree-form triple


class TriplePair(NamedTuple):
    """Tree-form triple together with its twin (same a and b, twin c = b - c)."""

    tree: Triple
    twin: Triple


EQUILATERAL = Triple(1, 1, 1)


def is_eisenstein(t: Triple) -> bool:
    """True iff the sides are positive and satisfy a^2 = b^2 + c^2 - bc."""
    a, b, c = t
    return a > 0 and b > 0 and c > 0 and a * a == b * b + c * c - b * c


def is_primitive_eisenstein(t: Triple) -> bool:
    """True iff t is Eisenstein, gcd 1, and ordered b > c (or equals (1,1,1))."""
    if not is_eisenstein(t):
        return False
    a, b, c = t
    if gcd(gcd(a, b), c) != 1:
        return False
    return b > c or t == EQUILATERAL


def pair_violation(p: Pair) -> str | None:
    """Reason p is not a valid parameter pair, or None if it is valid."""
    n, m = p
    if not 0 < n < m:
        return f"need 0 < n < m, got n={n}, m={m}"
    if gcd(n, m) != 1:
        return f"gcd({n},{m}) = {gcd(n, m)} != 1"
    if (m - n) % 3 == 0:
        return f"m - n = {m - n} is divisible by 3"
    return None


def is_valid_pair(p: Pair) -> bool:
    """True iff 0 < n < m, gcd(n, m) = 1 and m != n (mod 3)."""
    return pair_violation(p) is None


def twin(t: Triple) -> Triple:
    """Companion triple (a, b, b - c); an involution on primitive triples.

    Raises DegenerateTwin for (1, 1, 1), whose companion would have a zero
    side, and NotEisenstein (or NotPrimitive) for anything that is not a
    primitive ordered Eisenstein triple.
    """
    if t == EQUILATERAL:
        raise DegenerateTwin("(1,1,1) has no twin: b - c would be 0")
    _require_primitive(t)
    return Triple(t.a, t.b, t.b - t.c)


def triple_from_pair(p: Pair) -> TriplePair:
    """Evaluate the parameterization at p, giving the tree/twin companion pair.

    Raises InvalidPair when p violates any pair invariant; in particular
    m = n (mod 3) would make all three sides divisible by 3.
    """
    reason = pair_violation(p)
    if reason is not None:
        raise InvalidPair(reason)
    n, m = p
    a = n * n + n * m + m * m
    b = m * m + 2 * n * m
    return TriplePair(
        tree=Triple(a, b, n * n + 2 * n * m),
        twin=Triple(a, b, m * m - n * n),
    )


def pair_from_triple(t: Triple) -> tuple[Pair, TwinForm]:
    """Recover the unique pair generating t, and which form t is.

    The candidate pair is read off the reduced fraction
    (a - c) / (b - a) = m / n, then confirmed by re-evaluating the
    parameterization; if t itself does not reconstruct, its twin must,
    since exactly one member of each companion pair is tree-form.
    """
    if not is_eisenstein(t):
        raise NotEisenstein(f"{t}: a^2 != b^2 + c^2 - bc")
    if t == EQUILATERAL:
        raise Equilateral("(1,1,1) has no parameter pair")
    _require_primitive(t)

    cand = _tree_candidate(t)
    if cand is not None:
        return cand, TwinForm.TREE
    cand = _tree_candidate(Triple(t.a, t.b, t.b - t.c))
    if cand is not None:
        return cand, TwinForm.TWIN
    raise RuntimeError(f"no pair reconstructs {t}; parameterization broken")


def _require_primitive(t: Triple) -> None:
    if not is_eisenstein(t):
        raise NotEisenstein(f"{t}: a^2 != b^2 + c^2 - bc")
    a, b, c = t
    g = gcd(gcd(a, b), c)
    if g != 1:
        raise NotPrimitive(f"{t}: gcd = {g}")
    if b <= c and t != EQUILATERAL:
        raise NotPrimitive(f"{t}: sides must be ordered b > c")


def _tree_candidate(t: Triple) -> Pair | None:
    """Pair reproducing t as a tree-form triple, if any.

    For a primitive ordered Eisenstein triple, c < a < b always, so both
    differences below are positive.
    """
    g = gcd(t.a - t.c, t.b - t.a)
    p = Pair((t.b - t.a) // g, (t.a - t.c) // g)
    if is_valid_pair(p) and triple_from_pair(p).tree == t:
        return p
    return None
