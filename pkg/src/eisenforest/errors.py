"""Shared exception vocabulary.

Everything raised on purpose by this package derives from ForestError, so
callers can catch one type at the boundary. Predicates (is_* functions)
never raise on in-domain input; constructive operations raise the specific
subtype naming the violated precondition.
"""


class ForestError(Exception):
    """Base class for all domain errors raised by this package."""


class NotEisenstein(ForestError):
    """The side lengths do not satisfy a^2 = b^2 + c^2 - bc, or fail the
    stricter requirements of the operation (see NotPrimitive)."""


class NotPrimitive(NotEisenstein):
    """The quadratic identity holds but gcd(a, b, c) > 1, or the sides are
    not in the canonical b > c order. Subclass of NotEisenstein so a single
    except clause covers both rejection reasons."""


class Equilateral(ForestError):
    """The triple (1, 1, 1), which sits outside the two trees and has no
    coprime-pair preimage."""


class DegenerateTwin(Equilateral):
    """Twin of (1, 1, 1) would have a zero side."""


class InvalidPair(ForestError):
    """A pair (n, m) violating 0 < n < m, gcd(n, m) = 1, or m != n (mod 3)."""


class NotForestTriple(ForestError):
    """A triple that is not a tree node of the forest (wrong form, or not a
    primitive Eisenstein triple at all)."""


class NotUnimodular(ForestError):
    """Matrix determinant is not +1 or -1, so no exact integer inverse."""
