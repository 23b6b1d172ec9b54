"""The quintic forest of parameter pairs.

Reduced fractions n/m in (0, 1) with m != n (mod 3) form two five-ary
trees rooted at 1/2 and 1/3. Writing pairs as column vectors (n, m), the
five children of a node v are the products A_i v, i = 1..5, with

    A_1 = (1 0 / 3 1)   A_2 = (0 1 / 1 3)   A_3 = (1 1 / 2 3)
    A_4 = (1 1 / 3 2)   A_5 = (0 1 / -1 2)

and the second root is S (1, 2) = (1, 3) with S = (1 0 / 1 1). Every
admissible pair is reached exactly once this way. The A_i arise by
conjugating a family F_1..F_5 (which acts on bracket matrices of the
mediant construction) with C = (0 1 / 1 1); both families are kept here
so the conjugation identity A_i = C F_i C^-1 stays testable.

Descent works by inverting the step that produced a node: exactly one
A_i^-1 maps a non-root node to another admissible pair, and which one is
determined by the ratio r = m/n alone. All comparisons cross-multiply, so
everything stays in exact integers.
"""

from collections import deque
from enum import IntEnum
from typing import Iterator, NamedTuple

from .eisenstein import Pair, is_valid_pair, pair_violation
from .errors import InvalidPair
from .intmat import Mat2, mat2_apply

# Bracket-side family: S' appends a level inside the mediant pattern,
# F_1..F_5 step to the five sub-pattern positions.
S_PRIME: Mat2 = ((1, 1), (0, 1))
F_MATS: tuple[Mat2, ...] = (
    ((1, 3), (0, 1)),
    ((2, 3), (1, 1)),
    ((2, 3), (1, 2)),
    ((1, 3), (1, 2)),
    ((1, 0), (1, 1)),
)

# Conjugator turning bracket matrices into direct pair maps.
CONJUGATOR: Mat2 = ((0, 1), (1, 1))

# Pair-side family: children of (n, m) are A_i (n, m); S maps root to root.
S_MAT: Mat2 = ((1, 0), (1, 1))
A_MATS: tuple[Mat2, ...] = (
    ((1, 0), (3, 1)),
    ((0, 1), (1, 3)),
    ((1, 1), (2, 3)),
    ((1, 1), (3, 2)),
    ((0, 1), (-1, 2)),
)


class Root(IntEnum):
    """The two tree roots; the integer value is the exponent of S."""

    A = 0  # pair (1, 2)
    B = 1  # pair (1, 3) = S (1, 2)

    @property
    def pair(self) -> Pair:
        return Pair(1, 2) if self is Root.A else Pair(1, 3)


ROOT_PAIRS = (Root.A.pair, Root.B.pair)


class PathCode(NamedTuple):
    """Forest address: a root plus child indices (in 1..5), root to leaf.

    String syntax: root token "A" or "B", then optionally ":" and the
    steps joined by ".", e.g. "A", "B:4", "A:5.5".
    """

    root: Root
    steps: tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.steps:
            return self.root.name
        return f"{self.root.name}:" + ".".join(str(s) for s in self.steps)

    @classmethod
    def parse(cls, text: str) -> "PathCode":
        """Inverse of str(); raises ValueError on malformed input."""
        head, sep, tail = text.partition(":")
        if head not in ("A", "B") or (sep and not tail):
            raise ValueError(f"bad path {text!r}")
        steps = []
        for tok in tail.split(".") if tail else []:
            if tok not in ("1", "2", "3", "4", "5"):
                raise ValueError(f"bad step {tok!r} in path {text!r}")
            steps.append(int(tok))
        return cls(Root[head], tuple(steps))


class PairParent(NamedTuple):
    """Parent pair plus the child index that leads back down."""

    pair: Pair
    step: int


def constants() -> dict[str, Mat2]:
    """All the fixed 2x2 matrices, keyed by their conventional names."""
    out: dict[str, Mat2] = {"S'": S_PRIME, "S": S_MAT, "C": CONJUGATOR}
    for i, (f, a) in enumerate(zip(F_MATS, A_MATS), start=1):
        out[f"F{i}"] = f
        out[f"A{i}"] = a
    return out


def is_forest_pair(p: Pair) -> bool:
    """Membership predicate: 0 < n < m, gcd(n, m) = 1, m != n (mod 3)."""
    return is_valid_pair(p)


def children_pair(p: Pair) -> tuple[Pair, Pair, Pair, Pair, Pair]:
    """The five children A_i p; entry k is child k+1."""
    _require_pair(p)
    return tuple(Pair(*mat2_apply(a, p)) for a in A_MATS)  # type: ignore[return-value]


def parent_pair(p: Pair) -> Root | PairParent:
    """Undo one child step, or identify p as a root.

    The child maps partition the admissible pairs by the ratio r = m/n:
    A_1 images have r > 4, A_2 images 3 < r < 4, A_3 images 5/2 < r < 3,
    A_4 images 2 < r < 5/2, and A_5 images 1 < r < 2. The boundary ratios
    2, 5/2, 3, 4 only occur at the roots or at pairs failing the mod-3
    filter, so on valid non-root input exactly one interval applies.
    """
    _require_pair(p)
    n, m = p
    if p == ROOT_PAIRS[0]:
        return Root.A
    if p == ROOT_PAIRS[1]:
        return Root.B
    if m > 4 * n:
        return PairParent(Pair(n, m - 3 * n), 1)
    if m > 3 * n:
        return PairParent(Pair(m - 3 * n, n), 2)
    if 2 * m > 5 * n:
        return PairParent(Pair(3 * n - m, m - 2 * n), 3)
    if m > 2 * n:
        return PairParent(Pair(m - 2 * n, 3 * n - m), 4)
    return PairParent(Pair(2 * n - m, n), 5)


def path_of_pair(p: Pair) -> PathCode:
    """Address of p, by repeated parent steps; n + m shrinks every step."""
    steps: list[int] = []
    cur = p
    while True:
        res = parent_pair(cur)
        if isinstance(res, Root):
            return PathCode(res, tuple(reversed(steps)))
        steps.append(res.step)
        cur = res.pair


def pair_of_path(code: PathCode) -> Pair:
    """Evaluate an address: apply A_step for each step, starting at the root."""
    cur = code.root.pair
    for step in code.steps:
        if step not in (1, 2, 3, 4, 5):
            raise ValueError(f"bad step index {step}")
        cur = Pair(*mat2_apply(A_MATS[step - 1], cur))
    return cur


def enumerate_pairs(max_m: int) -> list[Pair]:
    """All forest pairs with m <= max_m, breadth first from both roots.

    Pruning is sound because every child has strictly larger m than its
    parent.
    """
    return [pair for pair, _ in walk_pairs(max_m)]


def walk_pairs(max_m: int) -> Iterator[tuple[Pair, PathCode]]:
    """Breadth-first traversal of both trees, bounded by m <= max_m."""
    queue: deque[tuple[Pair, PathCode]] = deque(
        (root.pair, PathCode(root)) for root in Root if root.pair.m <= max_m
    )
    while queue:
        pair, code = queue.popleft()
        yield pair, code
        for i, child in enumerate(children_pair(pair), start=1):
            if child.m <= max_m:
                queue.append((child, PathCode(code.root, code.steps + (i,))))


def _require_pair(p: Pair) -> None:
    reason = pair_violation(p)
    if reason is not None:
        raise InvalidPair(reason)
