"""The quintic forest of primitive Eisenstein triples.

Two trees, rooted at (7, 8, 5) and (13, 15, 7), carry every primitive
Eisenstein triple exactly once as a tree node or the twin of one; the
equilateral (1, 1, 1) is the lone triple outside both trees. Children are
matrix images: child i of a node t (as a column vector) is M_i t with

    M_1 = ( 7 -6  6 / 8 -7  7 / 4 -4  3 )
    M_2 = ( 7  6 -6 / 8  7 -7 / 4  3 -4 )
    M_3 = ( 7  6  0 / 8  7  0 / 4  3  1 )
    M_4 = ( 7  0  6 / 8  0  7 / 4  1  3 )
    M_5 = ( 7  0 -6 / 8  0 -7 / 4  1 -4 )

which mirror the pair-level maps A_i: taking the A_i child of a pair and
evaluating the parameterization equals applying M_i to the evaluated
triple. Descent therefore delegates to the pair level, and every inverse
step is re-verified by multiplying back.

All five maps strictly increase the side a, so enumeration bounded by a
can prune whole subtrees the moment a node exceeds the bound.
"""

from collections import deque
from math import gcd
from typing import Iterator, NamedTuple

from .eisenstein import (
    EQUILATERAL,
    Pair,
    Triple,
    TwinForm,
    is_eisenstein,
    pair_from_triple,
    triple_from_pair,
)
from .errors import Equilateral, NotEisenstein, NotForestTriple
from .intmat import Mat3, mat3_apply
from .stern_brocot import PathCode, Root, children_pair, parent_pair, pair_of_path, path_of_pair

M_MATS: tuple[Mat3, ...] = (
    ((7, -6, 6), (8, -7, 7), (4, -4, 3)),
    ((7, 6, -6), (8, 7, -7), (4, 3, -4)),
    ((7, 6, 0), (8, 7, 0), (4, 3, 1)),
    ((7, 0, 6), (8, 0, 7), (4, 1, 3)),
    ((7, 0, -6), (8, 0, -7), (4, 1, -4)),
)

ROOT_TRIPLES = {Root.A: Triple(7, 8, 5), Root.B: Triple(13, 15, 7)}


class ForestNode(NamedTuple):
    """One tree node: its triple, twin, parameter pair, and address."""

    tree_triple: Triple
    twin_triple: Triple
    pair: Pair
    path: PathCode
    depth: int


class TripleParent(NamedTuple):
    """Parent triple plus the child index that leads back down."""

    triple: Triple
    step: int


def roots() -> tuple[Triple, Triple]:
    """The two root triples, tree A first."""
    return ROOT_TRIPLES[Root.A], ROOT_TRIPLES[Root.B]


def children_triple(t: Triple) -> tuple[Triple, ...]:
    """The five children M_i t of a tree-form node; entry k is child k+1."""
    _require_tree_form(t)
    return tuple(Triple(*mat3_apply(m, t)) for m in M_MATS)


def parent_triple(t: Triple) -> Root | TripleParent:
    """Undo one child step, or identify t as a root.

    Descends at the pair level and confirms the answer by applying the
    matching M matrix to the recovered parent.
    """
    pair = _require_tree_form(t)
    res = parent_pair(pair)
    if isinstance(res, Root):
        return res
    parent = triple_from_pair(res.pair).tree
    if Triple(*mat3_apply(M_MATS[res.step - 1], parent)) != t:
        raise RuntimeError(f"descent from {t} lost consistency at step {res.step}")
    return TripleParent(parent, res.step)


def path_of_triple(t: Triple) -> PathCode:
    """Address of the node holding t; twin-form input resolves to its tree form.

    Raises Equilateral for (1, 1, 1) and NotForestTriple for anything that
    is not a primitive ordered Eisenstein triple.
    """
    try:
        pair, _ = pair_from_triple(t)
    except Equilateral:
        raise
    except NotEisenstein as exc:
        raise NotForestTriple(str(exc)) from exc
    return path_of_pair(pair)


def triple_of_path(code: PathCode) -> ForestNode:
    """Evaluate an address to the full node it names."""
    pair = pair_of_path(code)
    tree, tw = triple_from_pair(pair)
    return ForestNode(tree, tw, pair, code, len(code.steps))


def enumerate_forest(max_a: int) -> list[ForestNode]:
    """All nodes with a <= max_a, sorted by (depth, root, steps).

    Every emitted node is re-checked on the spot: the quadratic identity,
    primitivity, side ordering, and agreement between the matrix route
    and the parameterization all hold, or enumeration aborts.
    """
    nodes = list(walk_forest(max_a))
    nodes.sort(key=lambda nd: (nd.depth, nd.path.root, nd.path.steps))
    return nodes


def walk_forest(max_a: int) -> Iterator[ForestNode]:
    """Breadth-first traversal of both trees, bounded by tree a <= max_a."""
    queue: deque[ForestNode] = deque()
    for root in Root:
        t = ROOT_TRIPLES[root]
        if t.a <= max_a:
            queue.append(ForestNode(t, Triple(t.a, t.b, t.b - t.c), root.pair, PathCode(root), 0))
    while queue:
        node = queue.popleft()
        _check_node(node)
        yield node
        kid_pairs = children_pair(node.pair)
        for i, m in enumerate(M_MATS, start=1):
            child = Triple(*mat3_apply(m, node.tree_triple))
            if child.a <= max_a:
                queue.append(
                    ForestNode(
                        child,
                        Triple(child.a, child.b, child.b - child.c),
                        kid_pairs[i - 1],
                        PathCode(node.path.root, node.path.steps + (i,)),
                        node.depth + 1,
                    )
                )


def enumerate_all_triples(max_a: int, include_equilateral: bool) -> list[Triple]:
    """Every primitive triple with a <= max_a: tree and twin of each node.

    Emission order follows enumerate_forest, tree form before twin; the
    equilateral (1, 1, 1) is prepended on request. A hard duplicate guard
    makes any double emission an error rather than a silent wrong answer.
    """
    out: list[Triple] = []
    if include_equilateral and max_a >= 1:
        out.append(EQUILATERAL)
    seen = set(out)
    for node in enumerate_forest(max_a):
        for t in (node.tree_triple, node.twin_triple):
            if t in seen:
                raise RuntimeError(f"duplicate triple emitted: {t}")
            seen.add(t)
            out.append(t)
    return out


def _require_tree_form(t: Triple) -> Pair:
    try:
        pair, form = pair_from_triple(t)
    except (Equilateral, NotEisenstein) as exc:
        raise NotForestTriple(str(exc)) from exc
    if form is not TwinForm.TREE:
        raise NotForestTriple(f"{t} is a twin-form triple, not a tree node")
    return pair


def _check_node(node: ForestNode) -> None:
    t = node.tree_triple
    if not is_eisenstein(t):
        raise RuntimeError(f"emitted non-Eisenstein triple {t}")
    if gcd(gcd(t.a, t.b), t.c) != 1:
        raise RuntimeError(f"emitted non-primitive triple {t}")
    if not t.c < t.a < t.b:
        raise RuntimeError(f"emitted out-of-order triple {t}")
    if triple_from_pair(node.pair) != (t, node.twin_triple):
        raise RuntimeError(f"pair {node.pair} disagrees with triple {t}")
