"""Forest of primitive Eisenstein triples.

Integer triangles with a 60 degree angle (a^2 = b^2 + c^2 - bc) form two
five-ary matrix trees rooted at (7, 8, 5) and (13, 15, 7); together with
the twin map (a, b, c) -> (a, b, b - c) and the lone equilateral (1, 1, 1)
they cover every primitive triple exactly once. This package generates
the forest, inverts it (triple -> pair -> address), and verifies the
exactly-once claim against independent brute-force enumeration.

Everything is exact integer arithmetic; all values are immutable and all
functions pure, so the API is safe to use from concurrent callers.
"""

from .errors import (
    DegenerateTwin,
    Equilateral,
    ForestError,
    InvalidPair,
    NotEisenstein,
    NotForestTriple,
    NotPrimitive,
    NotUnimodular,
)
from .intmat import (
    IDENTITY2,
    IDENTITY3,
    Mat2,
    Mat3,
    Vec2,
    Vec3,
    det2,
    det3,
    mat2_apply,
    mat2_inv_unimodular,
    mat2_mul,
    mat3_apply,
    mat3_inv_unimodular,
    mat3_mul,
)
from .eisenstein import (
    EQUILATERAL,
    Pair,
    Triple,
    TriplePair,
    TwinForm,
    is_eisenstein,
    is_primitive_eisenstein,
    is_valid_pair,
    pair_from_triple,
    triple_from_pair,
    twin,
)
from .stern_brocot import (
    A_MATS,
    CONJUGATOR,
    F_MATS,
    PathCode,
    PairParent,
    Root,
    S_MAT,
    S_PRIME,
    children_pair,
    constants,
    enumerate_pairs,
    is_forest_pair,
    pair_of_path,
    parent_pair,
    path_of_pair,
    walk_pairs,
)
from .forest import (
    ForestNode,
    M_MATS,
    ROOT_TRIPLES,
    TripleParent,
    children_triple,
    enumerate_all_triples,
    enumerate_forest,
    parent_triple,
    path_of_triple,
    roots,
    triple_of_path,
    walk_forest,
)
from .oracle import (
    VerificationReport,
    brute_pairs,
    brute_triples,
    sb_depth,
    sb_modified_pairs,
    verify_bijection,
)

__version__ = "0.1.0"
