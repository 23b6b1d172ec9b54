"""Exact integer linear algebra for 2x2 and 3x3 matrices.

Matrices are immutable nested tuples in row-major order, vectors are flat
tuples, and all arithmetic is plain Python int, which is arbitrary
precision: every operation returns the exact value, there is no rounding
and no silent wraparound anywhere. Inverses exist only for unimodular
matrices (determinant +1 or -1) and are again exact integer matrices.
"""

from .errors import NotUnimodular

Vec2 = tuple[int, int]
Vec3 = tuple[int, int, int]
Mat2 = tuple[Vec2, Vec2]
Mat3 = tuple[Vec3, Vec3, Vec3]

IDENTITY2: Mat2 = ((1, 0), (0, 1))
IDENTITY3: Mat3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def mat2_mul(x: Mat2, y: Mat2) -> Mat2:
    """Exact product of two 2x2 integer matrices."""
    (a, b), (c, d) = x
    (e, f), (g, h) = y
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def mat3_mul(x: Mat3, y: Mat3) -> Mat3:
    """Exact product of two 3x3 integer matrices."""
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )  # type: ignore[return-value]


def mat2_apply(x: Mat2, v: Vec2) -> Vec2:
    """Exact product of a 2x2 matrix with a column vector."""
    (a, b), (c, d) = x
    return (a * v[0] + b * v[1], c * v[0] + d * v[1])


def mat3_apply(x: Mat3, v: Vec3) -> Vec3:
    """Exact product of a 3x3 matrix with a column vector."""
    return (
        x[0][0] * v[0] + x[0][1] * v[1] + x[0][2] * v[2],
        x[1][0] * v[0] + x[1][1] * v[1] + x[1][2] * v[2],
        x[2][0] * v[0] + x[2][1] * v[1] + x[2][2] * v[2],
    )


def det2(x: Mat2) -> int:
    return x[0][0] * x[1][1] - x[0][1] * x[1][0]


def det3(x: Mat3) -> int:
    """Determinant by cofactor expansion along the first row."""
    return (
        x[0][0] * (x[1][1] * x[2][2] - x[1][2] * x[2][1])
        - x[0][1] * (x[1][0] * x[2][2] - x[1][2] * x[2][0])
        + x[0][2] * (x[1][0] * x[2][1] - x[1][1] * x[2][0])
    )


def mat2_inv_unimodular(x: Mat2) -> Mat2:
    """Exact inverse of a unimodular 2x2 matrix.

    Raises NotUnimodular unless det(x) is +1 or -1. The adjugate divided
    by a determinant of +-1 is the adjugate times the determinant, so the
    result stays integral.
    """
    d = det2(x)
    if d not in (1, -1):
        raise NotUnimodular(f"det = {d}, no integer inverse")
    return ((d * x[1][1], -d * x[0][1]), (-d * x[1][0], d * x[0][0]))


def mat3_inv_unimodular(x: Mat3) -> Mat3:
    """Exact inverse of a unimodular 3x3 matrix via the adjugate."""
    d = det3(x)
    if d not in (1, -1):
        raise NotUnimodular(f"det = {d}, no integer inverse")

    def cof(i: int, j: int) -> int:
        r = [k for k in range(3) if k != i]
        s = [k for k in range(3) if k != j]
        minor = x[r[0]][s[0]] * x[r[1]][s[1]] - x[r[0]][s[1]] * x[r[1]][s[0]]
        return minor if (i + j) % 2 == 0 else -minor

    # inverse = adjugate / det = transpose of cofactors times det (det = +-1)
    return tuple(
        tuple(d * cof(j, i) for j in range(3)) for i in range(3)
    )  # type: ignore[return-value]
