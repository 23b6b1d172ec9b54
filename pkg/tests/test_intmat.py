"""Exact matrix arithmetic, cross-checked against numpy as a second route."""

import numpy as np
import pytest

from eisenforest import (
    A_MATS,
    CONJUGATOR,
    F_MATS,
    IDENTITY2,
    IDENTITY3,
    M_MATS,
    NotUnimodular,
    S_MAT,
    S_PRIME,
    det2,
    det3,
    mat2_apply,
    mat2_inv_unimodular,
    mat2_mul,
    mat3_apply,
    mat3_inv_unimodular,
    mat3_mul,
)

ALL_2X2 = (S_PRIME, S_MAT, CONJUGATOR) + F_MATS + A_MATS


def np_mul(x, y):
    return tuple(tuple(int(v) for v in row) for row in np.array(x, dtype=object) @ np.array(y, dtype=object))


def test_mul_identity():
    assert mat2_mul(IDENTITY2, F_MATS[0]) == F_MATS[0]
    assert mat3_mul(IDENTITY3, M_MATS[0]) == M_MATS[0]


def test_mul_bracket_step():
    # bracket matrix of 1/3: conjugator advanced by the first child map
    assert mat2_mul(CONJUGATOR, F_MATS[0]) == ((0, 1), (1, 4))


def test_mul_f2_squared():
    assert mat2_mul(F_MATS[1], F_MATS[1]) == ((7, 9), (3, 4))


@pytest.mark.parametrize("x", ALL_2X2)
@pytest.mark.parametrize("y", ALL_2X2)
def test_mat2_mul_matches_numpy(x, y):
    assert mat2_mul(x, y) == np_mul(x, y)


@pytest.mark.parametrize("x", M_MATS)
@pytest.mark.parametrize("y", M_MATS)
def test_mat3_mul_matches_numpy(x, y):
    assert mat3_mul(x, y) == np_mul(x, y)


def test_apply():
    assert mat2_apply(S_MAT, (1, 2)) == (1, 3)
    assert mat3_apply(M_MATS[0], (7, 8, 5)) == (31, 35, 11)
    assert mat2_apply(IDENTITY2, (9, -4)) == (9, -4)
    assert mat3_apply(IDENTITY3, (3, 0, -7)) == (3, 0, -7)


def test_det_brute_formula():
    # cofactor result vs the spelled-out 2x2 formula on every constant
    for x in ALL_2X2:
        assert det2(x) == x[0][0] * x[1][1] - x[0][1] * x[1][0]
    assert det2(A_MATS[0]) == 1
    assert det3(IDENTITY3) == 1
    assert det3(M_MATS[0]) == 1


@pytest.mark.parametrize("x", M_MATS)
def test_det3_matches_numpy(x):
    expected = int(round(np.linalg.det(np.array(x, dtype=float))))
    assert det3(x) == expected


def test_unimodular_constants():
    for x in ALL_2X2:
        assert det2(x) in (1, -1), x
    for x in M_MATS:
        assert det3(x) in (1, -1), x


def test_inverse_roundtrip():
    for x in ALL_2X2:
        assert mat2_mul(x, mat2_inv_unimodular(x)) == IDENTITY2
        assert mat2_mul(mat2_inv_unimodular(x), x) == IDENTITY2
    for x in M_MATS:
        assert mat3_mul(x, mat3_inv_unimodular(x)) == IDENTITY3
        assert mat3_mul(mat3_inv_unimodular(x), x) == IDENTITY3


def test_inverse_values():
    assert mat2_inv_unimodular(A_MATS[0]) == ((1, 0), (-3, 1))
    assert mat2_inv_unimodular(IDENTITY2) == IDENTITY2
    assert mat3_inv_unimodular(IDENTITY3) == IDENTITY3


def test_not_unimodular():
    with pytest.raises(NotUnimodular):
        mat2_inv_unimodular(((2, 0), (0, 2)))
    with pytest.raises(NotUnimodular):
        mat3_inv_unimodular(((2, 0, 0), (0, 1, 0), (0, 0, 1)))


def test_conjugation_identity():
    c_inv = mat2_inv_unimodular(CONJUGATOR)
    for f, a in zip(F_MATS, A_MATS):
        assert mat2_mul(mat2_mul(CONJUGATOR, f), c_inv) == a
    assert mat2_mul(mat2_mul(CONJUGATOR, S_PRIME), c_inv) == S_MAT
