"""Determinant engines, LDL^t factorization and moment inversion."""

import random
from fractions import Fraction

import pytest

from hankelkit.errors import NotNormalized, SingularLeadingMinor
from hankelkit.field import as_field, q
from hankelkit.hankel import (
    SquareMatrix,
    det_bareiss,
    det_division,
    det_exact,
    det_from_jacobi,
    hankel_matrix,
    jacobi_from_moments,
    ldlt,
)
from hankelkit.sequences import (
    CatalanSeq,
    CentralBinomialSeq,
    ExplicitSeq,
    PochRatioSeq,
    andrews_q_catalan,
)
from hankelkit.triangle import build_triangle


def rational_entries(M):
    return [[v.as_rational() for v in row] for row in M.entries]


def reconstruct(factors, n):
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = as_field(0)
            for k in range(n):
                acc = acc + factors.A[i, k] * factors.A[j, k] * factors.D[k]
            row.append(acc)
        rows.append(row)
    return SquareMatrix(rows)


def test_hankel_matrix_values():
    assert rational_entries(hankel_matrix(CatalanSeq(), 2, 0)) == [[1, 1], [1, 2]]
    assert rational_entries(hankel_matrix(CatalanSeq(), 2, 2)) == [[2, 5], [5, 14]]
    assert rational_entries(hankel_matrix(CentralBinomialSeq(), 3, 0)) == [
        [1, 2, 6],
        [2, 6, 20],
        [6, 20, 70],
    ]


def test_det_examples():
    assert det_exact(hankel_matrix(CatalanSeq(), 2, 0)) == 1
    assert det_exact(hankel_matrix(CatalanSeq(), 2, 2)).as_rational() == 3
    eye = SquareMatrix([[1 if i == j else 0 for j in range(5)] for i in range(5)])
    assert det_bareiss(eye) == 1 and det_division(eye) == 1


def test_catalan_dets_both_engines():
    for n in range(1, 11):
        H = hankel_matrix(CatalanSeq(), n, 0)
        assert det_division(H) == 1
        assert det_bareiss(H) == 1


def test_singular_matrix_returns_zero():
    S = SquareMatrix([[1, 1], [1, 1]])
    assert det_bareiss(S).is_zero
    assert det_division(S).is_zero


def test_det_engine_selection():
    H = hankel_matrix(CentralBinomialSeq(), 3, 0)
    assert det_exact(H, "division") == det_exact(H, "bareiss")
    with pytest.raises(ValueError):
        det_exact(H, "cofactor")


def test_zero_column_matrix():
    M = SquareMatrix([[0, 1], [0, 2]])
    assert det_bareiss(M).is_zero and det_division(M).is_zero


def test_row_swap_sign():
    M = SquareMatrix([[0, 1], [1, 0]])
    assert det_bareiss(M).as_rational() == -1
    assert det_division(M).as_rational() == -1


def test_ldlt_catalan():
    f = ldlt(hankel_matrix(CatalanSeq(), 3, 0))
    assert [d.as_rational() for d in f.D] == [1, 1, 1]
    assert [[f.A[i, j].as_rational() for j in range(i + 1)] for i in range(3)] == [
        [1],
        [1, 1],
        [2, 3, 1],
    ]


def test_ldlt_identity():
    eye = SquareMatrix([[1 if i == j else 0 for j in range(4)] for i in range(4)])
    f = ldlt(eye)
    assert all(d == 1 for d in f.D)
    assert f.A == eye


def test_ldlt_central_binomial():
    f = ldlt(hankel_matrix(CentralBinomialSeq(), 3, 0))
    assert [d.as_rational() for d in f.D] == [1, 2, 2]


def test_ldlt_reconstructs():
    for seq in (
        CatalanSeq(),
        CentralBinomialSeq(),
        PochRatioSeq(q ** 4, q, q ** 2),
        PochRatioSeq(q ** 2, q, q ** 2),
    ):
        for n in (2, 4, 6):
            H = hankel_matrix(seq, n, 0)
            assert reconstruct(ldlt(H), n) == H


def test_ldlt_singular_minor():
    with pytest.raises(SingularLeadingMinor) as err:
        ldlt(SquareMatrix([[1, 1], [1, 1]]))
    assert err.value.order == 2


def test_jacobi_from_moments_catalan():
    jp = jacobi_from_moments(CatalanSeq(), 5)
    assert [v.as_rational() for v in jp.s_list(4)] == [1, 2, 2, 2]
    assert [v.as_rational() for v in jp.t_list(4)] == [1, 1, 1, 1]


def test_jacobi_from_moments_central_binomial():
    jp = jacobi_from_moments(CentralBinomialSeq(), 5)
    assert [v.as_rational() for v in jp.s_list(4)] == [2, 2, 2, 2]
    assert [v.as_rational() for v in jp.t_list(4)] == [2, 1, 1, 1]


def test_jacobi_from_moments_round_trip():
    seq = andrews_q_catalan()
    jp = jacobi_from_moments(seq, 3)
    rebuilt = build_triangle(jp, 2).column0(3)
    assert rebuilt == seq.terms_upto(3)


def test_jacobi_requires_normalized():
    with pytest.raises(NotNormalized):
        jacobi_from_moments(ExplicitSeq([2, 1, 1]), 2)


def test_det_from_jacobi_values():
    jp = jacobi_from_moments(CatalanSeq(), 8)
    for n in range(1, 9):
        assert det_from_jacobi(jp, n) == 1
    assert det_from_jacobi(jacobi_from_moments(CatalanSeq(), 1), 1) == 1
    jp2 = jacobi_from_moments(CentralBinomialSeq(), 5)
    assert det_from_jacobi(jp2, 3).as_rational() == 4


def test_lemma_route_equals_elimination():
    for seq_fn in (
        CatalanSeq,
        CentralBinomialSeq,
        lambda: PochRatioSeq(q ** 4, q, q ** 2),
        lambda: PochRatioSeq(q ** 2, q, q ** 2),
    ):
        for n in range(1, 7):
            direct = det_exact(hankel_matrix(seq_fn(), n, 0))
            via_params = det_from_jacobi(jacobi_from_moments(seq_fn(), n), n)
            assert direct == via_params, n


def test_moment_round_trip_depth8():
    for seq_fn in (
        CatalanSeq,
        CentralBinomialSeq,
        lambda: PochRatioSeq(q ** 4, q, q ** 2),
        lambda: PochRatioSeq(q ** 2, q, q ** 2),
    ):
        seq = seq_fn()
        moments = seq.terms_upto(15)
        jp = jacobi_from_moments(ExplicitSeq(moments), 8)
        assert build_triangle(jp, 7).column0(8) == moments[:8]


def test_engines_agree_on_random_matrices():
    rng = random.Random(99)
    for trial in range(18):
        n = trial % 6 + 1
        M = SquareMatrix(
            [
                [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)]
                for _ in range(n)
            ]
        )
        assert det_division(M) == det_bareiss(M)
    dens = [as_field(1), 1 + q, 2 - q]
    for trial in range(10):
        n = trial % 3 + 2
        M = SquareMatrix(
            [
                [
                    (as_field(rng.randint(-3, 3)) + as_field(rng.randint(-3, 3)) * q)
                    / rng.choice(dens)
                    for _ in range(n)
                ]
                for _ in range(n)
            ]
        )
        assert det_division(M) == det_bareiss(M)
