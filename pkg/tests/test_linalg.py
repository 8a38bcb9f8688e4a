import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fillcurve import _vec
from fillcurve.ffield import GF, extension, field_of_order
from fillcurve.linalg import (Mat, MonicPoly, ProjPoint, char_poly, companion, eigen_points,
                              nullspace, parse_matrix, proj_apply, proj_points, rank)


def mats(K, n=3):
    return st.lists(st.integers(0, K.order - 1), min_size=n * n, max_size=n * n).map(
        lambda v: Mat([[K.from_code(c) for c in v[i * n:(i + 1) * n]] for i in range(n)], K))


def brute_det(M):
    """Leibniz expansion, independent of the elimination in Mat.det."""
    n = M.n
    acc = M.ctx.zero
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = M.ctx(sign)
        for i, j in enumerate(perm):
            term = term * M[i, j]
        acc = acc + term
    return acc


FIELDS = [GF(2), GF(3), GF(2, 2), GF(5)]


class TestCompanion:
    def test_curve3_layout(self):
        K = GF(2)
        f = MonicPoly((1, 1, 0), K)                   # t^3 + t + 1
        A = companion(f, "curve3")
        assert A.codes() == (0, 0, 1, 1, 0, 1, 0, 1, 0)
        assert char_poly(A) == f

    def test_appendix_layout(self):
        K = GF(3)
        f = MonicPoly((1, 0), K)                      # t^2 + 1
        A = companion(f, "appendix")
        assert repr(A) == "0,1;2,0"
        assert char_poly(A) == f

    def test_errors(self):
        K = GF(2)
        with pytest.raises(ValueError):
            companion(MonicPoly((1, 1), K), "curve3")
        with pytest.raises(ValueError):
            companion(MonicPoly((1, 1, 0), K), "other")

    def test_tail(self):
        K = GF(5)
        f = MonicPoly.from_tail((1, 2, 3), K)
        assert f.coeffs == (K(-1), K(-2), K(-3))


class TestMat:
    def test_inverse_and_singular(self):
        K = GF(3)
        B = parse_matrix("0,1,0;0,1,1;1,2,2", K)
        assert B @ B.inv() == Mat.identity(3, K)
        with pytest.raises(ZeroDivisionError):
            parse_matrix("1,1;1,1", K).inv()

    def test_normalized(self):
        K = GF(5)
        M = Mat([[0, 2], [3, 4]], K)
        assert M.normalized().codes() == (0, 1, 4, 2)

    def test_rank_nullspace(self):
        K = GF(2)
        rows = [[K(1), K(1), K(0)], [K(0), K(1), K(1)]]
        assert rank(rows) == 2
        (v,) = nullspace(rows, 3, K)
        assert [x.n for x in v] == [1, 1, 1]


class TestPoints:
    def test_counts(self):
        assert len(proj_points(3, GF(2))) == 7
        assert len(proj_points(3, GF(2, 2))) == 21
        assert len(set(proj_points(3, GF(3)))) == 13

    def test_normalization(self):
        K = GF(5)
        assert ProjPoint([0, 2, 4], K) == ProjPoint([0, 1, 2], K)
        with pytest.raises(ValueError):
            ProjPoint([0, 0, 0], K)

    def test_eigen_points_are_lambda_powers(self):
        K = GF(2)
        f = MonicPoly((1, 1, 0), K)
        A = companion(f, "curve3")
        L = extension(K, 3)
        pts = eigen_points(A)
        expected = {ProjPoint([lam ** -2, lam ** -1, L.one], L) for lam in f.roots(L)}
        assert set(pts) == expected
        assert pts[1] == pts[0].frobenius(2)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(FIELDS).flatmap(lambda K: st.tuples(mats(K), mats(K))))
def test_det_multiplicative_and_leibniz(pair):
    A, B = pair
    assert A.det() == brute_det(A)
    assert (A @ B).det() == A.det() * B.det()
    assert A.T.det() == A.det()


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(FIELDS).flatmap(lambda K: st.tuples(mats(K), mats(K))))
def test_char_poly_conjugation_invariant(pair):
    A, P = pair
    if P.det():
        assert char_poly(P @ A @ P.inv()) == char_poly(A)
    f = char_poly(A)
    K = A.ctx
    # Cayley-Hamilton
    acc = Mat.identity(3, K) * K.zero
    for c in reversed(f.full()):
        acc = acc @ A + Mat.identity(3, K) * c
    assert acc.is_scalar() and not acc[0, 0]


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(FIELDS).flatmap(lambda K: st.tuples(mats(K), mats(K))))
def test_cofactor_identity(pair):
    A, _ = pair
    assert A @ A.cofactor().T == Mat.scalar(3, A.det())


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(FIELDS).flatmap(lambda K: st.tuples(mats(K), mats(K))))
def test_projective_action(pair):
    A, B = pair
    if not (A.det() and B.det()):
        return
    for P in proj_points(3, A.ctx)[:5]:
        assert proj_apply(A @ B, P) == proj_apply(A, proj_apply(B, P))


@pytest.mark.parametrize("q,n,order", [(3, 2, 48), (2, 3, 168), (2, 4, 20160)])
def test_batched_gl_counts(q, n, order):
    assert len(_vec.invertible_matrices(_vec.vecfield(field_of_order(q)), n)) == order


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([GF(3), GF(2, 2), GF(3, 2), GF(7)]).flatmap(
    lambda K: st.tuples(mats(K), mats(K))))
def test_batched_arithmetic_matches_exact(pair):
    A, B = pair
    vf = _vec.vecfield(A.ctx)
    X = np.array(A.codes()).reshape(3, 3)
    Y = np.array(B.codes()).reshape(3, 3)
    assert tuple(_vec.matmul(vf, X, Y).ravel()) == (A @ B).codes()
    assert int(_vec.det(vf, X)) == A.det().n
    assert tuple(vf.pow(X, 5).ravel()) == tuple((x ** 5).n for r in A.rows for x in r)
    assert tuple(vf.add(X, Y).ravel()) == (A + B).codes()
    assert tuple(vf.sub(X, Y).ravel()) == (A - B).codes()
