import pytest

from fillcurve.autgroup import (aut_condition, aut_elements, b0_generator, cyclic_subgroup,
                                enumerate_aut, fixed_points, gl_scan_aut, is_closed, is_normal,
                                is_transposition, pgl_order, pi_map, quotient_structure)
from fillcurve.centralizer import centralizer_elements, pgl_centralizer, pgl_classes
from fillcurve.classify import Cubic, irreducible_cubics
from fillcurve.ffield import GF, field_of_order
from fillcurve.linalg import Mat, eigen_points
from fillcurve.smooth import cubic_companion


def comp(q, cubic):
    K = field_of_order(q)
    return cubic_companion(Cubic.of(cubic, K).astuple(), K)


def all_companions(q):
    K = field_of_order(q)
    return [cubic_companion(f.astuple(), K) for f in irreducible_cubics(q)]


def omega_cubic():
    K = field_of_order(4)
    return cubic_companion((K.zero, K.zero, K.gen), K)


class TestCondition:
    def test_identity(self):
        A = comp(2, (0, 1, 1))
        assert aut_condition(Mat.identity(3, A.ctx), A) == (1, 0)

    def test_centralizer_member(self):
        A = comp(3, (0, 1, 1))
        for B in centralizer_elements(A.T)[:10]:
            assert aut_condition(B, A) == (1, 0)

    def test_exceptional_witness_q3(self):
        # t^A' = [[0,1,0],[0,0,1],[a,mu^2,0]] with mu = a = 1
        A = comp(3, (0, 1, 1))
        assert A.T == Mat([[0, 1, 0], [0, 0, 1], [1, 1, 0]], GF(3))
        B = Mat([[0, 1, 0], [0, 1, 1], [1, 2, 2]], GF(3))
        assert B.det() == GF(3)(1)
        assert aut_condition(B, A) == (1, 1)
        At = A.T
        assert At @ B == B @ At + B

    def test_non_automorphism(self):
        A = comp(3, (1, 0, 2))
        B = Mat([[1, 1, 0], [0, 1, 0], [0, 0, 1]], GF(3))
        assert aut_condition(B, A) is None

    def test_errors(self):
        K = GF(2)
        A = comp(2, (0, 1, 1))
        with pytest.raises(ValueError):
            aut_condition(Mat([[1, 1, 0], [1, 1, 0], [0, 0, 1]], K), A)
        with pytest.raises(ValueError):
            aut_condition(Mat.identity(3, K), Mat.identity(3, K))
        with pytest.raises(ValueError):
            enumerate_aut(comp(2, (0, 0, 1)))


class TestOrders:
    @pytest.mark.parametrize("q,cubic,order", [(2, (0, 1, 1), 7), (3, (0, 1, 1), 39)])
    def test_small_orders_with_gl_scan(self, q, cubic, order):
        A = comp(q, cubic)
        rep = enumerate_aut(A)
        assert rep.order == order == gl_scan_aut(A)

    def test_q3_corrected_count(self):
        rep = enumerate_aut(comp(3, (0, 1, 1)))
        assert rep.order == 39 != 78
        assert rep.tallini_corrected and rep.quotient == "Z3"
        assert rep.case_detected == "case_ii"

    def test_q4_omega(self):
        rep = enumerate_aut(omega_cubic())
        assert rep.order == 63 and rep.case_detected == "case_i"

    def test_q5_all_31(self):
        for A in all_companions(5):
            assert quotient_structure(A) == "trivial"
            assert len(aut_elements(A)) == 31

    @pytest.mark.parametrize("q", [2, 3])
    def test_gl_scan_every_cubic(self, q):
        for A in all_companions(q):
            assert gl_scan_aut(A) == len(aut_elements(A))

    def test_report_dict(self):
        rep = enumerate_aut(comp(2, (0, 1, 1)))
        d = rep.to_dict(with_elements=True)
        assert list(d)[:7] == ["q", "cubic", "order", "singer_order", "quotient",
                               "case_detected", "tallini_corrected"]
        assert len(d["elements"]) == 7


class TestSinger:
    def test_b0_order_q2(self):
        A = comp(2, (0, 1, 1))
        B0 = b0_generator(A)
        assert pgl_order(B0) == 7
        assert aut_condition(B0, A) == (1, 0)
        assert B0.normalized() in aut_elements(A)

    def test_normal_q3(self):
        for A in all_companions(3):
            group = aut_elements(A)
            sub = cyclic_subgroup(b0_generator(A))
            assert len(sub) == 13
            assert is_normal(sub, group)
            assert is_closed(group)

    def test_fixed_points(self):
        A = comp(2, (0, 1, 1))
        eig = set(eigen_points(A))
        assert fixed_points(A, 1) == eig
        assert fixed_points(A, 3) == eig
        A3 = comp(3, (0, 1, 1))
        assert fixed_points(A3, 1) == set(eigen_points(A3))
        with pytest.raises(ValueError):
            fixed_points(A, 7)
        with pytest.raises(ValueError):
            fixed_points(A, 0)


class TestPermutation:
    def test_b0_is_identity(self):
        for q in (2, 3, 4):
            for A in all_companions(q)[:4]:
                assert pi_map(b0_generator(A), A) == (0, 1, 2)

    def test_three_cycle_q4(self):
        A = omega_cubic()
        pts = eigen_points(A)
        perms = {pi_map(B, A, pts) for B in aut_elements(A)}
        assert perms == {(0, 1, 2), (1, 2, 0), (2, 0, 1)}

    @pytest.mark.parametrize("q", [2, 3, 4])
    def test_no_transpositions_and_kernel(self, q):
        for A in all_companions(q):
            pts = eigen_points(A)
            group = aut_elements(A)
            sigma = {B.codes(): pi_map(B, A, pts) for B in group}
            assert not any(is_transposition(s) for s in sigma.values())
            kernel = {k for k, s in sigma.items() if s == (0, 1, 2)}
            assert kernel == pgl_classes(centralizer_elements(A.T))

    def test_homomorphism(self):
        A = comp(3, (0, 1, 1))
        pts = eigen_points(A)
        group = aut_elements(A)
        for g in group[::5]:
            for h in group[::7]:
                sg, sh = pi_map(g, A, pts), pi_map(h, A, pts)
                assert pi_map(g @ h, A, pts) == tuple(sg[sh[i]] for i in range(3))

    def test_rejects_non_automorphism(self):
        A = comp(3, (1, 0, 2))
        with pytest.raises(ValueError):
            pi_map(Mat([[1, 1, 0], [0, 1, 0], [0, 0, 1]], GF(3)), A)


class TestShiftedCentralizer:
    def test_harmonic_q3_no_enlargement(self):
        """Z_PGL(t^A) is only the Singer image, yet Aut is three times larger."""
        A = comp(3, (0, 1, 1))
        K = A.ctx
        for kappa in K.enumerate():
            shifted = A + Mat.identity(3, K) * kappa
            assert len(pgl_centralizer(shifted.T)) == 13
        assert len(aut_elements(A)) == 39

    @pytest.mark.parametrize("q", [4, 7])
    def test_pure_cubic_shift_realizes_aut(self, q):
        K = field_of_order(q)
        for f in irreducible_cubics(q):
            A = cubic_companion(f.astuple(), K)
            rep = enumerate_aut(A)
            if rep.quotient != "Z3":
                continue
            group = pgl_classes(rep.elements)
            assert any(pgl_centralizer((A + Mat.identity(3, K) * k).T) == group
                       for k in K.enumerate())
