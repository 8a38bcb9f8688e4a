"""Acceptance criteria, one test per criterion.

Run with ``pytest tests/test_acceptance.py -v``; a summary line per
criterion is printed at the end of the session.
"""

import subprocess
import sys

import pytest

from fillcurve import suite
from fillcurve.autgroup import aut_elements, gl_scan_aut
from fillcurve.classify import Cubic, classes, equivalent, irreducible_cubics, orbit
from fillcurve.ffield import field_of_order
from fillcurve.forms import hd_dimension
from fillcurve.smooth import cubic_companion, min_degree_certificate, proof_identities

QS = (2, 3, 4, 5)


def _assert_check(check):
    assert check.ok, f"{check.name} q={check.q} witness={check.witness}"
    return check


def test_01_smoothness_criterion_exhaustive(accept):
    with accept(1, "smooth <=> irreducible cubic, every monic cubic, q = 2..5"):
        for q in QS:
            degrees = (1, 2, 3, 6) if q <= 4 else (1, 2, 3)
            chk = _assert_check(suite.check_smoothness(q, degrees))
            assert chk.details["cubics"] == q ** 3
            assert chk.details["smooth"] == (q ** 3 - q) // 3


def test_02_minimum_degree(accept):
    with accept(2, "minimum degree q + 2 certificate, q = 2..5"):
        for q in QS:
            cert = min_degree_certificate(q)
            assert cert["ok"], cert
            assert cert["no_low_degree_form"]
            assert cert["pencil_members"] == cert["pencil_members_singular"] == q * q + q + 1
            assert cert["smooth_witness_ok"]


def test_03_ideal_generation(accept):
    with accept(3, "U, V, W generate the ideal in degrees 1..q+4, q = 2, 3"):
        for q in (2, 3):
            for d in range(1, q + 5):
                ideal, vanishing = hd_dimension(q, d)
                assert ideal == vanishing, (q, d, ideal, vanishing)
        assert hd_dimension(2, 3)[0] == 3
        assert hd_dimension(2, 4)[0] == 8
        assert hd_dimension(2, 2)[0] == 0


def test_04_covariance(accept):
    with accept(4, "U, V, W covariance: all of GL(3,2), 100 random B for q = 3, 4, 5"):
        chk = _assert_check(suite.check_covariance(2))
        assert chk.details["matrices"] == 168
        for q in (3, 4, 5):
            chk = _assert_check(suite.check_covariance(q, samples=100))
            assert chk.details["matrices"] == 100


def test_05_automorphism_orders(accept):
    with accept(5, "|Aut| = 7, 39, 63, 31 by linear systems and GL scans"):
        K2, K3, K4 = (field_of_order(q) for q in (2, 3, 4))
        A2 = cubic_companion((0, 1, 1), K2)
        A3 = cubic_companion((0, 1, 1), K3)            # t^3 - t - 1
        A4 = cubic_companion((0, 0, K4.gen), K4)       # t^3 - omega
        assert len(aut_elements(A2)) == 7 == gl_scan_aut(A2)
        assert len(aut_elements(A3)) == 39 == gl_scan_aut(A3)
        assert 39 != 6 * 13
        assert len(aut_elements(A4)) == 63
        K5 = field_of_order(5)
        for f in irreducible_cubics(5):
            assert len(aut_elements(cubic_companion(f.astuple(), K5))) == 31, f


def test_06_automorphism_structure(accept):
    with accept(6, "Singer subgroup normal, quotient 1 or Z3 exactly in the special cases"):
        for q in QS:
            _assert_check(suite.check_aut_structure(q))


def test_07_fixed_points(accept):
    with accept(7, "fixed points of B0^s are the three eigen-points, q = 2, 3"):
        for q in (2, 3):
            chk = _assert_check(suite.check_fixed_points(q))
            assert chk.details["exponents"] == q * q + q


def test_08_classification(accept):
    with accept(8, "classification partitions, pure-cubic split at q=4, harmonic orbit"):
        sizes = {q: classes(q).class_sizes for q in QS}
        assert sizes[2] == [2]
        assert len(sizes[3]) == 2
        assert sizes[4] == [4, 4, 12]                 # recorded
        assert sizes[5] == [20, 20]                   # recorded
        for q in QS:
            assert sum(sizes[q]) == (q ** 3 - q) // 3
        K4 = field_of_order(4)
        w = K4.gen
        assert equivalent(Cubic.of((0, 0, w), K4), Cubic.of((0, 0, w.inv()), K4)) is None
        for q in (3, 9):
            K = field_of_order(q)
            harm = [Cubic(K.zero, m * m, a) for m in K.enumerate() if m
                    for a in K.enumerate() if a]
            harm = [h for h in harm if h.is_irreducible()]
            keys = {h.key() for h in orbit(harm[0])}
            assert all(h.key() in keys for h in harm)
        # includes the exhaustive GL(3, 2) transformation search
        for q in QS:
            _assert_check(suite.check_classification(q))


def test_09_proof_identities(accept):
    with accept(9, "local identities and nonzero determinant, every irreducible cubic, q = 2..4"):
        for q in (2, 3, 4):
            for f in irreducible_cubics(q):
                res = proof_identities(q, f.astuple())
                assert all(res.values()), (q, f, [k for k, v in res.items() if not v])
                assert res["det_nonzero"]


def test_10_centralizers(accept):
    with accept(10, "centralizer orders, PGL images, support-condition biconditional"):
        for q in QS:
            chk = _assert_check(suite.check_centralizers(q, ns=(2, 3)))
            assert chk.details["polys"] == len(suite.monic_irreducibles(q, 2)) + len(
                suite.monic_irreducibles(q, 3))
        # GL scans run wherever |GL(n, q)| <= 10^6, i.e. everywhere except GL(3, 5)
        assert suite.check_centralizers(5, ns=(3,)).details["gl_scans"] == 0
        assert suite.check_centralizers(4, ns=(3,)).details["gl_scans"] == 20


def test_11_determinism(accept):
    with accept(11, "verify --q 2,3 is byte-identical across runs"):
        cmd = [sys.executable, "-m", "fillcurve", "verify", "--q", "2,3"]
        first = subprocess.run(cmd, capture_output=True, check=False)
        second = subprocess.run(cmd, capture_output=True, check=False)
        assert first.returncode == second.returncode == 0
        assert first.stdout == second.stdout
        assert b'"schema": "fillcurve/1"' in first.stdout


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
