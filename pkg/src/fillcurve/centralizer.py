"""Centralizers of a matrix A0 in GL(n, q) with irreducible characteristic polynomial.

The GL-centralizer is realized as F_q[A0]^x, i.e. g(A0) for nonzero g of
degree < n, a cyclic group of order q^n - 1.  Its PGL image has order
(q^n - 1)/(q - 1); the PGL-centralizer of the class of A0 can be larger by
the cyclic group of those rho in F_q^x with A0 B = rho B A0 solvable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import _vec
from .ffield import FieldElem, prime_factors
from .linalg import Mat, MonicPoly, ProjPoint, char_poly, companion, nullspace, proj_apply, span


def _require_irreducible(A0: Mat) -> MonicPoly:
    f = char_poly(A0)
    if not f.is_irreducible():
        raise ValueError("characteristic polynomial is reducible")
    return f


def twisted_commutant(A0: Mat, rho: FieldElem) -> list[Mat]:
    """Basis of {X : A0 X = rho X A0}."""
    n = A0.n
    ctx = A0.ctx
    rows = []
    for i in range(n):
        for j in range(n):
            row = [ctx.zero] * (n * n)
            for k in range(n):
                row[k * n + j] = row[k * n + j] + A0[i, k]
                row[i * n + k] = row[i * n + k] - rho * A0[k, j]
            rows.append(row)
    basis = nullspace(rows, n * n, ctx)
    return [Mat([v[i * n:(i + 1) * n] for i in range(n)], ctx) for v in basis]


def twisted_solutions(A0: Mat, rho: FieldElem) -> list[Mat]:
    """All invertible B with A0 B = rho B A0 (every nonzero solution must be invertible)."""
    n = A0.n
    ctx = A0.ctx
    basis = twisted_commutant(A0, rho)
    out = []
    for v in span([[x for r in m.rows for x in r] for m in basis], ctx):
        if not any(v):
            continue
        B = Mat([v[i * n:(i + 1) * n] for i in range(n)], ctx)
        if not B.det():
            raise AssertionError(f"singular nonzero solution of A0 B = {rho} B A0")
        out.append(B)
    return out


def centralizer_elements(A0: Mat) -> list[Mat]:
    _require_irreducible(A0)
    return twisted_solutions(A0, A0.ctx.one)


def _poly_at(coeffs, A0: Mat) -> Mat:
    E = Mat.identity(A0.n, A0.ctx)
    acc = E * A0.ctx.zero
    for c in reversed(coeffs):
        acc = acc @ A0 + E * c
    return acc


def matrix_order_is(M: Mat, order: int) -> bool:
    E = Mat.identity(M.n, M.ctx)
    if M ** order != E:
        return False
    return all(M ** (order // ell) != E for ell in prime_factors(order))


def centralizer_generator(A0: Mat) -> Mat:
    """g(A0) for the first g (lexicographic) generating F_q[t]/(f)^x."""
    _require_irreducible(A0)
    ctx = A0.ctx
    N = ctx.order ** A0.n - 1
    for coeffs in itertools.product(ctx.enumerate(), repeat=A0.n):
        if not any(coeffs):
            continue
        B = _poly_at(coeffs, A0)
        if matrix_order_is(B, N):
            assert B @ A0 == A0 @ B
            return B
    raise AssertionError("no generator found")  # unreachable for irreducible f


def centralizer_order(A0: Mat) -> int:
    return len(centralizer_elements(A0))


def centralizer_order_scan(A0: Mat) -> int:
    """Count of B in GL(n, q) commuting with A0 by exhaustive vectorized scan."""
    vf = _vec.vecfield(A0.ctx)
    n = A0.n
    X = _vec.all_matrices(vf, n)
    X = X[_vec.det(vf, X) != 0]
    A = np.array(A0.codes()).reshape(n, n)
    ok = (_vec.matmul(vf, X, A) == _vec.matmul(vf, A, X)).all(axis=(1, 2))
    return int(ok.sum())


def gl_order(n: int, q: int) -> int:
    out = 1
    for i in range(n):
        out *= q ** n - q ** i
    return out


def pgl_classes(mats) -> set:
    return {m.normalized().codes() for m in mats}


def pgl_image_order(A0: Mat) -> int:
    return len(pgl_classes(centralizer_elements(A0)))


def solvable_rhos(A0: Mat) -> list[FieldElem]:
    _require_irreducible(A0)
    return [r for r in A0.ctx.enumerate() if r and twisted_commutant(A0, r)]


def pi_image_order(A0: Mat) -> int:
    """Number of rho in F_q^x for which A0 B = rho B A0 has an invertible solution."""
    return sum(1 for r in solvable_rhos(A0) if twisted_solutions(A0, r))


def pgl_centralizer(A0: Mat) -> set:
    """Normalized representatives of the PGL-centralizer of the class of A0."""
    out = set()
    for r in solvable_rhos(A0):
        out |= pgl_classes(twisted_solutions(A0, r))
    return out


def support_condition(f: MonicPoly, q: int | None = None):
    """Largest k > 1 with k | n, q = 1 mod k and a_{n-j} = 0 for j not divisible by k."""
    q = q or f.ctx.order
    n = f.degree
    tail = f.tail
    for k in range(n, 1, -1):
        if n % k or (q - 1) % k:
            continue
        if all(not tail[n - j] for j in range(1, n + 1) if j % k):
            return k
    return None


def diag_witness(rho: FieldElem, A0: Mat) -> Mat:
    """diag(1, rho, ..., rho^{n-1}) with A0 B = rho B A0 for the appendix companion A0."""
    if not rho:
        raise ValueError("rho must be nonzero")
    k = rho.multiplicative_order()
    if k == 1:
        raise ValueError("rho must be a primitive k-th root of unity with k > 1")
    f = char_poly(A0)
    if companion(f, "appendix") != A0:
        raise ValueError("A0 must be in appendix companion form")
    n = A0.n
    if n % k or any(f.tail[n - j] for j in range(1, n + 1) if j % k):
        raise ValueError(f"support condition fails for k = {k}")
    B = Mat.diag([rho ** i for i in range(n)])
    if A0 @ B != B @ A0 * rho:
        raise AssertionError("diagonal witness identity fails")
    return B


def permutation_on(B: Mat, points: list[ProjPoint]) -> tuple[int, ...]:
    """sigma with B . points[i] = points[sigma(i)]."""
    index = {P.codes(): i for i, P in enumerate(points)}
    sigma = []
    for P in points:
        img = proj_apply(B, P).codes()
        if img not in index:
            raise ValueError("matrix does not permute the given points")
        sigma.append(index[img])
    if sorted(sigma) != list(range(len(points))):
        raise ValueError("induced map is not a permutation")
    return tuple(sigma)


@dataclass
class CentralizerReport:
    n: int
    q: int
    poly: MonicPoly
    z_gl_order: int
    pgl_image_order: int
    pi_image_order: int
    z_pgl_order: int
    support_k: int | None
    generator: Mat

    @property
    def support_condition_holds(self) -> bool:
        return self.support_k is not None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "poly": repr(self.poly),
            "z_gl_order": self.z_gl_order,
            "pgl_image_order": self.pgl_image_order,
            "pi_image_order": self.pi_image_order,
            "z_pgl_order": self.z_pgl_order,
            "support_condition_holds": self.support_condition_holds,
            "support_k": self.support_k,
            "generator": repr(self.generator),
        }


def centralizer_report(f: MonicPoly) -> CentralizerReport:
    if not f.is_irreducible():
        raise ValueError("polynomial is reducible")
    A0 = companion(f, "appendix")
    return CentralizerReport(
        n=f.degree,
        q=f.ctx.order,
        poly=f,
        z_gl_order=centralizer_order(A0),
        pgl_image_order=pgl_image_order(A0),
        pi_image_order=pi_image_order(A0),
        z_pgl_order=len(pgl_centralizer(A0)),
        support_k=support_condition(f),
        generator=centralizer_generator(A0),
    )
