"""Automorphism groups of the curves C_A inside PGL(3, q).

B in GL(3, q) induces an automorphism of C_A exactly when
t^B A t^B^-1 = rho A + mu E for some rho != 0 and mu, equivalently
t^A B = rho B t^A + mu B.  For fixed (rho, mu) that is a linear system in
the nine entries of B, so the group is enumerated one system at a time.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _vec
from .centralizer import centralizer_generator, pgl_classes, permutation_on
from .classify import Cubic, group_elements, special_case_detect
from .ffield import FieldElem, extension
from .linalg import Mat, ProjPoint, char_poly, eigen_points, nullspace, span


def _require_irreducible(A: Mat):
    if not char_poly(A).is_irreducible():
        raise ValueError("characteristic polynomial is reducible")


def aut_condition(B: Mat, A: Mat):
    """The (rho, mu) with t^B A t^B^-1 = rho A + mu E, or None."""
    if not B.det():
        raise ValueError("B is singular")
    if A.is_scalar():
        raise ValueError("A is scalar; (rho, mu) is not unique")
    Bt = B.T
    M = Bt @ A @ Bt.inv()
    for rho in A.ctx.enumerate():
        if not rho:
            continue
        D = M - A * rho
        if D.is_scalar():
            return rho, D[0, 0]
    return None


def _solution_space(X: Mat, rho: FieldElem, mu: FieldElem) -> list[list[FieldElem]]:
    """Basis (flattened) of {B : X B - rho B X - mu B = 0}."""
    n = X.n
    ctx = X.ctx
    rows = []
    for i in range(n):
        for j in range(n):
            row = [ctx.zero] * (n * n)
            for k in range(n):
                row[k * n + j] = row[k * n + j] + X[i, k]
                row[i * n + k] = row[i * n + k] - rho * X[k, j]
            row[i * n + j] = row[i * n + j] - mu
            rows.append(row)
    return nullspace(rows, n * n, ctx)


def aut_elements(A: Mat) -> list[Mat]:
    """Normalized representatives of every automorphism, sorted by codes."""
    _require_irreducible(A)
    ctx = A.ctx
    At = A.T
    found = {}
    for rho, mu in group_elements(ctx):
        basis = _solution_space(At, rho, mu)
        if not basis:
            continue
        for v in span(basis, ctx):
            if not any(v):
                continue
            B = Mat([v[0:3], v[3:6], v[6:9]], ctx)
            if not B.det():
                continue
            N = B.normalized()
            found.setdefault(N.codes(), N)
    return [found[k] for k in sorted(found)]


def gl_scan_aut(A: Mat) -> int:
    """PGL order of Aut by exhaustive scan of GL(3, q); use only for tiny q."""
    _require_irreducible(A)
    ctx = A.ctx
    vf = _vec.vecfield(ctx)
    S = _vec.invertible_matrices(vf, 3)          # S plays the role of t^B
    SA = _vec.matmul(vf, S, np.array(A.codes()).reshape(3, 3))
    E = Mat.identity(3, ctx)
    hit = np.zeros(len(S), dtype=bool)
    for rho, mu in group_elements(ctx):
        M = np.array((A * rho + E * mu).codes()).reshape(3, 3)
        hit |= (SA == _vec.matmul(vf, M, S)).all(axis=(1, 2))
    count = int(hit.sum())
    assert count % (ctx.order - 1) == 0
    return count // (ctx.order - 1)


def b0_generator(A: Mat) -> Mat:
    """Generator of the GL-centralizer of t^A; its PGL image has order q^2+q+1."""
    return centralizer_generator(A.T)


def pgl_order(B: Mat) -> int:
    """Order of the class of B in PGL."""
    P = B
    k = 1
    while not P.is_scalar():
        P = P @ B
        k += 1
        if k > B.ctx.order ** (B.n * B.n):
            raise AssertionError("order computation did not terminate")
    return k


def pi_map(B: Mat, A: Mat, points: list[ProjPoint] | None = None) -> tuple[int, ...]:
    """Permutation sigma of the eigen-points of t^A with B Lambda_i = Lambda_sigma(i)."""
    if aut_condition(B, A) is None:
        raise ValueError("B is not an automorphism of C_A")
    if points is None:
        points = eigen_points(A)
    return permutation_on(B, points)


def is_transposition(sigma) -> bool:
    moved = [i for i, s in enumerate(sigma) if s != i]
    return len(moved) == 2


def _plane_points(vf: _vec.VecField) -> np.ndarray:
    """Codes of all normalized points of P^2, shape (N, 3)."""
    Q = vf.q
    el = vf.elements()
    yy, zz = np.meshgrid(el, el, indexing="ij")
    chart_x = np.stack([np.ones(Q * Q, dtype=np.int64), yy.ravel(), zz.ravel()], axis=1)
    chart_y = np.stack([np.zeros(Q, dtype=np.int64), np.ones(Q, dtype=np.int64), el], axis=1)
    chart_z = np.array([[0, 0, 1]], dtype=np.int64)
    return np.concatenate([chart_z, chart_y, chart_x])


def fixed_points_of(M: Mat) -> set[ProjPoint]:
    """Points of P^2 over M.ctx fixed by M (exhaustive)."""
    vf = _vec.vecfield(M.ctx)
    P = _plane_points(vf)
    Mc = np.array(M.codes()).reshape(3, 3)
    img = np.zeros_like(P)
    for i in range(3):
        acc = vf.mul(Mc[i, 0], P[:, 0])
        for j in (1, 2):
            acc = vf.add(acc, vf.mul(Mc[i, j], P[:, j]))
        img[:, i] = acc
    # P fixed iff img is proportional to P, i.e. all 2x2 minors vanish
    fixed = np.ones(len(P), dtype=bool)
    for i, j in ((0, 1), (0, 2), (1, 2)):
        fixed &= vf.mul(P[:, i], img[:, j]) == vf.mul(P[:, j], img[:, i])
    fixed &= (img != 0).any(axis=1)
    return {ProjPoint([M.ctx.from_code(int(c)) for c in row], M.ctx) for row in P[fixed]}


def fixed_points(A: Mat, s: int) -> set[ProjPoint]:
    """Points of P^2(F_{q^3}) fixed by B0^s, 1 <= s < q^2+q+1."""
    q = A.ctx.order
    if not 1 <= s < q * q + q + 1:
        raise ValueError(f"s must lie in [1, {q * q + q}]")
    B = b0_generator(A) ** s
    return fixed_points_of(B.embed(extension(A.ctx, 3)))


def is_normal(sub: set, group: list[Mat]) -> bool:
    """Conjugation by each element of ``group`` maps the PGL set ``sub`` onto itself."""
    ctx = group[0].ctx
    sub_mats = [Mat.from_codes(np.array(c).reshape(3, 3), ctx) for c in sub]
    for g in group:
        gi = g.inv()
        if pgl_classes(g @ h @ gi for h in sub_mats) != sub:
            return False
    return True


def is_closed(elements: list[Mat]) -> bool:
    keys = pgl_classes(elements)
    for g in elements:
        if g.inv().normalized().codes() not in keys:
            return False
        for h in elements:
            if (g @ h).normalized().codes() not in keys:
                return False
    return True


def cyclic_subgroup(B: Mat) -> set:
    out = set()
    P = B
    while True:
        key = P.normalized().codes()
        if key in out:
            return out
        out.add(key)
        P = P @ B


@dataclass
class AutGroupReport:
    q: int
    cubic: Cubic
    order: int
    singer_order: int
    quotient: str
    case_detected: str
    elements: list = field(default_factory=list, repr=False)

    @property
    def tallini_corrected(self) -> bool:
        return self.quotient == "Z3" and self.order == 3 * self.singer_order

    def to_dict(self, with_elements: bool = False) -> dict:
        out = {
            "q": self.q,
            "cubic": repr(self.cubic),
            "order": self.order,
            "singer_order": self.singer_order,
            "quotient": self.quotient,
            "case_detected": self.case_detected,
            "tallini_corrected": self.tallini_corrected,
        }
        if with_elements:
            out["elements"] = [repr(e) for e in self.elements]
        return out


def enumerate_aut(A: Mat) -> AutGroupReport:
    _require_irreducible(A)
    q = A.ctx.order
    elements = aut_elements(A)
    singer = len(cyclic_subgroup(b0_generator(A)))
    order = len(elements)
    if order % singer:
        raise AssertionError("Singer subgroup order does not divide |Aut|")
    index = order // singer
    if index not in (1, 3):
        raise AssertionError(f"unexpected index {index}")
    cubic = Cubic.from_matrix(A)
    det = special_case_detect(cubic)
    case = "case_i" if det["case_i_thm10"] else "case_ii" if det["case_ii_thm10"] else "none"
    return AutGroupReport(q, cubic, order, singer, "Z3" if index == 3 else "trivial", case, elements)


def quotient_structure(A: Mat) -> str:
    return enumerate_aut(A).quotient
