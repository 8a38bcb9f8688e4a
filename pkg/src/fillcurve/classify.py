"""Projective classification of the smooth curves via their cubics.

Two smooth curves C_A, C_B are projectively equivalent over F_q exactly
when f_A(t) = rho^3 f_B((t - mu)/rho) for some rho != 0 and mu.  Cubics
are written ``(c, b, a)`` for t^3 - (c t^2 + b t + a).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import poly
from ._vec import all_matrices, det, matmul, vecfield
from .ffield import FieldCtx, FieldElem, field_of_order
from .linalg import Mat, char_poly
from .smooth import cubic_poly, format_cubic


@dataclass(frozen=True)
class Cubic:
    """t^3 - (c t^2 + b t + a)."""

    c: FieldElem
    b: FieldElem
    a: FieldElem

    @classmethod
    def of(cls, cba, ctx: FieldCtx) -> "Cubic":
        return cls(*(ctx(v) if not isinstance(v, FieldElem) else v for v in cba))

    @classmethod
    def from_matrix(cls, A: Mat) -> "Cubic":
        a, b, c = char_poly(A).tail
        return cls(c, b, a)

    @property
    def ctx(self) -> FieldCtx:
        return self.a.ctx

    def astuple(self):
        return (self.c, self.b, self.a)

    def key(self):
        idx = self.ctx.index
        return (idx(self.c), idx(self.b), idx(self.a))

    def is_irreducible(self) -> bool:
        return cubic_poly(self.astuple(), self.ctx).is_irreducible()

    def __repr__(self):
        return format_cubic(self.astuple(), self.ctx)


def substitute(f: Cubic, rho: FieldElem, mu: FieldElem) -> Cubic:
    """rho^3 f((t - mu)/rho), expanded."""
    ctx = f.ctx
    rho, mu = ctx(rho), ctx(mu)
    if not rho:
        raise ValueError("rho must be nonzero")
    u = [-mu, ctx.one]                      # t - mu
    u2 = poly.pmul(u, u)
    u3 = poly.pmul(u2, u)
    g = poly.psub(u3, poly.pscale(u2, f.c * rho))
    g = poly.psub(g, poly.pscale(u, f.b * rho * rho))
    g = poly.psub(g, [f.a * rho ** 3])
    g = g + [ctx.zero] * (4 - len(g))
    return Cubic(-g[2], -g[1], -g[0])


def group_elements(ctx: FieldCtx):
    """(rho, mu) pairs in deterministic order."""
    return [(r, m) for r in ctx.enumerate() if r for m in ctx.enumerate()]


def equivalent(f: Cubic, g: Cubic):
    """A witness (rho, mu) with substitute(g, rho, mu) == f, or None."""
    for rho, mu in group_elements(f.ctx):
        if substitute(g, rho, mu) == f:
            return rho, mu
    return None


def orbit(f: Cubic) -> list[Cubic]:
    seen = {}
    for rho, mu in group_elements(f.ctx):
        h = substitute(f, rho, mu)
        seen.setdefault(h.key(), h)
    return [seen[k] for k in sorted(seen)]


def irreducible_cubics(q: int) -> list[Cubic]:
    ctx = field_of_order(q)
    el = ctx.enumerate()
    out = []
    for c in el:
        for b in el:
            for a in el:
                f = Cubic(c, b, a)
                if f.is_irreducible():
                    out.append(f)
    return out


# --------------------------------------------------------------------------
# Tallini's normal forms as orbit labels

def _shape_i(h):   # t^3 - a t - a
    return not h.c and h.b == h.a and bool(h.a)


def _shape_ii(h):  # t^3 - a
    return not h.c and not h.b


def _shape_iii(h):  # t^3 + a t^2 + 1, i.e. (c, b, a) = (-a', 0, -1)
    return not h.b and h.a == -1


def tallini_label(f: Cubic) -> set[str]:
    if not f.is_irreducible():
        raise ValueError(f"{f} is reducible")
    q = f.ctx.order
    orb = orbit(f)
    labels = set()
    if any(_shape_i(h) for h in orb):
        labels.add("form_i")
    if q % 3 == 1 and any(_shape_ii(h) for h in orb):
        labels.add("form_ii")
    if f.ctx.p == 3 and any(_shape_iii(h) for h in orb):
        labels.add("form_iii")
    return labels or {"generic"}


def special_case_detect(f: Cubic, q: int | None = None) -> dict[str, bool]:
    """The two situations where the automorphism group is three times larger."""
    if not f.is_irreducible():
        raise ValueError(f"{f} is reducible")
    ctx = f.ctx
    q = q or ctx.order
    case_i = q % 3 == 1 and any(_shape_ii(h) for h in orbit(f))
    squares = {(x * x).n for x in ctx.enumerate() if x}
    case_ii = ctx.p == 3 and not f.c and f.b.n in squares
    return {"case_i_thm10": case_i, "case_ii_thm10": case_ii}


# --------------------------------------------------------------------------

@dataclass
class ClassReport:
    q: int
    representatives: list = field(default_factory=list)
    class_sizes: list = field(default_factory=list)
    tallini_labels: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "irreducible_cubics": sum(self.class_sizes),
            "classes": [
                {"representative": repr(r), "size": s, "labels": sorted(l)}
                for r, s, l in zip(self.representatives, self.class_sizes, self.tallini_labels)
            ],
        }


def classes(q: int) -> ClassReport:
    """Orbits of the irreducible cubics; representative = lexicographic minimum."""
    todo = {f.key(): f for f in irreducible_cubics(q)}
    report = ClassReport(q)
    while todo:
        f = todo[min(todo)]
        orb = orbit(f)
        for h in orb:
            if h.key() not in todo:
                raise AssertionError(f"orbit of {f} leaves the irreducible cubics")
            del todo[h.key()]
        report.representatives.append(orb[0])
        report.class_sizes.append(len(orb))
        report.tallini_labels.append(tallini_label(orb[0]))
    return report


# --------------------------------------------------------------------------
# curve equivalence

def curves_equivalent(A: Mat, B: Mat) -> bool:
    fa, fb = Cubic.from_matrix(A), Cubic.from_matrix(B)
    if not (fa.is_irreducible() and fb.is_irreducible()):
        raise ValueError("both characteristic polynomials must be irreducible")
    return equivalent(fa, fb) is not None


def transformation_search(A: Mat, B: Mat):
    """Brute force: some S = T^t in GL(3, q) and (rho, mu) with S A S^-1 = rho B + mu E.

    Returns (S, rho, mu) or None.  Exhaustive over all 3x3 matrices.
    """
    ctx = A.ctx
    vf = vecfield(ctx)
    S = all_matrices(vf, 3)
    S = S[det(vf, S) != 0]
    SA = matmul(vf, S, np.array(A.codes()).reshape(3, 3))
    E = Mat.identity(3, ctx)
    for rho, mu in group_elements(ctx):
        M = np.array((B * rho + E * mu).codes()).reshape(3, 3)
        MS = matmul(vf, M, S)
        hit = np.nonzero((SA == MS).all(axis=(1, 2)))[0]
        if hit.size:
            return Mat.from_codes(S[hit[0]], ctx), rho, mu
    return None

