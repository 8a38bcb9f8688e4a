"""Trivariate homogeneous forms and the ideal of P^2(F_q).

The generators ``U = y^q z - y z^q``, ``V = z^q x - z x^q`` and
``W = x^q y - x y^q`` span the degree-(q+1) part of the vanishing ideal,
and every degree-(q+2) member is ``F_A = (x, y, z) A (U, V, W)^T``.
"""

from __future__ import annotations

from .ffield import FieldCtx, FieldElem, embed, format_element
from .linalg import Mat, ProjPoint, proj_points, rank


class HomForm:
    """Sparse homogeneous polynomial in x, y, z: ``{(i, j, k): coeff}``."""

    __slots__ = ("ctx", "degree", "terms")

    def __init__(self, ctx: FieldCtx, degree: int, terms=None):
        self.ctx = ctx
        self.degree = degree
        clean = {}
        for e, c in (terms or {}).items():
            if not isinstance(c, FieldElem):
                c = ctx(c)
            if c:
                if sum(e) != degree:
                    raise ValueError(f"term {e} does not have degree {degree}")
                clean[tuple(e)] = c
        self.terms = clean

    # -- constructors ----------------------------------------------------------

    @classmethod
    def var(cls, ctx, idx: int):
        e = [0, 0, 0]
        e[idx] = 1
        return cls(ctx, 1, {tuple(e): ctx.one})

    @classmethod
    def linear(cls, ctx, coeffs):
        """alpha x + beta y + gamma z."""
        return cls(ctx, 1, {(1, 0, 0): coeffs[0], (0, 1, 0): coeffs[1], (0, 0, 1): coeffs[2]})

    @classmethod
    def monomial(cls, ctx, exps, coeff=1):
        return cls(ctx, sum(exps), {tuple(exps): coeff})

    @classmethod
    def zero(cls, ctx, degree):
        return cls(ctx, degree)

    # -- arithmetic ----------------------------------------------------------

    def _same(self, other):
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise ValueError(f"field mismatch: {self.ctx} vs {other.ctx}")
        if other.degree != self.degree and self.terms and other.terms:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other):
        self._same(other)
        deg = self.degree if self.terms else other.degree
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return HomForm(self.ctx, deg, out)

    def __neg__(self):
        return HomForm(self.ctx, self.degree, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HomForm):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ValueError(f"field mismatch: {self.ctx} vs {other.ctx}")
            out = {}
            for (a, b, c), u in self.terms.items():
                for (d, e, f), v in other.terms.items():
                    key = (a + d, b + e, c + f)
                    w = u * v
                    out[key] = out[key] + w if key in out else w
            return HomForm(self.ctx, self.degree + other.degree, out)
        if isinstance(other, (int, FieldElem)):
            c = self.ctx(other) if isinstance(other, int) else other
            return HomForm(self.ctx, self.degree, {e: v * c for e, v in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = HomForm(self.ctx, 0, {(0, 0, 0): self.ctx.one})
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, HomForm):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return (self.degree == other.degree and self.ctx == other.ctx
                and self.terms.keys() == other.terms.keys()
                and all(self.terms[e] == other.terms[e] for e in self.terms))

    def __hash__(self):
        return hash((self.degree, frozenset((e, c.n) for e, c in self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps) -> FieldElem:
        return self.terms.get(tuple(exps), self.ctx.zero)

    # -- calculus and evaluation --------------------------------------------------

    def partial(self, idx: int) -> "HomForm":
        out = {}
        for e, c in self.terms.items():
            if e[idx]:
                ne = list(e)
                ne[idx] -= 1
                out[tuple(ne)] = c * e[idx]
        return HomForm(self.ctx, max(self.degree - 1, 0), out)

    def eval(self, point) -> FieldElem:
        """Value at a coordinate triple (or ProjPoint); coefficients are embedded."""
        coords = list(point)
        K = coords[0].ctx
        powers = [{}, {}, {}]
        acc = K.zero
        for e, c in self.terms.items():
            t = embed(c, K)
            for v in range(3):
                k = e[v]
                if k:
                    if k not in powers[v]:
                        powers[v][k] = coords[v] ** k
                    t = t * powers[v][k]
            acc = acc + t
        return acc

    def __call__(self, point):
        return self.eval(point)

    def embed(self, ext: FieldCtx) -> "HomForm":
        return HomForm(ext, self.degree, {e: embed(c, ext) for e, c in self.terms.items()})

    def substitute(self, lx: "HomForm", ly: "HomForm", lz: "HomForm") -> "HomForm":
        """Replace x, y, z by forms of a common degree (naive expansion)."""
        subs = [lx, ly, lz]
        e0 = lx.degree
        cache = [{}, {}, {}]

        def power(v, k):
            if k not in cache[v]:
                cache[v][k] = subs[v] ** k if k else HomForm(self.ctx, 0, {(0, 0, 0): self.ctx.one})
            return cache[v][k]

        out = HomForm(lx.ctx, self.degree * e0)
        for e, c in self.terms.items():
            out = out + (power(0, e[0]) * power(1, e[1]) * power(2, e[2])) * embed(c, lx.ctx)
        return out

    def divmod_linear(self, l: "HomForm"):
        """Divide by a linear form; returns (quotient, remainder)."""
        if l.degree != 1 or l.is_zero():
            raise ValueError("divisor must be a nonzero linear form")
        # eliminate the last variable with a nonzero coefficient in l
        v = max(i for i in range(3) if l.coefficient(_unit(i)))
        lead_inv = l.coefficient(_unit(v)).inv()
        rem = HomForm(self.ctx, self.degree, dict(self.terms))
        quot = {}
        while True:
            top = [e for e in rem.terms if e[v] > 0]
            if not top:
                break
            e = max(top, key=lambda t: (t[v], t))
            c = rem.terms[e] * lead_inv
            qe = list(e)
            qe[v] -= 1
            qe = tuple(qe)
            quot[qe] = quot[qe] + c if qe in quot else c
            rem = rem - HomForm.monomial(self.ctx, qe, c) * l
        return HomForm(self.ctx, self.degree - 1, quot), rem

    # -- text ----------------------------------------------------------------------

    def __repr__(self):
        return format_form(self)


def _unit(i):
    e = [0, 0, 0]
    e[i] = 1
    return tuple(e)


def format_form(F: HomForm) -> str:
    """Deterministic text: terms in descending lexicographic exponent order."""
    if not F.terms:
        return "0"
    parts = []
    for e in sorted(F.terms, reverse=True):
        factors = [format_element(F.terms[e])]
        for name, k in zip("xyz", e):
            if k:
                factors.append(name if k == 1 else f"{name}^{k}")
        parts.append("*".join(factors))
    return " + ".join(parts)


# --------------------------------------------------------------------------
# the ideal of P^2(F_q)

def _check_q(q, ctx):
    if ctx.order != q:
        raise ValueError(f"expected the field of order {q}, got {ctx}")


def uvw(q: int, ctx: FieldCtx):
    _check_q(q, ctx)
    x, y, z = (HomForm.var(ctx, i) for i in range(3))
    U = y ** q * z - y * z ** q
    V = z ** q * x - z * x ** q
    W = x ** q * y - x * y ** q
    return U, V, W


def build_FA(A: Mat) -> HomForm:
    """(x, y, z) A (U, V, W)^T over the field of A."""
    ctx = A.ctx
    q = ctx.order
    gens = uvw(q, ctx)
    xs = [HomForm.var(ctx, i) for i in range(3)]
    out = HomForm(ctx, q + 2)
    for i in range(3):
        for j in range(3):
            if A[i, j]:
                out = out + xs[i] * gens[j] * A[i, j]
    return out


def canonical_form(cubic, ctx: FieldCtx) -> HomForm:
    """yU + zV + (ax + by + cz)W for the cubic t^3 - (c t^2 + b t + a)."""
    c, b, a = (ctx(v) if not isinstance(v, FieldElem) else v for v in cubic)
    U, V, W = uvw(ctx.order, ctx)
    x, y, z = (HomForm.var(ctx, i) for i in range(3))
    return y * U + z * V + HomForm.linear(ctx, (a, b, c)) * W


def is_zero_form(A: Mat) -> bool:
    """F_A vanishes identically; checked by expansion and against A being scalar."""
    literal = build_FA(A).is_zero()
    if literal != A.is_scalar():
        raise AssertionError(f"zero-form test disagrees with scalar test for {A}")
    return literal


def substituted_uvw(B: Mat):
    """U, V, W after the substitution (x, y, z)^T = B (x', y', z')^T."""
    ctx = B.ctx
    q = ctx.order
    lin = [HomForm.linear(ctx, B.rows[i]) for i in range(3)]
    return tuple(G.substitute(*lin) for G in uvw(q, ctx))


def pullback_uvw(B: Mat, check: bool = True) -> Mat:
    """(det B) B^{-T}; with ``check`` the substitution identity is expanded and verified."""
    if not B.det():
        raise ZeroDivisionError("B is singular")
    M = B.inv().T * B.det()
    if check and not covariance_holds(B, M):
        raise AssertionError(f"U, V, W covariance fails for {B}")
    return M


def covariance_holds(B: Mat, M: Mat | None = None) -> bool:
    if M is None:
        M = B.inv().T * B.det()
    ctx = B.ctx
    gens = uvw(ctx.order, ctx)
    lhs = substituted_uvw(B)
    for i in range(3):
        rhs = HomForm(ctx, ctx.order + 1)
        for j in range(3):
            rhs = rhs + gens[j] * M[i, j]
        if lhs[i] != rhs:
            return False
    return True


def partials(F: HomForm):
    return F.partial(0), F.partial(1), F.partial(2)


def eval_form(F: HomForm, P) -> FieldElem:
    return F.eval(P)


def monomials(d: int):
    """Exponent triples of degree d in descending lexicographic order."""
    return [(i, j, d - i - j) for i in range(d, -1, -1) for j in range(d - i, -1, -1)]


def hd_dimension(q: int, d: int) -> tuple[int, int]:
    """(dim of the degree-d part of (U, V, W), dim of forms vanishing on P^2(F_q))."""
    from .ffield import field_of_order
    ctx = field_of_order(q)
    mons = monomials(d)
    pts = proj_points(3, ctx)
    evals = []
    for P in pts:
        row = []
        for e in mons:
            v = ctx.one
            for c, k in zip(P, e):
                v = v * c ** k
            row.append(v)
        evals.append(row)
    dim_vanishing = len(mons) - rank(evals)
    if d < q + 1:
        return 0, dim_vanishing
    gens = uvw(q, ctx)
    rows = []
    for e in monomials(d - q - 1):
        m = HomForm.monomial(ctx, e)
        for G in gens:
            prod = m * G
            rows.append([prod.coefficient(t) for t in mons])
    return rank(rows), dim_vanishing


def pencil_analysis(a1, a2, a3):
    """Singular point and F_q-line factorization of a1 U + a2 V + a3 W."""
    coeffs = [a1, a2, a3]
    if not any(coeffs):
        raise ValueError("all coefficients are zero")
    ctx = next(c.ctx for c in coeffs if isinstance(c, FieldElem))
    coeffs = [ctx(c) if not isinstance(c, FieldElem) else c for c in coeffs]
    q = ctx.order
    U, V, W = uvw(q, ctx)
    F = U * coeffs[0] + V * coeffs[1] + W * coeffs[2]
    point = ProjPoint(coeffs, ctx)
    lines = []
    rest = F
    for L in proj_points(3, ctx):
        if not (L[0] * coeffs[0] + L[1] * coeffs[1] + L[2] * coeffs[2]):
            l = HomForm.linear(ctx, L.coords)
            rest, rem = rest.divmod_linear(l)
            if not rem.is_zero():
                raise AssertionError(f"line {l} does not divide {F}")
            lines.append(l)
    if len(lines) != q + 1 or rest.degree != 0:
        raise AssertionError("pencil member is not a union of q+1 lines")
    return {"singular_point": point, "lines": lines, "scalar": rest.coefficient((0, 0, 0))}


def product(forms):
    it = iter(forms)
    out = next(it)
    for f in it:
        out = out * f
    return out
