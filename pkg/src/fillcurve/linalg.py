"""Exact matrix algebra over a FieldCtx.

Matrices are small (n <= 6), so everything is plain Python on FieldElem.
Two companion layouts are provided: ``"curve3"`` is the column layout
``[[0,0,a],[1,0,b],[0,1,c]]`` used for plane curves, ``"appendix"`` puts
the ones on the superdiagonal and ``(a_0, ..., a_{n-1})`` in the last row.
"""

from __future__ import annotations

import itertools

from . import poly
from .ffield import FieldCtx, FieldElem, embed, format_element


class Mat:
    """Immutable n x n matrix over one field."""

    __slots__ = ("ctx", "rows")

    def __init__(self, rows, ctx: FieldCtx | None = None):
        rows = [list(r) for r in rows]
        if ctx is None:
            ctx = next(x.ctx for r in rows for x in r if isinstance(x, FieldElem))
        self.ctx = ctx
        self.rows = tuple(tuple(ctx(x) if not isinstance(x, FieldElem) else x for x in r)
                          for r in rows)
        for r in self.rows:
            if len(r) != len(self.rows):
                raise ValueError("matrix must be square")
            for x in r:
                if x.ctx is not ctx and x.ctx != ctx:
                    raise ValueError("entries from different fields")

    @classmethod
    def identity(cls, n, ctx):
        return cls([[ctx.one if i == j else ctx.zero for j in range(n)] for i in range(n)], ctx)

    @classmethod
    def scalar(cls, n, c: FieldElem):
        return cls([[c if i == j else c.ctx.zero for j in range(n)] for i in range(n)], c.ctx)

    @classmethod
    def diag(cls, values):
        values = list(values)
        ctx = values[0].ctx
        n = len(values)
        return cls([[values[i] if i == j else ctx.zero for j in range(n)] for i in range(n)], ctx)

    @classmethod
    def from_codes(cls, codes, ctx):
        return cls([[ctx.from_code(int(c)) for c in r] for r in codes], ctx)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def codes(self) -> tuple:
        return tuple(x.n for r in self.rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.ctx == other.ctx and self.codes() == other.codes()

    def __hash__(self):
        return hash(self.codes())

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise ValueError(f"field mismatch: {self.ctx} vs {other.ctx}")
        if other.n != self.n:
            raise ValueError("dimension mismatch")

    def __add__(self, other):
        self._check(other)
        return Mat([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ctx)

    def __sub__(self, other):
        self._check(other)
        return Mat([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ctx)

    def __neg__(self):
        return Mat([[-a for a in r] for r in self.rows], self.ctx)

    def __mul__(self, c):
        if isinstance(c, Mat):
            return NotImplemented
        return Mat([[a * c for a in r] for r in self.rows], self.ctx)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Mat):
            self._check(other)
            cols = list(zip(*other.rows))
            return Mat([[_dot(r, c) for c in cols] for r in self.rows], self.ctx)
        return [_dot(r, other) for r in self.rows]

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        result = Mat.identity(self.n, self.ctx)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    @property
    def T(self) -> "Mat":
        return Mat(list(zip(*self.rows)), self.ctx)

    def det(self) -> FieldElem:
        m = [list(r) for r in self.rows]
        n = self.n
        det = self.ctx.one
        for col in range(n):
            piv = next((r for r in range(col, n) if m[r][col]), None)
            if piv is None:
                return self.ctx.zero
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                det = -det
            det = det * m[col][col]
            inv = m[col][col].inv()
            for r in range(col + 1, n):
                if m[r][col]:
                    f = m[r][col] * inv
                    m[r] = [a - f * b for a, b in zip(m[r], m[col])]
        return det

    def inv(self) -> "Mat":
        n = self.n
        ctx = self.ctx
        m = [list(r) + [ctx.one if i == j else ctx.zero for j in range(n)]
             for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if m[r][col]), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            m[col], m[piv] = m[piv], m[col]
            inv = m[col][col].inv()
            m[col] = [a * inv for a in m[col]]
            for r in range(n):
                if r != col and m[r][col]:
                    f = m[r][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[col])]
        return Mat([r[n:] for r in m], ctx)

    def minor(self, i, j) -> "Mat":
        return Mat([[x for c, x in enumerate(r) if c != j]
                    for k, r in enumerate(self.rows) if k != i], self.ctx)

    def cofactor(self) -> "Mat":
        """Matrix of signed cofactors, computed from minors."""
        n = self.n
        if n == 1:
            return Mat([[self.ctx.one]], self.ctx)
        return Mat([[self.minor(i, j).det() * (-1) ** (i + j) for j in range(n)]
                    for i in range(n)], self.ctx)

    def is_scalar(self) -> bool:
        c = self.rows[0][0]
        return all((x == c) if i == j else not x
                   for i, r in enumerate(self.rows) for j, x in enumerate(r))

    def embed(self, ext: FieldCtx) -> "Mat":
        return Mat([[embed(x, ext) for x in r] for r in self.rows], ext)

    def normalized(self) -> "Mat":
        """PGL representative: first nonzero entry (row-major) scaled to 1."""
        lead = next(x for r in self.rows for x in r if x)
        return self * lead.inv()

    def __repr__(self):
        return format_matrix(self)


def _dot(r, c):
    acc = r[0] * c[0]
    for a, b in zip(r[1:], c[1:]):
        acc = acc + a * b
    return acc


def format_matrix(m: Mat) -> str:
    return ";".join(",".join(format_element(x) for x in r) for r in m.rows)


def parse_matrix(text: str, ctx: FieldCtx) -> Mat:
    from .ffield import parse_element
    rows = []
    for row in text.split(";"):
        rows.append([parse_element(tok, ctx) for tok in split_top_level(row)])
    return Mat(rows, ctx)


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside square brackets."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [s.strip() for s in out]


# --------------------------------------------------------------------------
# row reduction

def rref(rows):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][col].inv()
        m[r] = [a * inv for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols: int | None = None, ctx: FieldCtx | None = None):
    """Basis of {v : rows . v = 0}."""
    if ncols is None:
        ncols = len(rows[0])
    if ctx is None:
        ctx = rows[0][0].ctx
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ctx.zero] * ncols
        v[f] = ctx.one
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def span(basis, ctx: FieldCtx):
    """Every vector in the F-span of ``basis`` (|F|^len(basis) of them)."""
    if not basis:
        return
    n = len(basis[0])
    for coeffs in itertools.product(ctx.enumerate(), repeat=len(basis)):
        v = [ctx.zero] * n
        for c, b in zip(coeffs, basis):
            if c:
                v = [x + c * y for x, y in zip(v, b)]
        yield v


# --------------------------------------------------------------------------
# polynomials attached to matrices

class MonicPoly:
    """t^n + c_{n-1} t^{n-1} + ... + c_0, stored as (c_0, ..., c_{n-1})."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, coeffs, ctx: FieldCtx):
        self.ctx = ctx
        self.coeffs = tuple(ctx(c) if not isinstance(c, FieldElem) else c for c in coeffs)

    @classmethod
    def from_tail(cls, tail, ctx):
        """t^n - (a_{n-1} t^{n-1} + ... + a_0) from (a_0, ..., a_{n-1})."""
        return cls([-ctx(a) if not isinstance(a, FieldElem) else -a for a in tail], ctx)

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    @property
    def tail(self) -> tuple:
        return tuple(-c for c in self.coeffs)

    def full(self) -> list:
        return list(self.coeffs) + [self.ctx.one]

    def __call__(self, x: FieldElem) -> FieldElem:
        return poly.peval(self.full(), x)

    def roots(self, ext: FieldCtx | None = None):
        return poly.roots(self.full(), ext or self.ctx)

    def is_irreducible(self) -> bool:
        return poly.is_irreducible(self.full(), self.ctx)

    def __eq__(self, other):
        if not isinstance(other, MonicPoly):
            return NotImplemented
        return self.ctx == other.ctx and [c.n for c in self.coeffs] == [c.n for c in other.coeffs]

    def __hash__(self):
        return hash(tuple(c.n for c in self.coeffs))

    def __repr__(self):
        terms = [f"t^{self.degree}"]
        for i in range(self.degree - 1, -1, -1):
            c = self.coeffs[i]
            if c:
                mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
                cs = format_element(c)
                terms.append(cs if not mono else (mono if c == 1 else f"{cs}*{mono}"))
        return "+".join(terms)


def char_poly(A: Mat) -> MonicPoly:
    """det(tE - A) by cofactor expansion over F[t]."""
    ctx = A.ctx
    n = A.n
    entries = [[poly.trim(([-A[i, j], ctx.one] if i == j else [-A[i, j]])) for j in range(n)]
               for i in range(n)]
    full = _poly_det(entries)
    full = full + [ctx.zero] * (n + 1 - len(full))
    assert full[n] == 1
    return MonicPoly(full[:n], ctx)


def _poly_det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    acc = []
    for j in range(n):
        if not m[0][j]:
            continue
        sub = [r[:j] + r[j + 1:] for r in m[1:]]
        term = poly.pmul(m[0][j], _poly_det(sub))
        acc = poly.padd(acc, term) if j % 2 == 0 else poly.psub(acc, term)
    return acc


def companion(f: MonicPoly, shape: str = "appendix") -> Mat:
    ctx = f.ctx
    n = f.degree
    if n < 2:
        raise ValueError("companion needs degree >= 2")
    tail = f.tail
    z, o = ctx.zero, ctx.one
    if shape == "curve3":
        if n != 3:
            raise ValueError("curve3 layout is only defined for n = 3")
        a, b, c = tail
        return Mat([[z, z, a], [o, z, b], [z, o, c]], ctx)
    if shape == "appendix":
        rows = [[o if j == i + 1 else z for j in range(n)] for i in range(n - 1)]
        rows.append(list(tail))
        return Mat(rows, ctx)
    raise ValueError(f"unknown companion shape {shape!r}")


# --------------------------------------------------------------------------
# projective points

class ProjPoint:
    """A point of P^{n-1}, first nonzero coordinate scaled to 1."""

    __slots__ = ("ctx", "coords")

    def __init__(self, coords, ctx: FieldCtx | None = None):
        coords = list(coords)
        if ctx is None:
            ctx = coords[0].ctx
        coords = [ctx(c) if not isinstance(c, FieldElem) else c for c in coords]
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise ValueError("the zero vector is not a projective point")
        if lead != 1:
            inv = lead.inv()
            coords = [c * inv for c in coords]
        self.ctx = ctx
        self.coords = tuple(coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def codes(self) -> tuple:
        return tuple(c.n for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.ctx == other.ctx and self.codes() == other.codes()

    def __hash__(self):
        return hash(self.codes())

    def frobenius(self, q: int) -> "ProjPoint":
        return ProjPoint([c ** q for c in self.coords], self.ctx)

    def __repr__(self):
        return "(" + ":".join(format_element(c) for c in self.coords) + ")"


def proj_points(n: int, ctx: FieldCtx) -> list[ProjPoint]:
    """All points of P^{n-1}(ctx) as normalized n-vectors, lexicographic order."""
    elems = ctx.enumerate()
    out = []
    for lead in range(n - 1, -1, -1):
        for tail in itertools.product(elems, repeat=n - 1 - lead):
            out.append(ProjPoint([ctx.zero] * lead + [ctx.one] + list(tail), ctx))
    return out


def proj_apply(M: Mat, P: ProjPoint) -> ProjPoint:
    if M.ctx != P.ctx:
        M = M.embed(P.ctx)
    return ProjPoint(M @ list(P.coords), P.ctx)


def eigen_points(A: Mat, ext: FieldCtx | None = None) -> list[ProjPoint]:
    """Eigen-points of A^T over F_{q^n}, each the q-Frobenius image of the previous.

    The first point belongs to the first root (enumeration order) of the
    characteristic polynomial.
    """
    from .ffield import extension
    f = char_poly(A)
    if not f.is_irreducible():
        raise ValueError("characteristic polynomial is reducible")
    q = A.ctx.order
    n = A.n
    if ext is None:
        ext = extension(A.ctx, n)
    lam = f.roots(ext)[0]
    At = A.T.embed(ext)
    rows = [[x - lam if i == j else x for j, x in enumerate(r)] for i, r in enumerate(At.rows)]
    basis = nullspace(rows, n, ext)
    assert len(basis) == 1
    pts = [ProjPoint(basis[0], ext)]
    for _ in range(n - 1):
        pts.append(pts[-1].frobenius(q))
    return pts
