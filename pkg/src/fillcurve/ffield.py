"""Finite fields F_{p^d} = F_p[t]/(m(t)) with log/exp tables.

Elements are stored as a packed integer ``n = sum(c_i * p**i)`` where
``c_0, ..., c_{d-1}`` are the coefficients of the residue polynomial
(constant term first).  The public encoding is the coefficient vector.

Every context is built once per ``(p, modulus)`` and then shared; use
:func:`GF` and :func:`extension` rather than the constructor.
"""

from __future__ import annotations

import functools
import itertools
import re


# --------------------------------------------------------------------------
# integer helpers

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` with ``q = p**e``, or None if q is not a prime power."""
    if q < 2:
        return None
    p = prime_factors(q)
    if len(p) != 1:
        return None
    p = p[0]
    e = 0
    while q > 1:
        q //= p
        e += 1
    return p, e


# --------------------------------------------------------------------------
# polynomials over F_p as coefficient lists (low degree first)

def _trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmod(f, g, p):
    """Remainder of f modulo g over F_p (g nonzero)."""
    f = _trim(f)
    g = _trim(g)
    inv = pow(g[-1], p - 2, p)
    dg = len(g) - 1
    while len(f) - 1 >= dg and f:
        c = f[-1] * inv % p
        shift = len(f) - 1 - dg
        for i, gi in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gi) % p
        f = _trim(f)
    return f


def _monic_polys(p, deg):
    """Monic polynomials of exact degree ``deg`` in lexicographic order."""
    for low in itertools.product(range(p), repeat=deg):
        yield list(low) + [1]


def is_irreducible_fp(f, p: int) -> bool:
    """Irreducibility over F_p by trial division with monic factors."""
    f = _trim([c % p for c in f])
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    for k in range(1, d // 2 + 1):
        for g in _monic_polys(p, k):
            if not _pmod(f, g, p):
                return False
    return True


def smallest_irreducible(p: int, d: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree d (low first)."""
    for f in _monic_polys(p, d):
        if is_irreducible_fp(f, p):
            return tuple(f)
    raise ValueError(f"no irreducible polynomial of degree {d} over F_{p}")  # unreachable


# --------------------------------------------------------------------------

class FieldCtx:
    """The field F_p[t]/(modulus) of order ``p**d``.

    ``base`` is either None or ``(sub, gen)`` where ``sub`` is a subfield
    context and ``gen`` the packed code of the image of its generator.
    """

    def __init__(self, p: int, d: int, modulus=None, base=None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if d < 1:
            raise ValueError("degree must be positive")
        if modulus is None:
            modulus = smallest_irreducible(p, d)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != d + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus {modulus} is not monic of degree {d}")
        if not is_irreducible_fp(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.d = d
        self.modulus = modulus
        self.order = p ** d
        self._pw = [p ** i for i in range(d)]
        self._build_tables()
        self.base = None
        if base is not None:
            sub, gen = base
            if sub.p != p or d % sub.d:
                raise ValueError("base field is not a subfield")
            if self._eval_fp_poly(sub.modulus, gen) != 0:
                raise ValueError("generator image is not a root of the base modulus")
            self.base = (sub, gen)

    # -- construction helpers ------------------------------------------------

    def _polymulmod(self, a, b):
        p, d, m = self.p, self.d, self.modulus
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        for k in range(len(prod) - 1, d - 1, -1):
            c = prod[k]
            if c:
                for i in range(d + 1):
                    prod[k - d + i] = (prod[k - d + i] - c * m[i]) % p
        return prod[:d]

    def _digits(self, n):
        p = self.p
        out = []
        for _ in range(self.d):
            out.append(n % p)
            n //= p
        return out

    def _pack(self, coeffs):
        return sum(c * w for c, w in zip(coeffs, self._pw))

    def _build_tables(self):
        q = self.order
        if q == 2:
            self._exp = [1]
            self._log = [0, 0]
            self._gen = 1
        else:
            factors = prime_factors(q - 1)
            for digits in self._lex_digits():
                if not any(digits):
                    continue
                if self._poly_order_is_full(digits, factors):
                    break
            self._gen = self._pack(digits)
            exp = []
            cur = [1] + [0] * (self.d - 1)
            for _ in range(q - 1):
                exp.append(self._pack(cur))
                cur = self._polymulmod(cur, digits)
            self._exp = exp
            log = [0] * q
            for k, n in enumerate(exp):
                log[n] = k
            self._log = log
        if self.p == 2:
            self._add = int.__xor__
        elif self.d == 1:
            p = self.p
            self._add = lambda a, b: (a + b) % p
        else:
            zech = []
            for k in range(q - 1):
                s = self._add_digits(1, self._exp[k])
                zech.append(-1 if s == 0 else self._log[s])
            self._zech = zech
            self._add = self._add_zech
        self._neg = [self._pack([(-c) % self.p for c in self._digits(n)]) for n in range(q)]

    def _poly_order_is_full(self, digits, factors):
        q1 = self.order - 1
        for ell in factors:
            if self._polypow(digits, q1 // ell) == [1] + [0] * (self.d - 1):
                return False
        return True

    def _polypow(self, a, k):
        result = [1] + [0] * (self.d - 1)
        base = list(a)
        while k:
            if k & 1:
                result = self._polymulmod(result, base)
            base = self._polymulmod(base, base)
            k >>= 1
        return result

    def _add_digits(self, a, b):
        p = self.p
        return self._pack([(x + y) % p for x, y in zip(self._digits(a), self._digits(b))])

    def _add_zech(self, a, b):
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % (self.order - 1)]
        if z < 0:
            return 0
        return self._exp[(la + z) % (self.order - 1)]

    def _lex_digits(self):
        return itertools.product(range(self.p), repeat=self.d)

    def _eval_fp_poly(self, poly, x):
        """Evaluate an F_p-coefficient polynomial at the packed element x."""
        acc = 0
        for c in reversed(poly):
            acc = self._add(self._mul(acc, x), c % self.p)
        return acc

    # -- raw arithmetic on packed codes --------------------------------------

    def _mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def _pow(self, a, k):
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % (self.order - 1)]

    # -- public surface --------------------------------------------------------

    def __call__(self, value) -> "FieldElem":
        """Coerce an int, a coefficient sequence or a FieldElem into this field."""
        if isinstance(value, FieldElem):
            if value.ctx is self or value.ctx == self:
                return FieldElem(self, value.n)
            return embed(value, self)
        if isinstance(value, int):
            return FieldElem(self, value % self.p)
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.d:
            raise ValueError(f"too many coefficients for degree {self.d}")
        return FieldElem(self, self._pack(coeffs))

    def from_code(self, n: int) -> "FieldElem":
        return FieldElem(self, n)

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    @property
    def gen(self) -> "FieldElem":
        """The class of t (zero when d = 1)."""
        return FieldElem(self, self.p if self.d > 1 else 0)

    def enumerate(self) -> list["FieldElem"]:
        return list(self._enum)

    @functools.cached_property
    def _enum(self):
        return tuple(FieldElem(self, self._pack(c)) for c in self._lex_digits())

    @functools.cached_property
    def _index(self):
        return {e.n: i for i, e in enumerate(self._enum)}

    def index(self, a: "FieldElem") -> int:
        """Position of ``a`` in :meth:`enumerate` order."""
        return self._index[a.n]

    def primitive_element(self) -> "FieldElem":
        """First element in enumeration order of multiplicative order p^d - 1."""
        q1 = self.order - 1
        factors = prime_factors(q1)
        for a in self._enum:
            if a.n and all(self._pow(a.n, q1 // ell) != 1 for ell in factors):
                return a
        raise AssertionError("no primitive element")  # unreachable

    def subfield_degree(self, q: int) -> int:
        """Degree [self : F_q]; raises ValueError if F_q is not a subfield."""
        pe = prime_power(q)
        if pe is None or pe[0] != self.p or self.d % pe[1]:
            raise ValueError(f"F_{q} is not a subfield of F_{self.order}")
        return self.d // pe[1]

    def parse(self, text: str) -> "FieldElem":
        return parse_element(text, self)

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self.p == other.p and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.d})" if self.d > 1 else f"GF({self.p})"


class FieldElem:
    """An element of a :class:`FieldCtx`."""

    __slots__ = ("ctx", "n")

    def __init__(self, ctx: FieldCtx, n: int):
        self.ctx = ctx
        self.n = n

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.ctx._digits(self.n))

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ValueError(f"field mismatch: {self.ctx} vs {other.ctx}")
            return other.n
        if isinstance(other, int):
            return other % self.ctx.p
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.ctx, self.ctx._add(self.n, b))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx._neg[self.n])

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.ctx, self.ctx._add(self.n, self.ctx._neg[b]))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.ctx, self.ctx._mul(self.n, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.ctx, self.ctx._mul(self.n, self.ctx._inv(b)))

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, k: int):
        return FieldElem(self.ctx, self.ctx._pow(self.n, k))

    def inv(self) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx._inv(self.n))

    def __bool__(self):
        return self.n != 0

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.n == other.n and (self.ctx is other.ctx or self.ctx == other.ctx)
        if isinstance(other, int):
            return self.n == other % self.ctx.p
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.order, self.n))

    def multiplicative_order(self) -> int:
        if not self.n:
            raise ValueError("zero has no multiplicative order")
        q1 = self.ctx.order - 1
        order = q1
        for ell in prime_factors(q1):
            while order % ell == 0 and self.ctx._pow(self.n, order // ell) == 1:
                order //= ell
        return order

    def __repr__(self):
        return format_element(self)

    __str__ = __repr__


# --------------------------------------------------------------------------
# factories

@functools.lru_cache(maxsize=None)
def _make_ctx(p, d, modulus):
    return FieldCtx(p, d, modulus)


def GF(p: int, d: int = 1, modulus=None) -> FieldCtx:
    """The shared context for F_{p^d}; default modulus is the lex-smallest irreducible."""
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if modulus is not None:
        modulus = tuple(int(c) % p for c in modulus)
    return _make_ctx(p, d, modulus if modulus is not None else smallest_irreducible(p, d))


def field_of_order(q: int) -> FieldCtx:
    pe = prime_power(q)
    if pe is None:
        raise ValueError(f"{q} is not a prime power")
    return GF(*pe)


@functools.lru_cache(maxsize=None)
def extension(sub: FieldCtx, m: int) -> FieldCtx:
    """F_{q^m} for q = |sub|, built in one step over F_p with ``base`` set to sub.

    The image of the generator of ``sub`` is the first root of
    ``sub.modulus`` in enumeration order of the new field.
    """
    if m == 1:
        return sub
    d = sub.d * m
    plain = GF(sub.p, d)
    for a in plain._enum:
        if plain._eval_fp_poly(sub.modulus, a.n) == 0:
            gen = a.n
            break
    else:  # pragma: no cover
        raise AssertionError("subfield modulus has no root")
    return FieldCtx(sub.p, d, plain.modulus, base=(sub, gen))


# --------------------------------------------------------------------------
# Galois-theoretic maps

def frobenius(a: FieldElem, q: int) -> FieldElem:
    """a -> a^q; requires F_q to be a subfield of a's field."""
    a.ctx.subfield_degree(q)
    return a ** q


def _conjugates(a, q):
    m = a.ctx.subfield_degree(q)
    out = [a]
    for _ in range(m - 1):
        out.append(out[-1] ** q)
    return out


def norm(a: FieldElem, q: int) -> FieldElem:
    """Product of the F_q-conjugates of ``a``."""
    out = a.ctx.one
    for c in _conjugates(a, q):
        out = out * c
    assert out ** q == out
    return out


def trace(a: FieldElem, q: int) -> FieldElem:
    """Sum of the F_q-conjugates of ``a``."""
    out = a.ctx.zero
    for c in _conjugates(a, q):
        out = out + c
    assert out ** q == out
    return out


def embed(a: FieldElem, sup: FieldCtx) -> FieldElem:
    """Image of ``a`` under the tower embedding into ``sup``."""
    src = a.ctx
    if src is sup or src == sup:
        return FieldElem(sup, a.n)
    if src.p != sup.p:
        raise ValueError(f"no embedding {src} -> {sup}")
    if src.d == 1:
        return FieldElem(sup, a.n)
    if sup.base is None:
        raise ValueError(f"no embedding path {src} -> {sup}")
    sub, gen = sup.base
    x = a if (sub is src or sub == src) else embed(a, sub)
    acc = 0
    for c in reversed(x.coeffs):
        acc = sup._add(sup._mul(acc, gen), c)
    return FieldElem(sup, acc)


def primitive_element(ctx: FieldCtx) -> FieldElem:
    return ctx.primitive_element()


# --------------------------------------------------------------------------
# text encoding

def format_element(a: FieldElem) -> str:
    """"[c0,c1,...]" or a bare integer for prime fields."""
    if a.ctx.d == 1:
        return str(a.n)
    return "[" + ",".join(str(c) for c in a.coeffs) + "]"


_TERM = re.compile(r"^(?:(\d+)\*?)?([a-zA-Zω])(?:\^(\d+))?$")


def parse_element(text: str, ctx: FieldCtx) -> FieldElem:
    """Parse "[c0,c1,..]", an integer, or a small expression in the generator.

    Generator names accepted: ``t``, ``w``, ``ω``, e.g. ``"ω"``, ``"ω+1"``,
    ``"2*t^2+1"``.
    """
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty element")
    if s.startswith("["):
        if not s.endswith("]"):
            raise ValueError(f"malformed element {text!r}")
        body = s[1:-1]
        coeffs = [int(c) for c in body.split(",")] if body else []
        return ctx(coeffs)
    s = s.replace("-", "+-")
    acc = ctx.zero
    for term in s.split("+"):
        if not term:
            continue
        sign = 1
        if term.startswith("-"):
            sign, term = -1, term[1:]
        if term.isdigit():
            acc = acc + ctx(sign * int(term))
            continue
        m = _TERM.match(term)
        if m is None or (ctx.d == 1):
            raise ValueError(f"malformed element {text!r}")
        coef = int(m.group(1)) if m.group(1) else 1
        k = int(m.group(3)) if m.group(3) else 1
        acc = acc + ctx.gen ** k * (sign * coef)
    return acc
