"""Univariate polynomials over a FieldCtx as lists of FieldElem, low degree first."""

from __future__ import annotations

import itertools

from .ffield import FieldCtx, FieldElem, embed


def trim(f: list) -> list:
    f = list(f)
    while f and not f[-1]:
        f.pop()
    return f


def padd(f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        if i < len(f) and i < len(g):
            out.append(f[i] + g[i])
        else:
            out.append(f[i] if i < len(f) else g[i])
    return trim(out)


def psub(f, g):
    return padd(f, [-c for c in g])


def pmul(f, g):
    if not f or not g:
        return []
    ctx = f[0].ctx
    out = [ctx.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = out[i + j] + a * b
    return trim(out)


def pscale(f, c):
    return trim([a * c for a in f])


def pdivmod(f, g):
    f = trim(f)
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    ctx = g[0].ctx
    inv = g[-1].inv()
    q = [ctx.zero] * max(len(f) - len(g) + 1, 0)
    while len(f) >= len(g) and f:
        c = f[-1] * inv
        shift = len(f) - len(g)
        q[shift] = c
        for i, gi in enumerate(g):
            f[shift + i] = f[shift + i] - c * gi
        f = trim(f)
    return trim(q), f


def peval(f, x: FieldElem) -> FieldElem:
    """Horner evaluation; coefficients are embedded into x's field."""
    acc = x.ctx.zero
    for c in reversed(f):
        acc = acc * x + embed(c, x.ctx)
    return acc


def roots(f, ctx: FieldCtx) -> list[FieldElem]:
    """Roots of f in ``ctx`` (an extension of f's field), in enumeration order."""
    lifted = [embed(c, ctx) for c in f]
    out = []
    for x in ctx.enumerate():
        acc = ctx.zero
        for c in reversed(lifted):
            acc = acc * x + c
        if not acc:
            out.append(x)
    return out


def monic_polys(ctx: FieldCtx, deg: int):
    """All monic polynomials of degree ``deg`` in lexicographic order."""
    elems = ctx.enumerate()
    for low in itertools.product(elems, repeat=deg):
        yield list(low) + [ctx.one]


def is_irreducible(f, ctx: FieldCtx) -> bool:
    """Irreducibility over ``ctx``: root scan for degree <= 3, trial division above."""
    f = trim(f)
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    if d <= 3:
        return not roots(f, ctx)
    for k in range(1, d // 2 + 1):
        for g in monic_polys(ctx, k):
            if not pdivmod(f, g)[1]:
                return False
    return True
