"""Vectorized field arithmetic on numpy arrays of packed element codes.

Used by the exhaustive scans (points of P^2 over F_{q^m}, all matrices
of GL(n, q)).  Codes are the same packed integers as FieldElem.n.
"""

from __future__ import annotations

import functools

import numpy as np

from .ffield import FieldCtx

_ADD_TABLE_MAX = 4096


class VecField:
    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx
        self.q = ctx.order
        self.q1 = ctx.order - 1
        self.exp = np.array(ctx._exp, dtype=np.int64)
        self.log = np.array(ctx._log, dtype=np.int64)
        self.neg_table = np.array(ctx._neg, dtype=np.int64)
        p, d = ctx.p, ctx.d
        self._digits = None
        self._table = None
        if p != 2 and d > 1:
            codes = np.arange(self.q, dtype=np.int64)
            self._digits = [(codes // p ** i) % p for i in range(d)]
            if self.q <= _ADD_TABLE_MAX:
                a = codes[:, None]
                b = codes[None, :]
                self._table = self._add_digits(a, b).astype(np.int32)

    def _add_digits(self, a, b):
        p = self.ctx.p
        out = 0
        for i in range(self.ctx.d):
            w = p ** i
            out = out + ((a // w % p + b // w % p) % p) * w
        return out

    def add(self, a, b):
        if self.ctx.p == 2:
            return np.bitwise_xor(a, b)
        if self.ctx.d == 1:
            return (a + b) % self.ctx.p
        if self._table is not None:
            return self._table[a, b]
        return self._add_digits(np.asarray(a), np.asarray(b))

    def neg(self, a):
        return self.neg_table[a]

    def sub(self, a, b):
        return self.add(a, self.neg_table[b])

    def mul(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        r = self.exp[(self.log[a] + self.log[b]) % self.q1]
        return np.where((a == 0) | (b == 0), 0, r)

    def pow(self, a, k: int):
        a = np.asarray(a)
        if k == 0:
            return np.ones_like(a)
        r = self.exp[(self.log[a] * k) % self.q1]
        return np.where(a == 0, 0, r)

    def elements(self):
        return np.arange(self.q, dtype=np.int64)


@functools.lru_cache(maxsize=None)
def vecfield(ctx: FieldCtx) -> VecField:
    return VecField(ctx)


# --------------------------------------------------------------------------
# polynomial evaluation

def eval_terms(vf: VecField, terms, x, y, z):
    """Evaluate sum c*x^i*y^j*z^k pointwise; terms are (i, j, k, code)."""
    shape = np.broadcast(np.asarray(x), np.asarray(y), np.asarray(z)).shape
    acc = np.zeros(shape, dtype=np.int64)
    cache = {}

    def pw(arr, name, k):
        key = (name, k)
        if key not in cache:
            cache[key] = vf.pow(arr, k)
        return cache[key]

    for i, j, k, c in terms:
        t = np.full(shape, c, dtype=np.int64)
        if i:
            t = vf.mul(t, pw(x, "x", i))
        if j:
            t = vf.mul(t, pw(y, "y", j))
        if k:
            t = vf.mul(t, pw(z, "z", k))
        acc = vf.add(acc, t)
    return acc


def eval_grid(vf: VecField, terms, xval: int, ys, zs):
    """Evaluate on the grid {(xval, y, z) : y in ys, z in zs}; shape (len(ys), len(zs)).

    ``xval`` is 0 or 1 (the affine charts of P^2).  Terms are grouped by
    the z-exponent, so the 2-D work is one multiply and one add per
    distinct power of z.
    """
    if xval not in (0, 1):
        raise ValueError("xval must be 0 or 1")
    ys = np.asarray(ys)
    zs = np.asarray(zs)
    by_k = {}
    for i, j, k, c in terms:
        if xval == 0 and i > 0:
            continue
        t = np.full(ys.shape, c, dtype=np.int64)
        if j:
            t = vf.mul(t, vf.pow(ys, j))
        by_k[k] = vf.add(by_k[k], t) if k in by_k else t
    acc = np.zeros((len(ys), len(zs)), dtype=np.int64)
    for k, pk in by_k.items():
        zk = vf.pow(zs, k) if k else np.ones_like(zs)
        acc = vf.add(acc, vf.mul(pk[:, None], zk[None, :]))
    return acc


# --------------------------------------------------------------------------
# matrices

def all_matrices(vf: VecField, n: int):
    """Every n x n matrix over the field, shape (q^(n*n), n, n), lexicographic codes."""
    elems = vf.elements()
    grids = np.meshgrid(*([elems] * (n * n)), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1).reshape(-1, n, n)


def matmul(vf: VecField, X, Y):
    """Batched product; X and Y are (..., n, n) arrays (broadcasting)."""
    X = np.asarray(X)
    Y = np.asarray(Y)
    n = X.shape[-1]
    shape = np.broadcast_shapes(X.shape, Y.shape)
    out = np.zeros(shape, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            acc = vf.mul(X[..., i, 0], Y[..., 0, j])
            for l in range(1, n):
                acc = vf.add(acc, vf.mul(X[..., i, l], Y[..., l, j]))
            out[..., i, j] = acc
    return out


def det(vf: VecField, X):
    """Batched determinant; closed form for n <= 3, first-row expansion above."""
    X = np.asarray(X)
    n = X.shape[-1]
    m = vf.mul
    if n == 1:
        return X[..., 0, 0]
    if n == 2:
        return vf.sub(m(X[..., 0, 0], X[..., 1, 1]), m(X[..., 0, 1], X[..., 1, 0]))
    if n == 3:
        a = lambda i, j: X[..., i, j]  # noqa: E731
        t1 = m(a(0, 0), vf.sub(m(a(1, 1), a(2, 2)), m(a(1, 2), a(2, 1))))
        t2 = m(a(0, 1), vf.sub(m(a(1, 0), a(2, 2)), m(a(1, 2), a(2, 0))))
        t3 = m(a(0, 2), vf.sub(m(a(1, 0), a(2, 1)), m(a(1, 1), a(2, 0))))
        return vf.add(vf.sub(t1, t2), t3)
    acc = np.zeros(X.shape[:-2], dtype=np.int64)
    for j in range(n):
        minor = np.delete(X[..., 1:, :], j, axis=-1)
        term = m(X[..., 0, j], det(vf, minor))
        acc = vf.sub(acc, term) if j % 2 else vf.add(acc, term)
    return acc


def invertible_matrices(vf: VecField, n: int):
    X = all_matrices(vf, n)
    return X[det(vf, X) != 0]
