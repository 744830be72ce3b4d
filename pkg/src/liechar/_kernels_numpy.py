"""Pure-numpy implementations of the batch kernels.

Matrices are (m, n, n) int16 arrays of field-element encodings; add_t and
mul_t are the dense q x q tables of the coefficient field.  Every function
here has an @njit twin in _kernels_numba with identical output.
"""

from __future__ import annotations

import numpy as np


def matmul_many_one(mats, b, add_t, mul_t):
    """x @ b for every x in mats."""
    n = mats.shape[1]
    out = None
    for l in range(n):
        term = mul_t[mats[:, :, l][:, :, None], b[l, :][None, None, :]]
        out = term if out is None else add_t[out, term]
    return out


def matmul_one_many(a, mats, add_t, mul_t):
    """a @ x for every x in mats."""
    n = mats.shape[1]
    out = None
    for l in range(n):
        term = mul_t[a[:, l][None, :, None], mats[:, l, :][:, None, :]]
        out = term if out is None else add_t[out, term]
    return out


def matmul_pairs(A, B, add_t, mul_t):
    """A[i] @ B[i] elementwise over the batch."""
    n = A.shape[1]
    out = None
    for l in range(n):
        term = mul_t[A[:, :, l][:, :, None], B[:, l, :][:, None, :]]
        out = term if out is None else add_t[out, term]
    return out


def pack_codes(mats, q):
    """Row-major base-q integer encoding of each matrix."""
    m = mats.shape[0]
    flat = mats.reshape(m, -1).astype(np.int64)
    w = q ** np.arange(flat.shape[1] - 1, -1, -1, dtype=np.int64)
    return flat @ w


def lookup_codes(codes, sorted_codes, sort_perm):
    """Element indices of the given codes; -1 where missing."""
    pos = np.searchsorted(sorted_codes, codes)
    pos_c = np.minimum(pos, len(sorted_codes) - 1)
    ok = sorted_codes[pos_c] == codes
    out = np.where(ok, sort_perm[pos_c], -1)
    return out.astype(np.int64)


def _det2(w, x, y, z, add_t, mul_t, neg_t):
    return add_t[mul_t[w, z], neg_t[mul_t[x, y]]]


def inverse_many(mats, add_t, mul_t, neg_t, inv_t):
    """Batch inverse by adjugate; n <= 3 only."""
    m, n, _ = mats.shape
    out = np.zeros_like(mats)
    if n == 1:
        out[:, 0, 0] = inv_t[mats[:, 0, 0]]
        return out
    if n == 2:
        a, b = mats[:, 0, 0], mats[:, 0, 1]
        c, d = mats[:, 1, 0], mats[:, 1, 1]
        det = _det2(a, b, c, d, add_t, mul_t, neg_t)
        di = inv_t[det]
        out[:, 0, 0] = mul_t[d, di]
        out[:, 0, 1] = mul_t[neg_t[b], di]
        out[:, 1, 0] = mul_t[neg_t[c], di]
        out[:, 1, 1] = mul_t[a, di]
        return out
    if n == 3:
        a = [[mats[:, i, j] for j in range(3)] for i in range(3)]
        cof = [[None] * 3 for _ in range(3)]
        sgn = [[1, -1, 1], [-1, 1, -1], [1, -1, 1]]
        for i in range(3):
            r = [k for k in range(3) if k != i]
            for j in range(3):
                c = [k for k in range(3) if k != j]
                d2 = _det2(
                    a[r[0]][c[0]], a[r[0]][c[1]], a[r[1]][c[0]], a[r[1]][c[1]],
                    add_t, mul_t, neg_t,
                )
                cof[i][j] = d2 if sgn[i][j] == 1 else neg_t[d2]
        det = None
        for j in range(3):
            t = mul_t[a[0][j], cof[0][j]]
            det = t if det is None else add_t[det, t]
        di = inv_t[det]
        for i in range(3):
            for j in range(3):
                out[:, i, j] = mul_t[cof[j][i], di]
        return out
    raise NotImplementedError("batch inverse only for n <= 3")


def frobenius_many(mats, frob_t):
    return frob_t[mats]


def right_mul_index(mats, b, add_t, mul_t, q, sorted_codes, sort_perm):
    """Index of x @ b for every x; -1 where the product is not stored."""
    prods = matmul_many_one(mats, b, add_t, mul_t)
    return lookup_codes(pack_codes(prods, q), sorted_codes, sort_perm)


def conj_index(mats, a, a_inv, add_t, mul_t, q, sorted_codes, sort_perm):
    """Index of a @ x @ a_inv for every x; -1 where not stored."""
    t = matmul_one_many(a, mats, add_t, mul_t)
    t = matmul_many_one(t, a_inv, add_t, mul_t)
    return lookup_codes(pack_codes(t, q), sorted_codes, sort_perm)
