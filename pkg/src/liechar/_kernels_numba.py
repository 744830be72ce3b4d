"""Numba njit implementations of the batch kernels.

Same contracts and outputs as _kernels_numpy; selected by LIECHAR_NUMBA.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def matmul_many_one(mats, b, add_t, mul_t):
    m, n, _ = mats.shape
    out = np.zeros((m, n, n), dtype=np.int16)
    for x in range(m):
        for i in range(n):
            for j in range(n):
                acc = mul_t[mats[x, i, 0], b[0, j]]
                for l in range(1, n):
                    acc = add_t[acc, mul_t[mats[x, i, l], b[l, j]]]
                out[x, i, j] = acc
    return out


@njit(cache=True)
def matmul_one_many(a, mats, add_t, mul_t):
    m, n, _ = mats.shape
    out = np.zeros((m, n, n), dtype=np.int16)
    for x in range(m):
        for i in range(n):
            for j in range(n):
                acc = mul_t[a[i, 0], mats[x, 0, j]]
                for l in range(1, n):
                    acc = add_t[acc, mul_t[a[i, l], mats[x, l, j]]]
                out[x, i, j] = acc
    return out


@njit(cache=True)
def matmul_pairs(A, B, add_t, mul_t):
    m, n, _ = A.shape
    out = np.zeros((m, n, n), dtype=np.int16)
    for x in range(m):
        for i in range(n):
            for j in range(n):
                acc = mul_t[A[x, i, 0], B[x, 0, j]]
                for l in range(1, n):
                    acc = add_t[acc, mul_t[A[x, i, l], B[x, l, j]]]
                out[x, i, j] = acc
    return out


@njit(cache=True)
def pack_codes(mats, q):
    m, n, _ = mats.shape
    out = np.zeros(m, dtype=np.int64)
    for x in range(m):
        acc = np.int64(0)
        for i in range(n):
            for j in range(n):
                acc = acc * q + mats[x, i, j]
        out[x] = acc
    return out


@njit(cache=True)
def _bisect(sorted_codes, c):
    lo = 0
    hi = len(sorted_codes)
    while lo < hi:
        mid = (lo + hi) >> 1
        if sorted_codes[mid] < c:
            lo = mid + 1
        else:
            hi = mid
    return lo


@njit(cache=True)
def lookup_codes(codes, sorted_codes, sort_perm):
    m = len(codes)
    out = np.empty(m, dtype=np.int64)
    n = len(sorted_codes)
    for x in range(m):
        pos = _bisect(sorted_codes, codes[x])
        if pos < n and sorted_codes[pos] == codes[x]:
            out[x] = sort_perm[pos]
        else:
            out[x] = -1
    return out


@njit(cache=True)
def inverse_many(mats, add_t, mul_t, neg_t, inv_t):
    m, n, _ = mats.shape
    out = np.zeros((m, n, n), dtype=np.int16)
    if n == 1:
        for x in range(m):
            out[x, 0, 0] = inv_t[mats[x, 0, 0]]
        return out
    if n == 2:
        for x in range(m):
            a = mats[x, 0, 0]
            b = mats[x, 0, 1]
            c = mats[x, 1, 0]
            d = mats[x, 1, 1]
            det = add_t[mul_t[a, d], neg_t[mul_t[b, c]]]
            di = inv_t[det]
            out[x, 0, 0] = mul_t[d, di]
            out[x, 0, 1] = mul_t[neg_t[b], di]
            out[x, 1, 0] = mul_t[neg_t[c], di]
            out[x, 1, 1] = mul_t[a, di]
        return out
    # n == 3 adjugate
    for x in range(m):
        cof = np.zeros((3, 3), dtype=np.int16)
        for i in range(3):
            r0 = 0 if i != 0 else 1
            r1 = 2 if i != 2 else 1
            for j in range(3):
                c0 = 0 if j != 0 else 1
                c1 = 2 if j != 2 else 1
                d2 = add_t[
                    mul_t[mats[x, r0, c0], mats[x, r1, c1]],
                    neg_t[mul_t[mats[x, r0, c1], mats[x, r1, c0]]],
                ]
                if (i + j) % 2 == 1:
                    d2 = neg_t[d2]
                cof[i, j] = d2
        det = mul_t[mats[x, 0, 0], cof[0, 0]]
        det = add_t[det, mul_t[mats[x, 0, 1], cof[0, 1]]]
        det = add_t[det, mul_t[mats[x, 0, 2], cof[0, 2]]]
        di = inv_t[det]
        for i in range(3):
            for j in range(3):
                out[x, i, j] = mul_t[cof[j, i], di]
    return out


@njit(cache=True)
def frobenius_many(mats, frob_t):
    m, n, _ = mats.shape
    out = np.empty_like(mats)
    for x in range(m):
        for i in range(n):
            for j in range(n):
                out[x, i, j] = frob_t[mats[x, i, j]]
    return out


@njit(cache=True)
def right_mul_index(mats, b, add_t, mul_t, q, sorted_codes, sort_perm):
    m, n, _ = mats.shape
    out = np.empty(m, dtype=np.int64)
    nn = len(sorted_codes)
    for x in range(m):
        acc = np.int64(0)
        for i in range(n):
            for j in range(n):
                v = mul_t[mats[x, i, 0], b[0, j]]
                for l in range(1, n):
                    v = add_t[v, mul_t[mats[x, i, l], b[l, j]]]
                acc = acc * q + v
        pos = _bisect(sorted_codes, acc)
        if pos < nn and sorted_codes[pos] == acc:
            out[x] = sort_perm[pos]
        else:
            out[x] = -1
    return out


@njit(cache=True)
def conj_index(mats, a, a_inv, add_t, mul_t, q, sorted_codes, sort_perm):
    m, n, _ = mats.shape
    out = np.empty(m, dtype=np.int64)
    nn = len(sorted_codes)
    tmp = np.zeros((n, n), dtype=np.int16)
    for x in range(m):
        for i in range(n):
            for j in range(n):
                v = mul_t[a[i, 0], mats[x, 0, j]]
                for l in range(1, n):
                    v = add_t[v, mul_t[a[i, l], mats[x, l, j]]]
                tmp[i, j] = v
        acc = np.int64(0)
        for i in range(n):
            for j in range(n):
                v = mul_t[tmp[i, 0], a_inv[0, j]]
                for l in range(1, n):
                    v = add_t[v, mul_t[tmp[i, l], a_inv[l, j]]]
                acc = acc * q + v
        pos = _bisect(sorted_codes, acc)
        if pos < nn and sorted_codes[pos] == acc:
            out[x] = sort_perm[pos]
        else:
            out[x] = -1
    return out
