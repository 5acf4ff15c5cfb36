"""Numba-jitted implementations of the hot kernels.

Signatures and results match `_kernels_numpy` exactly; the numpy module is the
behavioral oracle.  Importing this module requires numba.
"""

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def _shifted_axpy_impl(out, a, limit, offsets, coeffs, p):
    maxoff = 0
    for i in range(offsets.shape[0]):
        off = offsets[i]
        c = coeffs[i]
        if off > maxoff:
            maxoff = off
        for j in range(limit):
            out[off + j] += c * a[j]
    if offsets.shape[0]:
        for j in range(maxoff + limit):
            out[j] %= p


def shifted_axpy(out, a, limit, offsets, coeffs, p):
    _shifted_axpy_impl(out, a, limit, offsets, coeffs, p)


@njit(cache=True)
def _pow_modp(base, exp, p):
    result = 1
    b = base % p
    e = exp
    while e > 0:
        if e & 1:
            result = (result * b) % p
        b = (b * b) % p
        e >>= 1
    return result


@njit(cache=True)
def _rref_modp_impl(mat, p):
    rows, cols = mat.shape
    pivots = np.full(cols, -1, dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if mat[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = mat[r, j]
                mat[r, j] = mat[piv, j]
                mat[piv, j] = tmp
        inv = _pow_modp(mat[r, c], p - 2, p)
        for j in range(cols):
            mat[r, j] = (mat[r, j] * inv) % p
        for i in range(rows):
            if i == r or mat[i, c] == 0:
                continue
            f = mat[i, c]
            for j in range(cols):
                mat[i, j] = (mat[i, j] - f * mat[r, j]) % p
        pivots[c] = r
        r += 1
    return r, pivots


def rref_modp(mat, p):
    return _rref_modp_impl(mat, p)


@njit(cache=True)
def _count_common_zeros_impl(exps, coeffs, starts, p, k):
    npolys = starts.shape[0] - 1
    if k == 0:
        for j in range(npolys):
            s = 0
            for t in range(starts[j], starts[j + 1]):
                s += coeffs[t]
            if s % p != 0:
                return 0
        return 1
    total = 1
    for _ in range(k):
        total *= p
    point = np.zeros(k, dtype=np.int64)
    count = 0
    for idx in range(total):
        v = idx
        for d in range(k - 1, -1, -1):
            point[d] = v % p
            v //= p
        ok = True
        for j in range(npolys):
            acc = 0
            for t in range(starts[j], starts[j + 1]):
                term = coeffs[t]
                for d in range(k):
                    e = exps[t, d]
                    if e:
                        term = (term * _pow_modp(point[d], e, p)) % p
                acc = (acc + term) % p
            if acc % p != 0:
                ok = False
                break
        if ok:
            count += 1
    return count


def count_common_zeros(exps, coeffs, starts, p):
    k = exps.shape[1] if exps.ndim == 2 else 0
    if exps.ndim != 2:
        exps = exps.reshape(0, 1)
    return int(_count_common_zeros_impl(exps, coeffs, starts, p, k))
