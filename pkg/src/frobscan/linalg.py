"""Exact linear algebra over F_p and over the integers.

Mod-p elimination runs on the selected kernel backend.  Integer ranks use
fraction-free Bareiss elimination on Python ints for small matrices, and for
large ones fall back to ranks modulo two fixed large word-size primes (the
maximum of the two is reported; both are lower bounds on the rational rank
and agree with it away from a measure-zero set of unlucky minors).
"""

from fractions import Fraction

import numpy as np

from ._backend import get_kernels

# Largest matrices handed to pure-Python Bareiss before switching to the
# modular path; past this, intermediate minors get too large to be practical.
BAREISS_CELL_LIMIT = 10_000

_BIG_PRIMES = (2_147_483_647, 2_147_483_629)

# Below this cell count the modular rank is confirmed with a second prime;
# above it a single prime is used (an unlucky drop only lowers the rank,
# which downstream surfaces as a retried draw or a conservatively rejected
# prime, never as a silently accepted answer).
_SECOND_PRIME_CELL_LIMIT = 2_000_000


def rref_modp(mat, p):
    """Row-reduce a copy of `mat` mod p; returns (rref, rank, pivot columns)."""
    m = np.array(mat, dtype=np.int64) % p
    if m.ndim != 2:
        m = m.reshape(1, -1)
    rank, pivots = get_kernels().rref_modp(m, p)
    pivot_cols = [c for c in range(m.shape[1]) if pivots[c] >= 0]
    return m[:rank], rank, pivot_cols


def rank_modp(mat, p):
    m = np.array(mat, dtype=np.int64) % p
    if m.size == 0:
        return 0
    rank, _ = get_kernels().rref_modp(m, p)
    return rank


def reduce_vector(rref, pivot_cols, vec, p):
    """Residual of `vec` modulo the row space of an rref matrix."""
    v = np.array(vec, dtype=np.int64) % p
    for row, c in enumerate(pivot_cols):
        coef = int(v[c])
        if coef:
            v = (v - coef * rref[row]) % p
    return v


def in_row_space(rref, pivot_cols, vec, p):
    return not reduce_vector(rref, pivot_cols, vec, p).any()


def nullspace_modp(mat, p):
    """Basis of the right nullspace mod p, as rows (deterministic order)."""
    m = np.array(mat, dtype=np.int64) % p
    if m.ndim != 2 or m.shape[0] == 0:
        ncols = m.shape[1] if m.ndim == 2 else m.shape[0]
        return np.eye(ncols, dtype=np.int64)
    rref, rank, pivot_cols = rref_modp(m, p)
    ncols = m.shape[1]
    free = [c for c in range(ncols) if c not in set(pivot_cols)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for row, pc in enumerate(pivot_cols):
            basis[i, pc] = (-int(rref[row, fc])) % p
    return basis


def det_modp(mat, p):
    """Determinant of a square matrix over F_p by Gaussian elimination."""
    m = np.array(mat, dtype=np.int64) % p
    n = m.shape[0]
    if n == 0:
        return 1
    det = 1
    for c in range(n):
        piv = -1
        for r in range(c, n):
            if m[r, c]:
                piv = r
                break
        if piv < 0:
            return 0
        if piv != c:
            m[[c, piv]] = m[[piv, c]]
            det = (-det) % p
        det = (det * int(m[c, c])) % p
        inv = pow(int(m[c, c]), p - 2, p)
        m[c] = (m[c] * inv) % p
        for r in range(c + 1, n):
            if m[r, c]:
                m[r] = (m[r] - int(m[r, c]) * m[c]) % p
    return det % p


def bareiss_rank(rows):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [[int(x) for x in row] for row in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            if not any(m[i][c:]):
                continue
            for j in range(c + 1, ncols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
    return r


def rank_int(rows):
    """Rank over Q of an integer matrix; Bareiss when small, modular otherwise."""
    if isinstance(rows, np.ndarray):
        rows = rows.tolist()
    if not rows or not rows[0]:
        return 0
    cells = len(rows) * len(rows[0])
    if cells <= BAREISS_CELL_LIMIT:
        return bareiss_rank(rows)
    arr = np.array(rows, dtype=np.int64)
    primes = _BIG_PRIMES if cells <= _SECOND_PRIME_CELL_LIMIT else _BIG_PRIMES[:1]
    return max(rank_modp(arr % q, q) for q in primes)


def echelon_fraction(rows):
    """Reduced echelon form over Q; returns (rows as Fraction lists, pivot cols)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m or not m[0]:
        return [], []
    nrows, ncols = len(m), len(m[0])
    pivot_cols = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivot_cols.append(c)
        r += 1
    return m[:r], pivot_cols


def reduce_vector_fraction(ech, pivot_cols, vec):
    v = [Fraction(x) for x in vec]
    for row, c in enumerate(pivot_cols):
        if v[c]:
            f = v[c]
            v = [a - f * b for a, b in zip(v, ech[row])]
    return v
