"""Pure-numpy implementations of the hot kernels.

Reference backend: always available, exact, and the behavioral oracle for the
numba twin in `_kernels_numba`.  All arrays are int64; every function reduces
its output mod p before returning.
"""

import numpy as np

NAME = "numpy"


def shifted_axpy(out, a, limit, offsets, coeffs, p):
    """Accumulate ``c * a[:limit]`` into ``out[off:off+limit]`` per term.

    Core of dense homogeneous polynomial multiplication: `a` and `out` are
    flattened exponent cubes with identical strides, each sparse term of the
    multiplier contributes one shifted add.  `out` is reduced mod p over the
    touched prefix.
    """
    n = offsets.shape[0]
    for i in range(n):
        off = int(offsets[i])
        out[off:off + limit] += int(coeffs[i]) * a[:limit]
    if n:
        hi = int(offsets.max()) + limit
        out[:hi] %= p


def rref_modp(mat, p):
    """Reduce `mat` to row-reduced echelon form mod p, in place.

    Returns ``(rank, pivots)`` where ``pivots[c]`` is the pivot row of column
    c, or -1 for free columns.
    """
    rows, cols = mat.shape
    pivots = np.full(cols, -1, dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(mat[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            mat[[r, i]] = mat[[i, r]]
        inv = pow(int(mat[r, c]), p - 2, p)
        mat[r] = (mat[r] * inv) % p
        col = mat[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            mat[hit] = (mat[hit] - np.outer(col[hit], mat[r])) % p
        pivots[c] = r
        r += 1
    return r, pivots


def _pow_table(p, emax):
    # pow_table[e, x] = x**e mod p
    tab = np.ones((emax + 1, p), dtype=np.int64)
    base = np.arange(p, dtype=np.int64)
    for e in range(1, emax + 1):
        tab[e] = (tab[e - 1] * base) % p

    return tab


def count_common_zeros(exps, coeffs, starts, p):
    """Count points of F_p^k on which every listed polynomial vanishes.

    `exps` is (terms, k); `starts` delimits the term ranges of the individual
    polynomials.  k = 0 means all polynomials are constants.
    """
    k = exps.shape[1] if exps.ndim == 2 else 0
    npolys = len(starts) - 1
    if k == 0:
        for j in range(npolys):
            if int(coeffs[starts[j]:starts[j + 1]].sum()) % p != 0:
                return 0
        return 1

    emax = int(exps.max()) if exps.size else 0
    tab = _pow_table(p, emax)
    # Chunk the first axis so the grid never exceeds ~2**22 entries.
    tail = p ** (k - 1)
    chunk = max(1, (1 << 22) // max(tail, 1))
    shapes = [(1,) * d + (p,) + (1,) * (k - 1 - d) for d in range(k)]
    axes = [np.arange(p, dtype=np.int64).reshape(shapes[d]) for d in range(k)]
    count = 0
    for lo in range(0, p, chunk):
        hi = min(p, lo + chunk)
        x0 = np.arange(lo, hi, dtype=np.int64).reshape((hi - lo,) + (1,) * (k - 1))
        mask = None
        for j in range(npolys):
            acc = np.zeros((hi - lo,) + (p,) * (k - 1), dtype=np.int64)
            for t in range(int(starts[j]), int(starts[j + 1])):
                term = int(coeffs[t]) * tab[int(exps[t, 0])][x0]
                for d in range(1, k):
                    term = term * tab[int(exps[t, d])][axes[d]]
                acc = (acc + term) % p
            zero = acc == 0
            mask = zero if mask is None else (mask & zero)
        count += int(mask.sum())
    return count
