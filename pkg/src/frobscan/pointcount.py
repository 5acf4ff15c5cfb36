"""Exhaustive projective point counts over small prime fields.

Independent ordinarity oracle for genus-one fixtures: a_p = p + 1 - #points,
and the reduction is ordinary iff a_p is nonzero mod p.  Counting walks the
standard affine charts (x_i = 1, higher coordinates 0, lower ones free), so
each projective point is seen exactly once; the per-chart grid enumeration is
a backend kernel.
"""

import numpy as np

from ._backend import get_kernels
from .errors import ResourceLimitError, ValidationError

ENUMERATION_CAP = 10_000


def count_projective_points(polys, p, cap=ENUMERATION_CAP):
    """Number of F_p-points of V(polys) in P^{nvars-1} (exhaustive)."""
    if not polys:
        raise ValidationError("need at least one polynomial")
    if p > cap:
        raise ResourceLimitError(f"enumeration rejected for p={p} > {cap}")
    nvars = polys[0].nvars
    for f in polys:
        if f.p != p:
            raise ValidationError("polynomials must be reduced mod p first")
        if f.nvars != nvars:
            raise ValidationError("ambient rings differ")
    kern = get_kernels()
    total = 0
    for i in range(nvars):
        # Chart: x_i = 1, x_j = 0 for j > i, x_0..x_{i-1} free.
        exps_list, coeffs_list, starts = [], [], [0]
        nterms = 0
        for f in polys:
            rows = []
            cs = []
            for e, c in sorted(f.terms.items(), reverse=True):
                if any(e[j] for j in range(i + 1, nvars)):
                    continue
                rows.append(e[:i])
                cs.append(c)
            if not rows:
                # Poly vanishes identically on this chart: no constraint.
                continue
            exps_list.extend(rows)
            coeffs_list.extend(cs)
            nterms += len(rows)
            starts.append(nterms)
        if len(starts) == 1:
            # Every polynomial vanishes identically: the whole chart counts.
            total += p ** i
            continue
        exps = np.array(exps_list, dtype=np.int64).reshape(nterms, i)
        coeffs = np.array(coeffs_list, dtype=np.int64)
        starts_arr = np.array(starts, dtype=np.int64)
        total += kern.count_common_zeros(exps, coeffs, starts_arr, p)
    return total


def point_count(polys, p, cap=ENUMERATION_CAP):
    """(count, a_p) for a genus-one fixture: plane cubic or quadric pair.

    Requires p >= 5 (smaller primes are never good for the shipped fixtures).
    """
    if p < 5:
        raise ValidationError("point counting oracle needs p >= 5")
    count = count_projective_points(polys, p, cap)
    return count, p + 1 - count
