"""Homogeneous ideals and Groebner-free graded linear algebra.

Fixed-degree membership in a homogeneous ideal is a linear condition: the
degree-d piece of I = (g_1..g_k) is spanned by {m * g_i : deg m = d - deg g_i}.
Containment, equality, Hilbert functions and dimension estimates all reduce to
ranks and row-space membership of those graded pieces, so everything stays
exact with no Buchberger engine.
"""

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb

import numpy as np

from . import linalg
from .errors import (
    DimensionMismatchError,
    InconclusiveWindowError,
    MixedDomainError,
    ResourceLimitError,
    ValidationError,
)
from .polynomial import Polynomial, monomial_index, monomials_of_degree

DEFAULT_MAX_PIECE = 200_000


def _gen_sort_key(g):
    # degree first, then descending-lex on the ordered term list (negating
    # exponents turns the usual descending monomial order into an ascending
    # python sort), so x0 sorts before x1 and so on
    return (g.homogeneous_degree,
            tuple((tuple(-x for x in e), c)
                  for e, c in sorted(g.terms.items(), reverse=True)))


class HomogeneousIdeal:
    """Finitely generated homogeneous ideal in a fixed ambient ring."""

    __slots__ = ("nvars", "p", "generators")

    def __init__(self, nvars, p, generators):
        gens = []
        for g in generators:
            if g.is_zero:
                continue
            if g.nvars != nvars:
                raise DimensionMismatchError("generator in wrong ambient ring")
            if g.p != p:
                raise MixedDomainError("generator over wrong coefficient domain")
            if g.homogeneous_degree is None:
                raise ValidationError(f"generator {g} is not homogeneous")
            gens.append(g)
        gens = sorted(set(gens), key=_gen_sort_key)
        self.nvars = nvars
        self.p = p
        self.generators = tuple(gens)

    @classmethod
    def from_generators(cls, gens, nvars=None, p=None):
        if not gens and nvars is None:
            raise ValidationError("cannot infer the ambient ring of an empty ideal")
        if nvars is None:
            nvars = gens[0].nvars
        if p is None and gens:
            p = gens[0].p
        return cls(nvars, p, gens)

    @property
    def is_zero(self):
        return not self.generators

    @property
    def is_unit(self):
        # A homogeneous ideal contains 1 iff some generator has degree 0.
        return any(g.homogeneous_degree == 0 for g in self.generators)

    def max_degree(self):
        return max((g.homogeneous_degree for g in self.generators), default=0)

    def __eq__(self, other):
        if not isinstance(other, HomogeneousIdeal):
            return NotImplemented
        return equals(self, other)

    def __hash__(self):
        return hash((self.nvars, self.p, self.generators))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "0"
        return f"Ideal({gens})"


def ideal(gens, nvars=None, p=None):
    return HomogeneousIdeal.from_generators(list(gens), nvars, p)


def unit_ideal(nvars, p=None):
    return HomogeneousIdeal(nvars, p, [Polynomial.one(nvars, p)])


def maximal_ideal(nvars, p=None):
    return HomogeneousIdeal(
        nvars, p, [Polynomial.variable(nvars, i, p) for i in range(nvars)])


def m_power(nvars, k, p=None):
    """The k-th power of the irrelevant maximal ideal; k = 0 is the unit ideal."""
    if k < 0:
        raise ValidationError("power must be nonnegative")
    if k == 0:
        return unit_ideal(nvars, p)
    return HomogeneousIdeal(
        nvars, p, [Polynomial.monomial(m, 1, p) for m in monomials_of_degree(nvars, k)])


@dataclass
class GradedPieceBasis:
    """Row-echelon basis of the degree-d piece of a homogeneous ideal."""

    degree: int
    monomials: tuple
    p: object
    rank: int
    rows: object = field(repr=False, default=None)        # rref over F_p
    pivot_cols: list = field(repr=False, default=None)
    frac_rows: list = field(repr=False, default=None)     # echelon over Q
    frac_pivots: list = field(repr=False, default=None)


def _piece_rows(I, d, max_piece):
    nvars = I.nvars
    monos = monomials_of_degree(nvars, d)
    idx = monomial_index(nvars, d)
    ncols = len(monos)
    if ncols > max_piece:
        raise ResourceLimitError(
            f"degree-{d} piece has {ncols} monomials (cap {max_piece})")
    rows = []
    for g in I.generators:
        dg = g.homogeneous_degree
        if dg > d:
            continue
        items = list(g.terms.items())
        for m in monomials_of_degree(nvars, d - dg):
            row = [0] * ncols
            for e, c in items:
                row[idx[tuple(a + b for a, b in zip(e, m))]] = c
            rows.append(row)
    return monos, rows


def graded_piece(I, d, max_piece=DEFAULT_MAX_PIECE):
    """Echelon basis of the degree-d component of I (exact, deterministic)."""
    if d < 0:
        raise ValidationError("degree must be nonnegative")
    monos, rows = _piece_rows(I, d, max_piece)
    if I.p is not None:
        if rows:
            rref, rank, pivots = linalg.rref_modp(np.array(rows, dtype=np.int64), I.p)
        else:
            rref, rank, pivots = np.zeros((0, len(monos)), dtype=np.int64), 0, []
        return GradedPieceBasis(d, monos, I.p, rank, rows=rref, pivot_cols=pivots)
    ech, pivots = linalg.echelon_fraction(rows)
    return GradedPieceBasis(d, monos, None, len(pivots),
                            frac_rows=ech, frac_pivots=pivots)


def graded_rank(I, d, max_piece=DEFAULT_MAX_PIECE):
    """Rank of the degree-d piece; over Z uses the hybrid exact-rank path."""
    if I.p is not None:
        return graded_piece(I, d, max_piece).rank
    _, rows = _piece_rows(I, d, max_piece)
    return linalg.rank_int(rows)


def _poly_vector(g, piece):
    idx = monomial_index(g.nvars, piece.degree)
    vec = [0] * len(piece.monomials)
    for e, c in g.terms.items():
        vec[idx[e]] = c
    return vec


def piece_contains(piece, g):
    """Membership of a homogeneous polynomial in a graded piece's row space."""
    if g.homogeneous_degree != piece.degree:
        return False
    vec = _poly_vector(g, piece)
    if piece.p is not None:
        return linalg.in_row_space(piece.rows, piece.pivot_cols,
                                   np.array(vec, dtype=np.int64), piece.p)
    res = linalg.reduce_vector_fraction(piece.frac_rows, piece.frac_pivots, vec)
    return not any(res)


def contains(I, J, max_piece=DEFAULT_MAX_PIECE):
    """True iff J is contained in I (both homogeneous, same ambient ring)."""
    if I.nvars != J.nvars:
        raise DimensionMismatchError("ideals in different ambient rings")
    if I.p != J.p:
        raise MixedDomainError("ideals over different coefficient domains")
    if J.is_zero:
        return True
    if I.is_unit:
        return True
    if I.is_zero:
        return False
    by_degree = {}
    for g in J.generators:
        by_degree.setdefault(g.homogeneous_degree, []).append(g)
    for d, gens in sorted(by_degree.items()):
        piece = graded_piece(I, d, max_piece)
        for g in gens:
            if not piece_contains(piece, g):
                return False
    return True


def equals(I, J, max_piece=DEFAULT_MAX_PIECE):
    return contains(I, J, max_piece) and contains(J, I, max_piece)


def hilbert_function(I, d_max, max_piece=DEFAULT_MAX_PIECE):
    """dim (R/I)_d for d = 0..d_max."""
    if d_max < 0:
        raise ValidationError("d_max must be nonnegative")
    N = I.nvars - 1
    return [comb(d + N, N) - graded_rank(I, d, max_piece) for d in range(d_max + 1)]


def dimension_estimate(I, window=None, max_piece=DEFAULT_MAX_PIECE):
    """Projective dimension of V(I), from Hilbert-function growth.

    `window` is a (start, stop) inclusive degree range; it must contain at
    least N+2 degrees past the generator degrees.  Successive finite
    differences of the Hilbert function are taken until a constant row
    appears; the number of difference steps gives the polynomial growth
    order, hence the dimension (-1 for empty).  Flagged as an estimate:
    lower-dimensional components are invisible to the leading term.
    """
    N = I.nvars - 1
    if window is None:
        start = I.max_degree() + 1
        window = (start, start + N + 1)
    lo, hi = window
    if hi - lo + 1 < N + 2:
        raise InconclusiveWindowError(
            f"window of {hi - lo + 1} degrees is too short (need {N + 2})")
    hf = hilbert_function(I, hi, max_piece)[lo:]
    row = hf
    level = 0
    while row:
        if all(x == row[0] for x in row):
            if row[0] != 0:
                return level
            return level - 1
        row = [b - a for a, b in zip(row, row[1:])]
        level += 1
    raise InconclusiveWindowError("differences did not stabilize over the window")


def ideal_power(I, n, max_gens=5000):
    """The ideal I^n, generated by all n-fold products of generators.

    Generator counts explode for multi-generator ideals; a hard cap guards
    the combination count.  I^0 is the unit ideal.
    """
    if n < 0:
        raise ValidationError("power must be nonnegative")
    if n == 0:
        return unit_ideal(I.nvars, I.p)
    if I.is_zero:
        return I
    k = len(I.generators)
    count = comb(k + n - 1, n)
    if count > max_gens:
        raise ResourceLimitError(
            f"I^{n} needs {count} generator products (cap {max_gens})")
    gens = []
    for combo in combinations_with_replacement(I.generators, n):
        g = combo[0]
        for h in combo[1:]:
            g = g * h
        gens.append(g)
    return HomogeneousIdeal(I.nvars, I.p, gens)


def trim_generators(I, max_piece=DEFAULT_MAX_PIECE):
    """Drop generators contained in the ideal of the others (F_p only).

    Optional optimization; never affects correctness of downstream answers.
    """
    if I.p is None or len(I.generators) <= 1:
        return I
    if I.is_unit:
        return unit_ideal(I.nvars, I.p)
    kept = []
    by_degree = {}
    for g in I.generators:
        by_degree.setdefault(g.homogeneous_degree, []).append(g)
    for d in sorted(by_degree):
        idx = monomial_index(I.nvars, d)
        ncols = len(idx)
        if kept:
            piece = graded_piece(HomogeneousIdeal(I.nvars, I.p, kept), d, max_piece)
            rows = piece.rows.tolist()
        else:
            rows = []
        for g in by_degree[d]:
            vec = np.zeros(ncols, dtype=np.int64)
            for e, c in g.terms.items():
                vec[idx[e]] = c
            if rows:
                rref, _, pivots = linalg.rref_modp(np.array(rows, dtype=np.int64), I.p)
                if linalg.in_row_space(rref, pivots, vec, I.p):
                    continue
            kept.append(g)
            rows.append(vec.tolist())
    return HomogeneousIdeal(I.nvars, I.p, kept)
