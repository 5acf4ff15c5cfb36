"""Top local cohomology of the polynomial ring and the twisted Frobenius.

E = H^{N+1}_m(R) is realized on classes x^{-a} with every a_i >= 1; the
degree -j piece has the compositions of j into N+1 positive parts as a basis
(dimension C(j-1, N)).  Multiplication by a monomial x^b sends x^{-a} to
x^{-(a-b)} when every entry of a-b stays >= 1 and to 0 otherwise; Frobenius
sends x^{-a} to x^{-pa}.  The Frobenius action on H^N_m(R/(h)) is the twist
h^{p-1} F_E restricted to the h-annihilator, and its matrix in the monomial
basis has the classical Hasse-Witt entries: coefficient of x^{pa-b} in
h^{p-1}.
"""

from dataclasses import dataclass
from math import comb

import numpy as np

from . import linalg
from .errors import (
    MixedDomainError,
    ResourceLimitError,
    StabilityViolationError,
    ValidationError,
)
from .polynomial import monomials_of_degree, poly_power
from .testideal import containment_power_check, fedder_root

DEFAULT_MAX_PIECE_DIM = 50_000


@dataclass(frozen=True)
class EGradedPiece:
    """Basis of the degree -j piece of E, ordered lexicographically."""

    N: int
    j: int
    basis: tuple

    @property
    def dim(self):
        return len(self.basis)

    def index(self, a):
        return self.basis.index(a)


def e_piece(N, j, max_dim=DEFAULT_MAX_PIECE_DIM):
    """All compositions of j into N+1 positive parts (empty for j <= N)."""
    if j <= N:
        return EGradedPiece(N, j, ())
    if comb(j - 1, N) > max_dim:
        raise ResourceLimitError(f"E piece dimension C({j - 1},{N}) exceeds cap")
    basis = tuple(tuple(x + 1 for x in m) for m in monomials_of_degree(N + 1, j - N - 1))
    return EGradedPiece(N, j, basis)


def e_multiply(g, vec, piece):
    """Multiply a class in E_{-j} (coefficients `vec`) by homogeneous g.

    Returns (new_vec, target_piece); a target degree >= 0 simply yields the
    zero piece.
    """
    mat, dst = e_mult_matrix(g, piece)
    v = np.asarray(vec, dtype=np.int64) % g.p
    return (mat @ v) % g.p, dst


def e_mult_matrix(g, piece):
    """Matrix of multiplication by g: E_{-j} -> E_{-j+deg g}, plus target piece."""
    if g.homogeneous_degree is None:
        raise ValidationError("multiplier must be homogeneous and nonzero")
    d = g.homogeneous_degree
    dst = e_piece(piece.N, piece.j - d)
    mat = np.zeros((dst.dim, piece.dim), dtype=np.int64)
    if dst.dim == 0 or piece.dim == 0:
        return mat, dst
    index = {a: i for i, a in enumerate(dst.basis)}
    for col, a in enumerate(piece.basis):
        for exps, c in g.terms.items():
            target = tuple(x - b for x, b in zip(a, exps))
            if all(t >= 1 for t in target):
                mat[index[target], col] = (mat[index[target], col] + c) % g.p
    return mat, dst


def annihilator_subspace(gs, max_dim=DEFAULT_MAX_PIECE_DIM):
    """Basis of {u in E_{-sum d_i} : g_i u = 0 for all i}.

    Returns (piece, rows) with the basis vectors as rows over F_p.
    """
    if not gs:
        raise ValidationError("need at least one polynomial")
    p = gs[0].p
    N = gs[0].nvars - 1
    for g in gs:
        if g.p != p:
            raise MixedDomainError("mixed characteristics")
        if g.nvars != N + 1:
            raise ValidationError("ambient rings differ")
        if g.homogeneous_degree is None:
            raise ValidationError("generators must be homogeneous and nonzero")
    total = sum(g.homogeneous_degree for g in gs)
    piece = e_piece(N, total, max_dim)
    if piece.dim == 0:
        return piece, np.zeros((0, 0), dtype=np.int64)
    blocks = []
    for g in gs:
        mat, _ = e_mult_matrix(g, piece)
        if mat.shape[0]:
            blocks.append(mat)
    if not blocks:
        return piece, np.eye(piece.dim, dtype=np.int64)
    stacked = np.concatenate(blocks, axis=0)
    return piece, linalg.nullspace_modp(stacked, p)


@dataclass
class FrobeniusMatrix:
    """Twisted Frobenius on the annihilator subspace of an E graded piece."""

    p: int
    piece: EGradedPiece
    subspace_basis: object     # rows over F_p inside the piece
    matrix: object             # square, size = subspace dimension
    determinant: int
    bijective: bool


def frobenius_action_on_piece(h_power, piece, p):
    """Matrix of u -> h^{p-1} F_E(u) on the full piece E_{-d}, d = deg h.

    Entry (b, a) is the coefficient of x^{pa-b} in h^{p-1}; this is the
    Hasse-Witt recipe.
    """
    dim = piece.dim
    mat = np.zeros((dim, dim), dtype=np.int64)
    for col, a in enumerate(piece.basis):
        pa = tuple(p * x for x in a)
        for row, b in enumerate(piece.basis):
            exps = tuple(x - y for x, y in zip(pa, b))
            if all(e >= 0 for e in exps):
                mat[row, col] = h_power.coefficient_of(exps)
    return mat % p


def frobenius_matrix(gs, power=None, max_dim=DEFAULT_MAX_PIECE_DIM):
    """Twisted Frobenius (prod g_i)^(p-1) F_E on the annihilator subspace.

    For a single hypersurface h this is the Frobenius action on
    H^{N-1}(D, O_D); for r > 1 complete intersections the same twist is used
    and the subspace stability is verified at runtime (a violation signals an
    invalid generalization, not bad input).
    """
    piece, sub = annihilator_subspace(gs, max_dim)
    p = gs[0].p
    if sub.shape[0] == 0:
        raise ValidationError("annihilator subspace is zero; no Frobenius action")
    h = gs[0]
    for g in gs[1:]:
        h = h * g
    hp = power if power is not None else poly_power(h, p - 1)
    full = frobenius_action_on_piece(hp, piece, p)
    images = (full @ sub.T) % p                      # dim x k
    k = sub.shape[0]
    aug = np.concatenate([sub.T % p, images], axis=1)
    rref, rank, pivots = linalg.rref_modp(aug, p)
    if any(c >= k for c in pivots):
        raise StabilityViolationError(
            "twisted Frobenius image left the annihilator subspace")
    # sub has full row rank k, so the first k columns are exactly the pivots
    # and rows 0..k-1 of the rref carry the coordinates of each image.
    matrix = rref[:k, k:] % p
    det = linalg.det_modp(matrix, p)
    return FrobeniusMatrix(p, piece, sub, matrix, det, det != 0)


def is_frobenius_bijective(fm):
    """Injective iff bijective for an endomorphism of a finite F_p-space."""
    return fm.determinant != 0


@dataclass
class PropositionCheck:
    """One executable instance of the containment => bijectivity statement."""

    hypothesis: bool
    conclusion: bool

    @property
    def consistent(self):
        return (not self.hypothesis) or self.conclusion


def check_key_proposition(h, max_dim=DEFAULT_MAX_PIECE_DIM):
    """Hypothesis: m^(d-N-1) inside (h^(p-1))^[1/p]; conclusion: Frobenius
    bijective on H^{N-1}(D, O_D).  `consistent` must hold for every input."""
    N = h.nvars - 1
    d = h.homogeneous_degree
    if d is None:
        raise ValidationError("h must be homogeneous and nonzero")
    if N < 2 or d < N + 1:
        raise ValidationError("need N >= 2 and deg h >= N+1")
    hp = poly_power(h, h.p - 1)
    hypothesis = containment_power_check(d - N - 1, fedder_root(h, power=hp))
    conclusion = is_frobenius_bijective(frobenius_matrix([h], power=hp, max_dim=max_dim))
    return PropositionCheck(hypothesis, conclusion)
