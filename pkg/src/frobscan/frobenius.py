"""Bracket powers and Frobenius roots of homogeneous ideals over F_p.

The q-th Frobenius root of a polynomial f is the smallest ideal J with
f in J^[q]; it is generated by the base-q digit components of f: writing each
exponent vector as q*quotient + residue, the terms sharing a residue class
assemble into one generator (over F_p, q-th roots of coefficients are the
identity).  Roots of ideals are unions of roots of generators.
"""

from dataclasses import dataclass

import numpy as np

from .errors import MixedDomainError, ValidationError
from .ideals import HomogeneousIdeal, trim_generators
from .polynomial import Polynomial, poly_power


@dataclass(frozen=True)
class FrobeniusLevel:
    """A prime power q = p^e."""

    p: int
    e: int

    def __post_init__(self):
        if self.p < 2:
            raise ValidationError("p must be prime >= 2")
        if self.e < 1:
            raise ValidationError("e must be positive")

    @property
    def q(self):
        return self.p ** self.e


def _check_level(obj, level):
    if obj.p != level.p:
        raise MixedDomainError(
            f"characteristic mismatch: polynomial over F_{obj.p}, level p={level.p}")


def bracket_power(J, level):
    """J^[q]: the ideal generated by q-th powers of the generators of J."""
    _check_level(J, level)
    q = level.q
    return HomogeneousIdeal(J.nvars, J.p, [poly_power(g, q) for g in J.generators])


def frobenius_root(f, level, trim=True):
    """The smallest ideal J with f in J^[q], by base-q digit decomposition."""
    if f.p is None:
        raise MixedDomainError("Frobenius roots need a prime-field polynomial")
    _check_level(f, level)
    if f.is_zero:
        raise ValidationError("the zero polynomial has no Frobenius root")
    q = level.q
    exps, coeffs = f.terms_arrays()
    residues = exps % q
    quotients = exps // q
    _, inverse = np.unique(residues, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    order = np.argsort(inverse, kind="stable")
    sorted_inv = inverse[order]
    cuts = np.flatnonzero(np.diff(sorted_inv)) + 1
    starts = np.concatenate([[0], cuts, [len(sorted_inv)]])
    gens = []
    for lo, hi in zip(starts, starts[1:]):
        idx = order[lo:hi]
        gens.append(Polynomial._from_canonical(
            f.nvars, f.p, quotients[idx], coeffs[idx]))
    I = HomogeneousIdeal(f.nvars, f.p, gens)
    return trim_generators(I) if trim else I


def frobenius_root_ideal(b, level, trim=True):
    """Frobenius root of an ideal: union of the roots of its generators."""
    if b.is_zero:
        raise ValidationError("the zero ideal has no Frobenius root")
    _check_level(b, level)
    gens = []
    for g in b.generators:
        gens.extend(frobenius_root(g, level, trim=False).generators)
    I = HomogeneousIdeal(b.nvars, b.p, gens)
    return trim_generators(I) if trim else I
