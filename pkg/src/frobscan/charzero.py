"""Characteristic-zero side: closed-form multiplier ideals for quadric-cut
smooth subvarieties, general products of quadrics, and the predictions the
mod-p scan tests against.

For the cone over a smooth X cut out by quadrics in P^N with codim r, the
multiplier ideal at exponent lambda < r is the unit ideal for
lambda < (N+1)/2 and m^(floor(2*lambda) - N) above; all jumps happen at
half-integers.  The products h = g_1 ... g_r use seeded pseudorandom integer
combinations with a verified codimension check, so every run is reproducible
from (seed, bound).
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .errors import GenericityError, ValidationError
from .ideals import HomogeneousIdeal, dimension_estimate
from .polynomial import Polynomial


def multiplier_ideal_at(N, r, lam):
    """Exponent k with J = m^k (k = 0 meaning the unit ideal), for lambda < r."""
    lam = Fraction(lam)
    if lam < 0 or lam >= r:
        raise ValidationError(f"exponent {lam} outside [0, r={r})")
    if lam < Fraction(N + 1, 2):
        return 0
    return floor(2 * lam) - N


def jumping_exponents(N, r):
    """Half-integers in [(N+1)/2, r) where the multiplier ideal shrinks."""
    out = []
    k = N + 1
    while Fraction(k, 2) < r:
        out.append(Fraction(k, 2))
        k += 1
    return out


@dataclass(frozen=True)
class MultiplierProfile:
    """Piecewise-constant multiplier-ideal exponents over [0, r)."""

    N: int
    r: int
    segments: tuple    # ((lo, hi, exponent), ...) half-open rational intervals

    def table(self):
        lines = ["interval            ideal"]
        for lo, hi, k in self.segments:
            ideal = "R" if k == 0 else f"m^{k}"
            lines.append(f"[{lo}, {hi})".ljust(20) + ideal)
        return "\n".join(lines)


def multiplier_profile(N, r):
    jumps = jumping_exponents(N, r)
    cuts = [Fraction(0)] + jumps + [Fraction(r)]
    segments = tuple((lo, hi, multiplier_ideal_at(N, r, lo))
                     for lo, hi in zip(cuts, cuts[1:]))
    return MultiplierProfile(N, r, segments)


def predicted_test_ideal(N, r, mu):
    """Conjectured m-power exponent of tau(h^mu) for h a product of r general
    quadric combinations; mu < 1 corresponds to lambda = r*mu < r."""
    mu = Fraction(mu)
    if mu < 0 or mu >= 1:
        raise ValidationError(f"h-exponent {mu} outside [0, 1)")
    return multiplier_ideal_at(N, r, r * mu)


@dataclass(frozen=True)
class GeneralCombinationConfig:
    """Seeded draw of general integer combinations."""

    seed: int = 0
    coefficient_bound: int = 5
    max_retries: int = 8

    def __post_init__(self):
        if self.coefficient_bound < 1:
            raise ValidationError("coefficient bound must be >= 1")


def general_product(fs, r, cfg=GeneralCombinationConfig()):
    """r general integer combinations g_i of the quadrics fs, and h = prod g_i.

    Coefficients are drawn from a deterministic stream in [-B, B] minus 0;
    the draw is accepted once V(g_1..g_r) has projective dimension N - r
    (checked by Hilbert-function growth over Q), retrying up to max_retries.
    """
    if not fs:
        raise ValidationError("need at least one quadric generator")
    nvars = fs[0].nvars
    N = nvars - 1
    for f in fs:
        if f.p is not None:
            raise ValidationError("general_product works over Z")
        if f.homogeneous_degree != 2:
            raise ValidationError(f"generator {f} is not a quadric")
    if not 1 <= r:
        raise ValidationError("r must be positive")
    if 2 * r < N + 1:
        import warnings
        warnings.warn(f"deg h = {2 * r} < N+1 = {N + 1}; downstream hypersurface "
                      "checks need deg >= N+1", stacklevel=2)
    rng = random.Random(cfg.seed)
    B = cfg.coefficient_bound
    nonzero = [c for c in range(-B, B + 1) if c]
    for _ in range(cfg.max_retries):
        gs = []
        for _ in range(r):
            g = Polynomial.zero(nvars)
            for f in fs:
                g = g + f.scale(rng.choice(nonzero))
            gs.append(g)
        if any(g.is_zero for g in gs):
            continue
        dim = dimension_estimate(HomogeneousIdeal(nvars, None, gs))
        if dim == N - r:
            h = gs[0]
            for g in gs[1:]:
                h = h * g
            return gs, h
    raise GenericityError(
        f"no pure-codimension-{r} draw after {cfg.max_retries} tries "
        f"(seed={cfg.seed}, bound={B})")
