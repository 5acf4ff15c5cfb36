"""Graded pieces, containment, Hilbert functions, dimension estimates."""

import random
from math import comb

import pytest

from frobscan.errors import (
    InconclusiveWindowError,
    MixedDomainError,
    ResourceLimitError,
    ValidationError,
)
from frobscan.ideals import (
    HomogeneousIdeal,
    contains,
    dimension_estimate,
    equals,
    graded_piece,
    graded_rank,
    hilbert_function,
    ideal,
    ideal_power,
    m_power,
    maximal_ideal,
    trim_generators,
    unit_ideal,
)
from frobscan.polynomial import parse_polynomial


def P(text, nvars=3, p=None):
    return parse_polynomial(text, nvars=nvars, p=p)


class TestConstruction:
    def test_zero_generators_dropped(self):
        I = HomogeneousIdeal(3, 5, [P("x0", p=5), P("x0 - x0", p=5)])
        assert len(I.generators) == 1

    def test_duplicates_dropped_and_sorted(self):
        I = ideal([P("x1", p=5), P("x0", p=5), P("x0", p=5)])
        assert [str(g) for g in I.generators] == ["x0", "x1"]

    def test_inhomogeneous_rejected(self):
        with pytest.raises(ValidationError):
            ideal([P("x0^2 + x1", p=5)])

    def test_mixed_domain_rejected(self):
        with pytest.raises(MixedDomainError):
            HomogeneousIdeal(3, 5, [P("x0", p=7)])

    def test_unit_detection(self):
        assert unit_ideal(3, 5).is_unit
        assert not maximal_ideal(3, 5).is_unit
        assert m_power(3, 0, 5).is_unit


class TestGradedPieces:
    def test_maximal_ideal_full_rank(self):
        m = maximal_ideal(3, 5)
        for d in range(1, 5):
            assert graded_rank(m, d) == comb(d + 2, 2)

    def test_principal_ideal_rank(self):
        # (f) in degree d has rank = number of monomials of degree d - deg f
        I = ideal([P("x0^2 - x1*x2", p=7)])
        for d in range(2, 6):
            assert graded_rank(I, d) == comb(d - 2 + 2, 2)

    def test_rank_agrees_over_z_and_fp(self):
        gens_z = [P("x0*x1 - x2^2"), P("x0^2 - x1*x2")]
        gens_5 = [P("x0*x1 - x2^2", p=5), P("x0^2 - x1*x2", p=5)]
        for d in range(2, 7):
            assert graded_rank(ideal(gens_z), d) == graded_rank(ideal(gens_5), d)

    def test_piece_cap(self):
        with pytest.raises(ResourceLimitError):
            graded_piece(maximal_ideal(3, 5), 4, max_piece=3)


class TestContainment:
    def test_trivial_cases(self):
        m = maximal_ideal(3, 5)
        assert contains(unit_ideal(3, 5), m)
        assert contains(m, HomogeneousIdeal(3, 5, []))
        assert not contains(HomogeneousIdeal(3, 5, []), m)
        assert not contains(m, unit_ideal(3, 5))

    def test_m_power_chain(self):
        for k in range(1, 4):
            assert contains(m_power(3, k, 5), m_power(3, k + 1, 5))
            assert not contains(m_power(3, k + 1, 5), m_power(3, k, 5))

    def test_membership_needs_elimination(self):
        # x2^3 = x2*(x0*x1) - combination of the two generators
        I = ideal([P("x0*x1 - x2^2", p=7), P("x0*x1", p=7)])
        assert contains(I, ideal([P("x2^3", p=7)]))

    def test_equals_is_generator_independent(self):
        a = ideal([P("x0", p=5), P("x1", p=5)])
        b = ideal([P("x0 + x1", p=5), P("x0 - x1", p=5)])
        assert equals(a, b)
        assert a == b

    def test_randomized_product_containment(self):
        rng = random.Random(3)
        for _ in range(20):
            p = rng.choice([2, 3, 5, 7])
            f = P(rng.choice(["x0^2 + x1*x2", "x0*x1 + x2^2", "x1^2 - x0*x2"]), p=p)
            g = P(rng.choice(["x0", "x1 + x2", "x2"]), p=p)
            assert contains(ideal([f]), ideal([f * g]))
            assert contains(ideal([f, g]), ideal([f * g]))


class TestHilbert:
    def test_polynomial_ring(self):
        hf = hilbert_function(HomogeneousIdeal(3, 5, []), 4)
        assert hf == [comb(d + 2, 2) for d in range(5)]

    def test_complete_intersection_conic(self):
        # a smooth conic in P^2 has Hilbert polynomial 2d + 1
        I = ideal([P("x0*x2 - x1^2", p=7)])
        assert hilbert_function(I, 5)[2:] == [5, 7, 9, 11]

    def test_twisted_quartic_fixture(self):
        gens = [P("x1^2 - x0*x2", nvars=4), P("x3^2 - x1*x2 + x0*x1", nvars=4)]
        hf = hilbert_function(ideal(gens), 6)
        # degree-4 elliptic curve in P^3: HF(d) = 4d for d >= 1
        assert hf == [1, 4, 8, 12, 16, 20, 24]


class TestDimension:
    @pytest.mark.parametrize("gens,nvars,dim", [
        (["x0*x2 - x1^2"], 3, 1),                     # conic: a curve in P^2
        (["x0", "x1"], 3, 0),                          # a point
        (["x0"], 3, 1),                                # a line
        ([], 3, 2),                                    # all of P^2
        (["x0", "x1", "x2"], 3, -1),                   # empty
    ])
    def test_known_dimensions(self, gens, nvars, dim):
        I = HomogeneousIdeal(nvars, 7, [P(g, nvars=nvars, p=7) for g in gens])
        assert dimension_estimate(I) == dim

    def test_elliptic_quartic_is_a_curve(self):
        gens = [P("x1^2 - x0*x2", nvars=4), P("x3^2 - x1*x2 + x0*x1", nvars=4)]
        assert dimension_estimate(ideal(gens)) == 1

    def test_short_window_rejected(self):
        with pytest.raises(InconclusiveWindowError):
            dimension_estimate(ideal([P("x0", p=5)]), window=(1, 2))


class TestIdealPower:
    def test_principal(self):
        f = P("x0^2 - x1*x2", p=5)
        assert equals(ideal_power(ideal([f]), 3), ideal([f * f * f]))

    def test_zeroth_power_is_unit(self):
        assert ideal_power(maximal_ideal(3, 5), 0).is_unit

    def test_m_squared(self):
        assert equals(ideal_power(maximal_ideal(3, 5), 2), m_power(3, 2, 5))

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            ideal_power(maximal_ideal(3, 5), 10, max_gens=5)


class TestTrim:
    def test_redundant_generator_dropped(self):
        f = P("x0", p=5)
        I = HomogeneousIdeal(3, 5, [f, f * P("x1", p=5)])
        trimmed = trim_generators(I)
        assert len(trimmed.generators) == 1
        assert equals(trimmed, I)

    def test_unit_collapses(self):
        I = HomogeneousIdeal(3, 5, [P("2", p=5), P("x0", p=5)])
        assert trim_generators(I).generators == unit_ideal(3, 5).generators

    def test_preserves_ideal_randomized(self):
        rng = random.Random(9)
        pool = ["x0^2", "x0*x1", "x1^2 - x0*x2", "x2^2", "x0^3 + x1^3",
                "x0*x1*x2", "x2^3 - x0^2*x1"]
        for _ in range(15):
            p = rng.choice([2, 3, 5, 7])
            gens = [P(t, p=p) for t in rng.sample(pool, rng.randint(2, 5))]
            I = ideal(gens)
            assert equals(trim_generators(I), I)
