"""Test-ideal chains, the Fedder root, and the nu invariant."""

import random
from fractions import Fraction

import pytest

from frobscan.errors import BadPrimeError, ValidationError
from frobscan.frobenius import FrobeniusLevel, frobenius_root_ideal
from frobscan.ideals import HomogeneousIdeal, contains, equals, ideal, m_power
from frobscan.polynomial import Polynomial, parse_polynomial, poly_power
from frobscan.testideal import (
    chain_member,
    containment_power_check,
    fedder_root,
    nu_invariant,
    parse_exponent,
    remark_containment_check,
    tau_equals_fedder_check,
)
from frobscan.testideal import test_ideal as compute_test_ideal


def P(text, nvars=None, p=None):
    return parse_polynomial(text, nvars=nvars, p=p)


class TestParseExponent:
    def test_fraction_and_integer(self):
        assert parse_exponent("2/3") == Fraction(2, 3)
        assert parse_exponent("4") == Fraction(4)

    def test_negative_rejected(self):
        with pytest.raises(ValidationError):
            parse_exponent("-1/2")


class TestChainMember:
    def test_matches_direct_power_root(self):
        # digit peeling must agree with literally powering then taking the root
        rng = random.Random(6)
        pool = ["x0*x1", "x0^2 + x0*x1 + x1^2", "x0^3 + x1^3",
                "x0^2*x1 + x1^3"]
        for _ in range(15):
            p = rng.choice([2, 3, 5])
            lam = Fraction(rng.randint(1, 5), rng.randint(2, 6))
            f = P(rng.choice(pool), nvars=2, p=p)
            e = rng.choice([1, 2])
            n = -((-lam.numerator * p ** e) // lam.denominator)
            direct = frobenius_root_ideal(ideal([poly_power(f, n)]),
                                          FrobeniusLevel(p, e))
            assert equals(chain_member(f, lam, e), direct)

    def test_zero_exponent_gives_unit(self):
        assert chain_member(P("x0", p=5), Fraction(0), 2).is_unit

    def test_monomial_floor_formula(self):
        # tau((x^a y^b)^lam) = (x^floor(lam*a) y^floor(lam*b)) at lam = n/p^k
        for p, a, b, lam in [(2, 3, 1, Fraction(1, 2)), (3, 2, 2, Fraction(2, 3)),
                             (5, 4, 1, Fraction(3, 5)), (2, 2, 3, Fraction(3, 4))]:
            f = Polynomial(2, p, {(a, b): 1})
            res = compute_test_ideal(f, lam)
            expect = Polynomial(2, p, {(int(lam * a), int(lam * b)): 1})
            assert res.status == "stabilized"
            assert equals(res.ideal, ideal([expect]))

    def test_member_monotone_in_lambda(self):
        rng = random.Random(17)
        pool = ["x0^2 + x0*x1 + x1^2", "x0^3 + x0*x1^2", "x0*x1"]
        for _ in range(15):
            p = rng.choice([2, 3, 5])
            f = P(rng.choice(pool), nvars=2, p=p)
            lam1 = Fraction(rng.randint(1, 3), rng.randint(3, 6))
            lam2 = lam1 + Fraction(rng.randint(1, 3), 4)
            e = rng.choice([1, 2])
            assert contains(chain_member(f, lam1, e), chain_member(f, lam2, e))


class TestTestIdeal:
    def test_smooth_point_small_exponent_is_unit(self):
        # tau(x^(1/2)) = R: the divisor is smooth, exponent < 1
        res = compute_test_ideal(P("x0", nvars=2, p=2), Fraction(1, 2))
        assert res.ideal.is_unit and res.status == "stabilized"

    def test_ordinary_double_point(self):
        # tau((x^2+y^2)^(1/2)) over F_7 is the unit ideal (lct = 1 > 1/2)
        res = compute_test_ideal(P("x0^2 + x1^2", p=7), Fraction(1, 2))
        assert res.ideal.is_unit

    def test_chain_trace_shape(self):
        res = compute_test_ideal(P("x0^2 + x1^3", p=2), Fraction(1, 2), e_max=3)
        assert [e for e, _ in res.chain_trace] == [1, 2, 3][:len(res.chain_trace)]
        assert res.stabilized_at <= 3

    def test_zero_input_rejected(self):
        with pytest.raises(ValidationError):
            compute_test_ideal(Polynomial.zero(2, 5), Fraction(1, 2))

    def test_char_zero_rejected(self):
        with pytest.raises(ValidationError):
            compute_test_ideal(P("x0", nvars=2), Fraction(1, 2))

    def test_non_principal_ideal_input(self):
        m = HomogeneousIdeal(2, 3, [P("x0", nvars=2, p=3), P("x1", nvars=2, p=3)])
        # in 2 variables tau(m^lam) = m^(floor(lam) - 1), so lam = 5/2 gives m
        res = compute_test_ideal(m, Fraction(5, 2))
        assert res.status == "stabilized"
        assert equals(res.ideal, m)


class TestFedderRoot:
    def test_cusp_char_two(self):
        root = fedder_root(P("x0^2 + x1^3", p=2))
        assert equals(root, ideal([P("x0", nvars=2, p=2), P("x1", nvars=2, p=2)]))

    def test_fermat_cubic_ordinary_prime(self):
        # p = 7 = 1 mod 3: the cone over the Fermat cubic is F-pure
        root = fedder_root(P("x0^3 + x1^3 + x2^3", p=7))
        assert root.is_unit

    def test_fermat_cubic_supersingular_prime(self):
        # p = 2 = 2 mod 3: not F-pure, the root is the maximal ideal
        root = fedder_root(P("x0^3 + x1^3 + x2^3", p=2))
        assert equals(root, m_power(3, 1, 2))

    def test_shared_power_argument(self):
        h = P("x0^2 + x1*x2", p=5)
        hp = poly_power(h, 4)
        assert equals(fedder_root(h), fedder_root(h, power=hp))

    def test_tau_equals_fedder_randomized(self):
        rng = random.Random(33)
        pool = ["x0^2 + x1^3", "x0^3 + x1^3 + x2^3", "x0*x1 + x2^2",
                "x0^4 + x1^4 + x2^4", "x0^2*x1 + x1^2*x2 + x2^2*x0"]
        for _ in range(20):
            p = rng.choice([2, 3, 5, 7])
            h = P(rng.choice(pool), p=p)
            assert tau_equals_fedder_check(h)


class TestNuInvariant:
    @pytest.mark.parametrize("text,p,e,expected", [
        ("x0", 5, 1, 4),
        ("x0", 3, 2, 8),
        ("x0*x1*x2", 5, 1, 4),
        ("x0^2 + x1^3", 2, 1, 0),
        ("x0^3 + x1^3 + x2^3", 7, 1, 6),
        ("x0^3 + x1^3 + x2^3", 2, 1, 0),
    ])
    def test_known_values(self, text, p, e, expected):
        assert nu_invariant(P(text, p=p), e) == expected

    def test_fedder_unit_iff_nu_maximal(self):
        # F-purity: (h^(p-1))^[1/p] = R exactly when h^(p-1) misses m^[p]
        rng = random.Random(41)
        pool = ["x0^2 + x1^3", "x0^3 + x1^3 + x2^3", "x0*x1", "x0^2 + x1^2"]
        for _ in range(15):
            p = rng.choice([2, 3, 5, 7])
            h = P(rng.choice(pool), p=p)
            assert fedder_root(h).is_unit == (nu_invariant(h, 1) >= p - 1)

    def test_unit_input_rejected(self):
        with pytest.raises(ValidationError):
            nu_invariant(P("1 + x0", nvars=1, p=2), 1)


class TestContainmentPower:
    def test_zero_power_means_unit(self):
        assert containment_power_check(0, ideal([P("1", nvars=3, p=5)]))
        assert not containment_power_check(0, ideal([P("x0", nvars=3, p=5)]))

    def test_maximal_ideal(self):
        m = m_power(3, 1, 5)
        assert containment_power_check(1, m)
        assert containment_power_check(2, m)

    def test_negative_rejected(self):
        with pytest.raises(ValidationError):
            containment_power_check(-1, m_power(3, 1, 5))


class TestRemarkContainment:
    def test_good_prime(self):
        b = HomogeneousIdeal(3, None, [P("x0", nvars=3)])
        f = P("x0^3 + x1^3 + x2^3", nvars=3)
        assert remark_containment_check(b, f, 7)

    def test_degenerating_prime(self):
        f = P("2*x0^2 + 2*x1^2", nvars=2)
        b = HomogeneousIdeal(2, None, [P("x0", nvars=2)])
        with pytest.raises(BadPrimeError):
            remark_containment_check(b, f, 2)
