"""Polynomial arithmetic, parsing, and the power kernels."""

import random

import numpy as np
import pytest

from frobscan.errors import (
    DimensionMismatchError,
    MixedDomainError,
    ParseError,
    ResourceLimitError,
    ValidationError,
)
from frobscan.polynomial import (
    Polynomial,
    monomial_index,
    monomials_of_degree,
    parse_polynomial,
    poly_power,
    reduce_mod_p,
)


def random_poly(rng, nvars, maxdeg, p, nterms=6, homogeneous=False):
    terms = {}
    deg = rng.randint(1, maxdeg)
    for _ in range(nterms):
        if homogeneous:
            e = rng.choice(monomials_of_degree(nvars, deg))
        else:
            e = tuple(rng.randint(0, maxdeg) for _ in range(nvars))
        terms[e] = rng.randint(1, (p or 10) - 1)
    return Polynomial(nvars, p, terms)


class TestMonomialOrder:
    def test_count_matches_binomial(self):
        from math import comb
        for nvars in (1, 2, 3, 4):
            for d in (0, 1, 3, 5):
                assert len(monomials_of_degree(nvars, d)) == comb(d + nvars - 1, nvars - 1)

    def test_descending_lex(self):
        ms = monomials_of_degree(3, 4)
        assert list(ms) == sorted(ms, reverse=True)
        assert ms[0] == (4, 0, 0)
        assert ms[-1] == (0, 0, 4)

    def test_index_is_inverse(self):
        idx = monomial_index(3, 5)
        for i, m in enumerate(monomials_of_degree(3, 5)):
            assert idx[m] == i


class TestConstruction:
    def test_zero_and_one(self):
        z = Polynomial.zero(3, 5)
        assert z.is_zero and z.degree() is None
        o = Polynomial.one(3, 5)
        assert o.degree() == 0 and o.coefficient_of((0, 0, 0)) == 1

    def test_coefficients_normalized_mod_p(self):
        f = Polynomial(2, 5, {(1, 0): 7, (0, 1): -1})
        assert f.coefficient_of((1, 0)) == 2
        assert f.coefficient_of((0, 1)) == 4

    def test_zero_coefficients_dropped(self):
        f = Polynomial(2, 3, {(1, 0): 3, (0, 1): 1})
        assert f.terms == {(0, 1): 1}

    def test_bad_exponent_tuple_rejected(self):
        with pytest.raises(DimensionMismatchError):
            Polynomial(3, 5, {(1, 0): 1})
        with pytest.raises(ValidationError):
            Polynomial(2, 5, {(-1, 0): 1})

    def test_homogeneity_flags(self):
        f = parse_polynomial("x0^2 + x1*x2", p=7)
        assert f.is_homogeneous and f.homogeneous_degree == 2
        g = parse_polynomial("x0^2 + x1", p=7)
        assert not g.is_homogeneous and g.homogeneous_degree is None


class TestArithmetic:
    def test_ring_axioms_randomized(self):
        rng = random.Random(2)
        for _ in range(40):
            p = rng.choice([2, 3, 5, 7])
            a = random_poly(rng, 3, 4, p)
            b = random_poly(rng, 3, 4, p)
            c = random_poly(rng, 3, 4, p)
            assert a * b == b * a
            assert (a + b) * c == a * c + b * c
            assert (a * b) * c == a * (b * c)
            assert a - a == Polynomial.zero(3, p)

    def test_mixed_domain_rejected(self):
        a = parse_polynomial("x0", p=5)
        b = parse_polynomial("x0", p=7)
        with pytest.raises(MixedDomainError):
            a + b
        with pytest.raises(DimensionMismatchError):
            a * parse_polynomial("x0 + x1", p=5)

    def test_frobenius_scale_is_pth_power(self):
        f = parse_polynomial("x0 + 2*x1 + x2", p=3)
        assert f.frobenius_scale(3) == poly_power(f, 3)
        assert f.frobenius_scale(9) == poly_power(f, 9)

    def test_equality_and_hash(self):
        a = parse_polynomial("x0^2 - x1*x2", nvars=3)
        b = parse_polynomial("- x1*x2 + x0^2", nvars=3)
        assert a == b and hash(a) == hash(b)
        assert a != reduce_mod_p(a, 5)


class TestParsing:
    @pytest.mark.parametrize("text", [
        "x0",
        "3*x0^2*x1 - x2 + 7",
        "-x0 + x1^4",
        "x1^2*x2 - x0^3 + x0*x2^2",
        "5*x0*x1 + 3*x0*x2 - 3*x1^2",
    ])
    def test_str_round_trip(self, text):
        f = parse_polynomial(text, nvars=3)
        assert parse_polynomial(str(f), nvars=3) == f

    def test_round_trip_randomized(self):
        rng = random.Random(11)
        for _ in range(50):
            f = random_poly(rng, 3, 5, rng.choice([None, 2, 5]))
            assert parse_polynomial(str(f), nvars=3, p=f.p) == f

    def test_whitespace_and_implicit_star(self):
        assert parse_polynomial("2 x0  x1^2", nvars=2) == \
            parse_polynomial("2*x0*x1^2", nvars=2)

    def test_nvars_inference(self):
        assert parse_polynomial("x3 + x0").nvars == 4
        assert parse_polynomial("7").nvars == 1

    def test_repeated_variables_multiply(self):
        assert parse_polynomial("x0*x0*x0", nvars=1) == \
            parse_polynomial("x0^3", nvars=1)

    @pytest.mark.parametrize("bad", ["", "x0 +", "x0^", "y1", "x0^x1", "* x0"])
    def test_parse_errors(self, bad):
        with pytest.raises(ParseError):
            parse_polynomial(bad)

    def test_out_of_range_variable(self):
        with pytest.raises(ParseError):
            parse_polynomial("x5", nvars=3)

    def test_cancellation_to_zero(self):
        assert parse_polynomial("x0 - x0", nvars=1).is_zero


class TestPolyPower:
    def test_small_cases(self):
        f = parse_polynomial("x0 + x1", p=2)
        assert poly_power(f, 2) == parse_polynomial("x0^2 + x1^2", p=2)
        assert poly_power(f, 0) == Polynomial.one(2, 2)
        assert poly_power(f, 1) == f

    def test_multinomial_coefficient(self):
        # coefficient of x^2 y^2 z^2 in (x^3+y^3+z^3)^2 is 0; in the cube of
        # (x+y+z) the coefficient of xyz is 3! = 6
        f = parse_polynomial("x0 + x1 + x2", p=7)
        assert poly_power(f, 3).coefficient_of((1, 1, 1)) == 6

    def test_dense_and_sparse_agree(self):
        rng = random.Random(5)
        for _ in range(20):
            p = rng.choice([2, 3, 5, 7])
            f = random_poly(rng, 3, 3, p, homogeneous=True)
            if f.is_zero:
                continue
            n = rng.randint(2, 9)
            dense = poly_power(f, n)
            sparse = poly_power(f, n, max_dense=0)   # force the sparse path
            assert dense == sparse

    def test_freshman_dream(self):
        rng = random.Random(8)
        for p in (2, 3, 5):
            f = random_poly(rng, 3, 3, p)
            g = random_poly(rng, 3, 3, p)
            assert poly_power(f + g, p) == poly_power(f, p) + poly_power(g, p)

    def test_power_over_z(self):
        f = parse_polynomial("x0 - x1", nvars=2)
        assert poly_power(f, 2) == parse_polynomial("x0^2 - 2*x0*x1 + x1^2", nvars=2)

    def test_monomial_shortcut(self):
        f = parse_polynomial("3*x0^2*x1", p=7)
        assert poly_power(f, 5) == parse_polynomial("5*x0^10*x1^5", p=7)

    def test_term_cap_enforced(self):
        f = parse_polynomial("x0 + x1 + x2", p=101)
        with pytest.raises(ResourceLimitError):
            poly_power(f, 40, max_terms=10)

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValidationError):
            poly_power(parse_polynomial("x0", p=2), -1)


class TestReduceModP:
    def test_basic(self):
        f = parse_polynomial("6*x0 + 5*x1", nvars=2)
        assert reduce_mod_p(f, 3) == parse_polynomial("2*x1", nvars=2, p=3)

    def test_already_reduced_rejected(self):
        with pytest.raises(MixedDomainError):
            reduce_mod_p(parse_polynomial("x0", p=5), 5)

    def test_terms_arrays_deterministic(self):
        f = parse_polynomial("x0^2 + x1^2 + x0*x1", p=3)
        e1, c1 = f.terms_arrays()
        e2, c2 = f.terms_arrays()
        assert np.array_equal(e1, e2) and np.array_equal(c1, c2)
        assert e1[0].tolist() == [2, 0]   # descending order
