from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from sagakit.polyring import (FieldMismatchError, FieldSpec, Fp, Monomial,
                              PolyError, PolyParseError, Polynomial, RATIONAL,
                              eval_at, monomial_basis, parse_poly, poly_mul)

F7 = FieldSpec.prime(7)
PERAZZO = "x0*x3^2 + 2*x1*x3*x4 + x2*x4^2"


def mono(*exps):
    return Monomial(exps)


class TestParse:
    def test_perazzo_form_terms(self):
        p = parse_poly(PERAZZO, 5)
        assert len(p.terms) == 3
        assert p.coefficient(mono(1, 0, 0, 2, 0)) == 1
        assert p.coefficient(mono(0, 1, 0, 1, 1)) == 2
        assert p.coefficient(mono(0, 0, 1, 0, 2)) == 1

    def test_zero_literal(self):
        assert parse_poly("0", 3).is_zero

    def test_cancellation_to_zero(self):
        assert parse_poly("x0^3 - x0^3", 1).is_zero

    def test_rational_coefficients(self):
        p = parse_poly("3/2*x0 - 1/2*x1", 2)
        assert p.coefficient(mono(1, 0)) == Fraction(3, 2)
        assert p.coefficient(mono(0, 1)) == Fraction(-1, 2)

    def test_juxtaposition(self):
        assert parse_poly("x0x1^2", 2) == parse_poly("x0*x1^2", 2)

    def test_unknown_variable(self):
        with pytest.raises(PolyParseError):
            parse_poly("x5", 5)

    def test_syntax_error_carries_position(self):
        with pytest.raises(PolyParseError) as err:
            parse_poly("x0 + * x1", 2)
        assert err.value.position == 5

    def test_noninvertible_coefficient_mod_p(self):
        with pytest.raises(PolyParseError):
            parse_poly("1/7*x0", 1, F7)

    def test_prime_field_wraps(self):
        p = parse_poly("8*x0 + 7*x1", 2, F7)
        assert p.coefficient(mono(1, 0)) == Fp(1, 7)
        assert p.coefficient(mono(0, 1)) == Fp(0, 7)

    def test_empty_input_rejected(self):
        with pytest.raises(PolyParseError):
            parse_poly("   ", 2)


class TestArithmetic:
    def test_difference_of_squares(self):
        a = parse_poly("x0 + x1", 2)
        b = parse_poly("x0 - x1", 2)
        assert poly_mul(a, b) == parse_poly("x0^2 - x1^2", 2)

    def test_multiplicative_identity(self):
        p = parse_poly("2*x0*x1 - x2^2", 3)
        one = Polynomial.constant(1, 3)
        assert poly_mul(p, one) == p

    def test_monomial_product(self):
        a = parse_poly("x0*x3", 5)
        b = parse_poly("x3*x4", 5)
        assert poly_mul(a, b) == parse_poly("x0*x3^2*x4", 5)

    def test_mixed_fields_rejected(self):
        with pytest.raises(FieldMismatchError):
            poly_mul(parse_poly("x0", 1), parse_poly("x0", 1, F7))

    def test_mixed_arity_rejected(self):
        with pytest.raises(PolyError):
            poly_mul(parse_poly("x0", 1), parse_poly("x0", 2))

    def test_homogeneous_product_degree(self):
        p = parse_poly("x0^2 + x1*x2", 3)
        q = parse_poly("x0 - x2", 3)
        assert (p * q).homogeneous_degree() == 3


class TestMonomialBasis:
    def test_sizes(self):
        for n_vars in range(1, 7):
            for d in range(9):
                expected = comb(n_vars + d - 1, n_vars - 1)
                assert len(monomial_basis(n_vars, d)) == expected

    def test_degree_two_in_five_vars(self):
        assert len(monomial_basis(5, 2)) == 15

    def test_degree_zero(self):
        basis = monomial_basis(5, 0)
        assert basis == [mono(0, 0, 0, 0, 0)]

    def test_two_vars_cubics_exact_order(self):
        assert [m.exponents for m in monomial_basis(2, 3)] == [
            (3, 0), (2, 1), (1, 2), (0, 3)]

    def test_strictly_decreasing(self):
        basis = monomial_basis(4, 3)
        assert all(a > b for a, b in zip(basis, basis[1:]))


class TestEval:
    def test_perazzo_point(self):
        # only the x0*x3^2 term survives at (1,0,0,1,0)
        p = parse_poly(PERAZZO, 5)
        assert eval_at(p, [1, 0, 0, 1, 0]) == 1

    def test_positive_degree_at_origin(self):
        p = parse_poly("x0^2*x1 + 4*x2^3", 3)
        assert eval_at(p, [0, 0, 0]) == 0

    def test_product_point(self):
        assert eval_at(parse_poly("x0*x1", 2), [2, 3]) == 6

    def test_length_mismatch(self):
        with pytest.raises(PolyError):
            eval_at(parse_poly("x0", 2), [1])


small_scalars = st.integers(min_value=-4, max_value=4)


@st.composite
def polys(draw, n_vars=3, max_degree=3, max_terms=4):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = tuple(draw(st.integers(0, max_degree)) for _ in range(n_vars))
        terms[Monomial(exps)] = draw(small_scalars)
    return Polynomial(n_vars, RATIONAL, terms)


class TestProperties:
    @given(polys(), polys())
    @settings(max_examples=60, deadline=None)
    def test_mul_commutative(self, p, q):
        assert p * q == q * p

    @given(polys(max_terms=3), polys(max_terms=3), polys(max_terms=3))
    @settings(max_examples=40, deadline=None)
    def test_mul_associative(self, p, q, r):
        assert (p * q) * r == p * (q * r)

    @given(polys(), st.integers(-5, 5))
    @settings(max_examples=60, deadline=None)
    def test_homogeneous_scaling(self, p, t):
        parts = {}
        for m, c in p.terms.items():
            parts.setdefault(m.degree, {})[m] = c
        for d, terms in parts.items():
            hom = Polynomial(3, RATIONAL, terms)
            v = [1, -2, 3]
            lhs = hom.eval_at([t * x for x in v])
            rhs = Fraction(t) ** d * hom.eval_at(v)
            assert lhs == rhs

    @given(polys())
    @settings(max_examples=60, deadline=None)
    def test_print_parse_round_trip(self, p):
        assert parse_poly(p.to_string(), 3) == p


class TestFieldSpec:
    def test_prime_validation(self):
        with pytest.raises(ValueError):
            FieldSpec.prime(100)

    def test_from_string(self):
        assert FieldSpec.from_string("rational") == RATIONAL
        assert FieldSpec.from_string("fp:101") == FieldSpec.prime(101)
        with pytest.raises(ValueError):
            FieldSpec.from_string("fp:abc")

    def test_fp_arithmetic(self):
        a = Fp(3, 7)
        assert a + 5 == Fp(1, 7)
        assert a * a == Fp(2, 7)
        assert a / Fp(5, 7) == Fp(2, 7)  # 3 * 5^{-1} = 3*3 = 9 = 2
        assert -a == Fp(4, 7)
        with pytest.raises(FieldMismatchError):
            a + Fp(1, 11)

    def test_coerce_fraction_mod_p(self):
        f = FieldSpec.prime(7)
        assert f.coerce(Fraction(1, 2)) == Fp(4, 7)
