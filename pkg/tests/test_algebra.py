import random
from fractions import Fraction
from math import comb

import pytest

from sagakit.algebra import (AlgebraError, DegreeOverflowError,
                             NotRegularSequence, expected_ci_hilbert,
                             from_inverse_system, from_regular_sequence)
from sagakit.apolarity import catalecticant
from sagakit.exactla import rank_kernel
from sagakit.polyring import (FieldSpec, Monomial, Polynomial, RATIONAL,
                              monomial_basis, parse_poly)

from oracles import inverse_system_hilbert


def poly(text, n, field=RATIONAL):
    return parse_poly(text, n, field)


def gens(texts, n, field=RATIONAL):
    return [parse_poly(t, n, field) for t in texts]


SQUARES = ["x0^2", "x1^2", "x2^2", "x3^2", "x4^2"]


class TestFromInverseSystem:
    def test_perazzo_hilbert(self, perazzo_alg):
        assert perazzo_alg.hilbert == (1, 5, 5, 1)
        assert perazzo_alg.socle_degree == 3

    def test_single_variable_power(self):
        a = from_inverse_system(poly("x0^4", 1))
        assert a.hilbert == (1, 1, 1, 1, 1)
        assert a.socle_degree == 4

    def test_binary_product(self):
        # oracle: catalecticant ranks computed symbolically
        assert inverse_system_hilbert("x0*x1", 2) == [1, 2, 1]
        a = from_inverse_system(poly("x0*x1", 2))
        assert a.hilbert == (1, 2, 1)

    def test_zero_form_rejected(self):
        with pytest.raises(AlgebraError):
            from_inverse_system(Polynomial.zero(3))

    def test_dims_match_catalecticant_ranks(self, perazzo_f, perazzo_alg):
        for i in range(4):
            rank = rank_kernel(catalecticant(perazzo_f, i).matrix).rank
            assert perazzo_alg.hilbert[i] == rank


class TestFromRegularSequence:
    def test_monomial_ci(self, monomial_ci):
        assert monomial_ci.hilbert == (1, 5, 10, 10, 5, 1)
        assert monomial_ci.socle_degree == 5

    def test_expected_series(self):
        # (1+t)^5 expanded
        assert expected_ci_hilbert([2] * 5, 5) == [comb(5, i) for i in range(6)]
        assert expected_ci_hilbert([2] * 4, 4) == [1, 4, 6, 4, 1]

    def test_missing_variable_rejected(self):
        bad = gens(["x0^2", "x0*x1", "x1^2", "x2^2", "x3^2"], 5)
        with pytest.raises(NotRegularSequence) as err:
            from_regular_sequence(bad)
        assert err.value.degree >= 2

    def test_fermat_cubic_surface_jacobian(self):
        a = from_regular_sequence(gens(["3*x0^2", "3*x1^2", "3*x2^2",
                                        "3*x3^2"], 4))
        assert a.hilbert == (1, 4, 6, 4, 1)

    def test_wrong_count_rejected(self):
        with pytest.raises(AlgebraError):
            from_regular_sequence(gens(["x0^2", "x1^2"], 3))

    def test_mixed_degrees(self):
        a = from_regular_sequence(gens(["x0^2", "x1^3", "x2^2"], 3))
        assert a.socle_degree == 4
        assert a.hilbert == tuple(expected_ci_hilbert([2, 3, 2], 3))
        assert a.hilbert_symmetric()

    def test_prime_field(self):
        f101 = FieldSpec.prime(101)
        a = from_regular_sequence(gens(SQUARES, 5, f101))
        assert a.hilbert == (1, 5, 10, 10, 5, 1)


class TestReduce:
    def test_generators_reduce_to_zero(self, monomial_ci):
        for text in SQUARES:
            assert monomial_ci.reduce(poly(text, 5)).is_zero

    def test_perazzo_basis_vector(self, perazzo_alg):
        # the pinned degree-2 basis lists x0*x3 (as operator y0y3) fourth
        e = perazzo_alg.reduce(poly("x0*x3", 5))
        assert e.coords == (0, 0, 0, 1, 0)

    def test_socle_identifications(self, perazzo_alg):
        classes = [perazzo_alg.reduce(poly(t, 5))
                   for t in ("x0*x3^2", "x1*x3*x4", "x2*x4^2")]
        assert classes[0] == classes[1] == classes[2]
        assert classes[0].coords == (1,)

    def test_zero_needs_degree(self, monomial_ci):
        with pytest.raises(AlgebraError):
            monomial_ci.reduce(Polynomial.zero(5))
        assert monomial_ci.reduce(Polynomial.zero(5), degree=2).is_zero

    def test_reduce_then_lift_is_projection(self, monomial_ci):
        rng = random.Random(2)
        basis = monomial_basis(5, 3)
        p = Polynomial(5, RATIONAL, {m: rng.randint(-4, 4) for m in basis})
        e = monomial_ci.reduce(p)
        assert monomial_ci.reduce(monomial_ci.lift(e), degree=3) == e


class TestMulMap:
    def test_monomial_ci_mu1_x0(self, monomial_ci):
        # brute-force oracle: x0*x0 = 0, x0*xj are 4 distinct basis classes
        x0 = monomial_ci.reduce(poly("x0", 5))
        m = monomial_ci.mul_map(x0, 1)
        assert (m.rows, m.cols) == (10, 5)
        assert rank_kernel(m).rank == 4

    def test_zero_multiplier(self, monomial_ci):
        zero = monomial_ci.zero_element(1)
        m = monomial_ci.mul_map(zero, 2)
        assert all(not e for row in m.entries for e in row)

    def test_perazzo_rank_at_most_four(self, perazzo_alg):
        rng = random.Random(11)
        for _ in range(8):
            x = perazzo_alg.random_element(1, rng)
            rank = rank_kernel(perazzo_alg.mul_map(x, 1)).rank
            assert rank <= 4

    def test_degree_overflow(self, perazzo_alg):
        x = perazzo_alg.basis(1)[0]
        with pytest.raises(DegreeOverflowError):
            perazzo_alg.mul_map(x, 3)

    def test_bilinearity(self, monomial_ci):
        rng = random.Random(19)
        for _ in range(4):
            a = monomial_ci.random_element(1, rng)
            b = monomial_ci.random_element(1, rng)
            s, t = rng.randint(-3, 3), rng.randint(-3, 3)
            combo = a.scale(Fraction(s)) + b.scale(Fraction(t))
            m_combo = monomial_ci.mul_map(combo, 2)
            ma = monomial_ci.mul_map(a, 2)
            mb = monomial_ci.mul_map(b, 2)
            for i in range(m_combo.rows):
                for j in range(m_combo.cols):
                    assert m_combo.entries[i][j] == \
                        s * ma.entries[i][j] + t * mb.entries[i][j]


class TestPairing:
    def test_monomial_ci_degree_one_permutation(self, monomial_ci):
        ok, m = monomial_ci.pairing_check(1)
        assert ok
        # each x_i pairs with exactly one square-free complement
        for row in m.entries:
            assert sum(1 for e in row if e) == 1

    def test_perazzo_identity(self, perazzo_alg):
        ok, m = perazzo_alg.pairing_check(1)
        assert ok
        n = len(m.entries)
        assert all(m.entries[i][j] == (1 if i == j else 0)
                   for i in range(n) for j in range(n))

    def test_degree_zero(self, monomial_ci):
        ok, m = monomial_ci.pairing_check(0)
        assert ok
        assert (m.rows, m.cols) == (1, 1)
        assert m.entries[0][0] == 1

    def test_all_degrees(self, monomial_ci, perazzo_alg):
        for algebra in (monomial_ci, perazzo_alg):
            for s in range(algebra.socle_degree + 1):
                assert algebra.pairing_check(s)[0]


class TestQuotientByAnn:
    def test_monomial_ci_by_x0(self, monomial_ci):
        # brute-force: kernel of x0-multiplication is spanned by monomials
        # containing x0, leaving the 4-variable square-free count
        x0 = monomial_ci.reduce(poly("x0", 5))
        q = monomial_ci.quotient_by_ann(x0)
        assert q.socle_degree == 4
        assert q.hilbert == (1, 4, 6, 4, 1)
        for s in range(5):
            assert q.pairing_check(s)[0]

    def test_by_socle_gives_base_field(self, monomial_ci):
        socle = monomial_ci.reduce(poly("x0*x1*x2*x3*x4", 5))
        q = monomial_ci.quotient_by_ann(socle)
        assert q.hilbert == (1,)
        assert q.socle_degree == 0

    def test_perazzo_by_generic_linear(self, perazzo_alg):
        rng = random.Random(4)
        x = perazzo_alg.random_element(1, rng)
        q = perazzo_alg.quotient_by_ann(x)
        assert q.socle_degree == 2
        assert q.hilbert_symmetric()
        assert q.hilbert == (1, 4, 1)
        for s in range(3):
            assert q.pairing_check(s)[0]

    def test_zero_rejected(self, monomial_ci):
        with pytest.raises(AlgebraError):
            monomial_ci.quotient_by_ann(monomial_ci.zero_element(1))


class TestPower:
    def test_power_zero_is_unit(self, monomial_ci):
        x = monomial_ci.reduce(poly("x0 + x1", 5))
        assert monomial_ci.power(x, 0) == monomial_ci.unit()

    def test_perazzo_square_zero_generator(self, perazzo_alg):
        y0 = perazzo_alg.reduce(poly("x0", 5))
        assert perazzo_alg.power(y0, 2).is_zero

    def test_monomial_ci_square(self, monomial_ci):
        x = monomial_ci.reduce(poly("x0 + x1", 5))
        assert monomial_ci.power(x, 2) == \
            monomial_ci.reduce(poly("2*x0*x1", 5))

    def test_exponent_above_socle(self, monomial_ci):
        x = monomial_ci.reduce(poly("x0", 5))
        with pytest.raises(DegreeOverflowError):
            monomial_ci.power(x, 6)


class TestStructuralGates:
    def test_hilbert_symmetry(self, monomial_ci, perazzo_alg):
        assert monomial_ci.hilbert_symmetric()
        assert perazzo_alg.hilbert_symmetric()

    def test_standardness(self, monomial_ci, perazzo_alg):
        assert monomial_ci.is_standard()
        assert perazzo_alg.is_standard()

    def test_random_inverse_systems_are_gorenstein(self):
        rng = random.Random(55)
        basis = monomial_basis(4, 3)
        built = 0
        while built < 3:
            g = Polynomial(4, RATIONAL, {m: rng.randint(-3, 3) for m in basis})
            if g.is_zero:
                continue
            a = from_inverse_system(g)
            built += 1
            assert a.hilbert_symmetric()
            assert a.is_standard()
            for s in range(a.socle_degree + 1):
                assert a.pairing_check(s)[0]


class TestPinnedBasis:
    def test_invalid_basis_rejected(self, perazzo_alg):
        reps = [Polynomial.from_monomial(Monomial(e)) for e in
                [(0, 0, 0, 2, 0)] * 5]
        with pytest.raises(Exception):
            perazzo_alg.with_degree_basis(2, reps)

    def test_serialization_shape(self, perazzo_alg):
        payload = perazzo_alg.to_json_dict()
        assert payload["hilbert"] == [1, 5, 5, 1]
        assert payload["presentation"]["kind"] == "inverse_system"
        assert payload["basis"][1] == [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0],
                                       [0, 0, 1, 0, 0], [0, 0, 0, 1, 0],
                                       [0, 0, 0, 0, 1]]
        # pinned degree-2 basis serializes as the five pinned monomials
        assert payload["basis"][2] == [[0, 0, 0, 2, 0], [0, 0, 0, 1, 1],
                                       [0, 0, 0, 0, 2], [1, 0, 0, 1, 0],
                                       [0, 0, 1, 0, 1]]


def test_monomial_ci_pairing_structure(monomial_ci):
    # square-free pairing: x_i * (product of the other four) is the socle
    ok, m = monomial_ci.pairing_check(1)
    assert ok
    deg4 = [frozenset(i for i, e in enumerate(mon.exponents) if e)
            for mon in monomial_ci.piece(4).basis_monomials]
    for i, row in enumerate(m.entries):
        for j, entry in enumerate(row):
            expect = i not in deg4[j] and len(deg4[j]) == 4
            assert bool(entry) == expect
