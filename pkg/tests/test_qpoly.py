import pytest
from hypothesis import given, strategies as st

from moriconic import NotDivisible, QPoly, one_minus_q_pow
from moriconic.qpoly import add, eval_at_one, exact_div, mul, subst_q_power


def P(*coeffs):
    return QPoly(coeffs)


class TestCanonicalForm:
    def test_trailing_zeros_stripped(self):
        assert P(1, 2, 0, 0).coeffs == (1, 2)

    def test_zero_polynomial_is_empty(self):
        assert P(0, 0, 0).coeffs == ()
        assert P().is_zero

    def test_degree_of_zero_is_none(self):
        assert P().degree is None
        assert P(5).degree == 0
        assert P(0, 0, 3).degree == 2

    def test_rejects_non_integers(self):
        with pytest.raises(TypeError):
            QPoly([1.5])
        with pytest.raises(TypeError):
            QPoly([True])

    def test_int_equality(self):
        assert P(2) == 2
        assert P() == 0


class TestAdd:
    def test_cancellation(self):
        assert P(1, 1) + P(1, -1) == P(2)

    def test_identity(self):
        p = P(3, 0, 7)
        assert p + QPoly.zero() == p

    def test_plain_sum(self):
        assert P(1, 1, 1) + P(0, 0, 1) == P(1, 1, 2)


class TestMul:
    def test_difference_of_squares(self):
        assert P(1, 1) * P(1, -1) == P(1, 0, -1)

    def test_identity(self):
        p = P(2, 0, -3, 1)
        assert p * QPoly.one() == p

    def test_double_symmetroid_product(self):
        # (q^2+1)(q^7+q^6+q^2+q+1), expanded by hand convolution
        lhs = P(1, 0, 1) * P(1, 1, 1, 0, 0, 0, 1, 1)
        assert lhs == P(1, 1, 2, 1, 1, 0, 1, 1, 1, 1)


class TestExactDiv:
    def test_geometric_series(self):
        assert one_minus_q_pow(3).exact_div(one_minus_q_pow(1)) == P(1, 1, 1)

    def test_self_division(self):
        p = P(3, -1, 4)
        assert p.exact_div(p) == QPoly.one()

    def test_gaussian_binomial_4_2(self):
        num = one_minus_q_pow(4) * one_minus_q_pow(3)
        den = one_minus_q_pow(1) * one_minus_q_pow(2)
        assert num.exact_div(den) == P(1, 1, 2, 1, 1)

    def test_remainder_raises(self):
        with pytest.raises(NotDivisible):
            P(1, 1).exact_div(P(0, 1))

    def test_non_integer_quotient_raises(self):
        with pytest.raises(NotDivisible):
            P(0, 1).exact_div(P(0, 2))

    def test_zero_denominator_raises(self):
        with pytest.raises(ZeroDivisionError):
            P(1).exact_div(QPoly.zero())

    def test_zero_numerator(self):
        assert QPoly.zero().exact_div(P(1, 1)) == QPoly.zero()


class TestSubstitution:
    def test_square(self):
        assert P(1, 1).subst_q_power(2) == P(1, 0, 1)

    def test_identity(self):
        p = P(1, 2, 3)
        assert p.subst_q_power(1) == p

    def test_projective_plane(self):
        assert P(1, 1, 1).subst_q_power(2) == P(1, 0, 1, 0, 1)

    def test_invalid_power(self):
        with pytest.raises(ValueError):
            P(1, 1).subst_q_power(0)


class TestEvalAtOne:
    def test_projective_plane_euler(self):
        assert P(1, 1, 1).eval_at_one() == 3

    def test_zero(self):
        assert QPoly.zero().eval_at_one() == 0

    def test_grassmannian_2_4_points(self):
        assert P(1, 1, 2, 1, 1).eval_at_one() == 6


class TestSerialization:
    def test_to_json(self):
        assert P(1, 1, 2, 1, 1).to_json() == ["1", "1", "2", "1", "1"]

    def test_round_trip(self):
        p = P(-3, 0, 12345678901234567890)
        assert QPoly.from_json(p.to_json()) == p


small_polys = st.lists(st.integers(min_value=-30, max_value=30), max_size=7).map(QPoly)
nonzero_polys = small_polys.filter(lambda p: not p.is_zero)


class TestRingProperties:
    @given(small_polys, small_polys, small_polys)
    def test_associativity_and_distributivity(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(small_polys, small_polys)
    def test_commutativity(self, a, b):
        assert a + b == b + a
        assert a * b == b * a

    @given(small_polys, nonzero_polys)
    def test_mul_div_round_trip(self, a, b):
        assert (a * b).exact_div(b) == a

    @given(small_polys, st.integers(1, 4), st.integers(1, 4))
    def test_subst_composition(self, p, j, k):
        assert p.subst_q_power(j).subst_q_power(k) == p.subst_q_power(j * k)

    @given(small_polys)
    def test_module_level_wrappers(self, p):
        assert add(p, p) == 2 * p
        assert mul(p, QPoly.one()) == p
        assert subst_q_power(p, 1) == p
        assert eval_at_one(p) == p(1)
        if not p.is_zero:
            assert exact_div(p, p) == QPoly.one()
