"""Exact arithmetic in Q(zeta_m): construction, field axioms, conjugation."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symsig.cyclotomic import (
    ConsistencyError,
    cyclotomic_polynomial,
    divisors,
    euler_phi,
    get_context,
    root_of_unity,
)


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


class TestCyclotomicPolynomial:
    def test_first_polynomial_is_x_minus_one(self):
        assert tuple(cyclotomic_polynomial(1)) == (-1, 1)

    def test_fourth_is_x_squared_plus_one(self):
        assert tuple(cyclotomic_polynomial(4)) == (1, 0, 1)

    def test_sixth_is_x_squared_minus_x_plus_one(self):
        assert tuple(cyclotomic_polynomial(6)) == (1, -1, 1)

    def test_degree_is_totient(self):
        for m in (1, 2, 7, 12, 24, 60, 97):
            assert len(cyclotomic_polynomial(m)) == euler_phi(m) + 1

    @pytest.mark.parametrize("m", [1, 2, 6, 12, 30, 60, 99, 120])
    def test_product_over_divisors_is_x_m_minus_one(self, m):
        prod = [1]
        for d in divisors(m):
            prod = poly_mul(prod, cyclotomic_polynomial(d))
        assert prod == [-1] + [0] * (m - 1) + [1]


class TestRootsOfUnity:
    def test_primitive_fourth_root_has_unit_coefficient(self):
        ctx = get_context(4)
        assert root_of_unity(ctx, 1).coeffs == (Fraction(0), Fraction(1))

    def test_minus_one_in_conductor_two(self):
        ctx = get_context(2)
        assert root_of_unity(ctx, 1) == -1

    def test_third_root_squared_reduces(self):
        ctx = get_context(3)
        z = ctx.zeta(1)
        assert root_of_unity(ctx, 2) == -ctx.one - z

    def test_exponent_wraps_modulo_m(self):
        ctx = get_context(12)
        assert root_of_unity(ctx, 25) == ctx.zeta(1)
        assert root_of_unity(ctx, -1) == ctx.zeta(11)

    def test_identity_element(self):
        ctx = get_context(20)
        assert root_of_unity(ctx, 0) == ctx.one


class TestFieldOperations:
    def test_root_times_inverse_power_is_one(self):
        for m in (2, 5, 12, 60):
            ctx = get_context(m)
            assert ctx.zeta(1) * ctx.zeta(m - 1) == ctx.one

    def test_all_sixth_roots_sum_to_zero(self):
        ctx = get_context(6)
        total = ctx.zero
        for k in range(6):
            total = total + ctx.zeta(k)
        assert total == ctx.zero

    def test_inverse_of_one_plus_i(self):
        ctx = get_context(4)
        x = ctx.one + ctx.zeta(1)
        expected = (ctx.one - ctx.zeta(1)) * Fraction(1, 2)
        assert x.inv() == expected

    def test_inverse_of_zero_rejected(self):
        ctx = get_context(8)
        with pytest.raises(ZeroDivisionError):
            ctx.zero.inv()

    def test_mixed_conductors_rejected(self):
        with pytest.raises(ValueError):
            get_context(4).zeta(1) + get_context(3).zeta(1)

    def test_rational_embedding_arithmetic(self):
        ctx = get_context(12)
        assert ctx.rational(Fraction(1, 2)) + ctx.rational(Fraction(1, 3)) == ctx.rational(Fraction(5, 6))


class TestConjugation:
    def test_rationals_are_fixed(self):
        ctx = get_context(8)
        x = ctx.rational(Fraction(-7, 3))
        assert x.conjugate() == x

    def test_conjugate_of_i_is_minus_i(self):
        ctx = get_context(4)
        assert ctx.zeta(1).conjugate() == -ctx.zeta(1)

    def test_involution(self):
        ctx = get_context(5)
        x = ctx.rational(3) + 2 * ctx.zeta(1) + ctx.zeta(3)
        assert x.conjugate().conjugate() == x


class TestRationalDetection:
    def test_constant(self):
        ctx = get_context(10)
        assert ctx.rational(Fraction(7, 3)).to_rational() == Fraction(7, 3)

    def test_primitive_root_is_not_rational(self):
        assert get_context(5).zeta(1).to_rational() is None

    def test_cosine_combination(self):
        ctx = get_context(6)
        assert (ctx.zeta(1) + ctx.zeta(-1)).to_rational() == 1


class TestComplexEmbedding:
    def test_one(self):
        assert get_context(7).one.embed_complex() == pytest.approx(1.0)

    def test_i(self):
        z = get_context(4).zeta(1).embed_complex()
        assert abs(z - 1j) < 1e-12

    def test_golden_section(self):
        ctx = get_context(5)
        v = (ctx.zeta(1) + ctx.zeta(-1)).embed_complex()
        assert abs(v.real - 0.6180339887498949) < 1e-9
        assert abs(v.imag) < 1e-9


def elements(m):
    ctx = get_context(m)
    return st.lists(
        st.integers(min_value=-30, max_value=30),
        min_size=ctx.degree,
        max_size=ctx.degree,
    ).map(lambda cs: ctx.from_coeffs([Fraction(c) for c in cs]))


@pytest.mark.parametrize("m", [12, 24, 60])
class TestFieldAxioms:
    @settings(max_examples=120, deadline=None)
    @given(data=st.data())
    def test_associativity_and_distributivity(self, m, data):
        x = data.draw(elements(m))
        y = data.draw(elements(m))
        z = data.draw(elements(m))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z

    @settings(max_examples=120, deadline=None)
    @given(data=st.data())
    def test_multiplicative_inverse(self, m, data):
        x = data.draw(elements(m).filter(lambda e: not e.is_zero))
        ctx = get_context(m)
        assert x * x.inv() == ctx.one

    @settings(max_examples=120, deadline=None)
    @given(data=st.data())
    def test_conjugation_is_a_ring_map(self, m, data):
        x = data.draw(elements(m))
        y = data.draw(elements(m))
        assert (x + y).conjugate() == x.conjugate() + y.conjugate()
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()
        assert x.conjugate().conjugate() == x

    @settings(max_examples=120, deadline=None)
    @given(data=st.data())
    def test_norm_is_nonnegative_real(self, m, data):
        x = data.draw(elements(m))
        z = (x * x.conjugate()).embed_complex()
        assert abs(z.imag) < 1e-9
        assert z.real > -1e-9
