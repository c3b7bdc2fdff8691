import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symhodge.polyring import (
    ONE,
    IntegralityError,
    Monomial,
    TriPoly,
    ZSeries,
    poly_add,
    poly_mul,
    poly_pow,
    poly_specialize,
    poly_substitute_power,
    series_coeff,
    series_int_pow,
    series_mul,
)

P = TriPoly.parse


def S(order, *coeffs):
    return ZSeries(order, [P(c) if isinstance(c, str) else c for c in coeffs])


small_polys = st.dictionaries(
    st.tuples(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6)),
    st.integers(-5, 5),
    max_size=8,
).map(TriPoly)


class TestTriPolyExamples:
    def test_add(self):
        assert poly_add(P("1 + t*u"), P("t*v")) == P("1 + t*u + t*v")
        assert poly_add(P("1 + t*u"), P("-1 - t*u")).is_zero()
        assert poly_add(P("1 + t^2*u*v"), P("1 - t^2*u*v")) == 2

    def test_mul(self):
        assert poly_mul(P("1 + t*u"), P("1 + t*v")) == P("1 + t*u + t*v + t^2*u*v")
        assert poly_mul(P("1 + t*u*v"), ONE) == P("1 + t*u*v")

    def test_mul_four_factors_against_distributive_expansion(self):
        a, b = P("1 + t*u"), P("1 + t*v")
        repeated = poly_mul(poly_mul(a, a), poly_mul(b, b))
        # expand the four binomials directly: choose 1 or the monomial from each
        direct = {}
        for bits in range(16):
            mono = [0, 0, 0]
            for i, (dk, dp, dq) in enumerate([(1, 1, 0), (1, 1, 0), (1, 0, 1), (1, 0, 1)]):
                if bits >> i & 1:
                    mono[0] += dk
                    mono[1] += dp
                    mono[2] += dq
            direct[tuple(mono)] = direct.get(tuple(mono), 0) + 1
        assert repeated == TriPoly(direct)
        assert repeated == P(
            "1 + 2*t*u + 2*t*v + t^2*u^2 + 4*t^2*u*v + t^2*v^2 + 2*t^3*u^2*v + 2*t^3*u*v^2 + t^4*u^2*v^2"
        )

    def test_pow(self):
        assert poly_pow(P("1 + t*u*v"), 0) == 1
        assert poly_pow(P("1 + t*u*v"), 2) == P("1 + 2*t*u*v + t^2*u^2*v^2")
        assert poly_pow(P("1 + t*u"), 3) == P("1 + 3*t*u + 3*t^2*u^2 + t^3*u^3")
        with pytest.raises(ValueError):
            poly_pow(ONE, -1)

    def test_substitute_power(self):
        assert poly_substitute_power(P("1 + t*u*v"), 2) == P("1 - t^2*u^2*v^2")
        assert poly_substitute_power(P("1 + t*u*v"), 1) == P("1 + t*u*v")
        assert poly_substitute_power(P("1 + t*u"), 3) == P("1 + t^3*u^3")

    def test_substitute_power_matches_evaluation(self):
        # -(-t)^j evaluated at t = 2 for j = 2 is -4
        a = P("3 + 2*t*u - t^2*v + t^3*u*v")
        for j in (1, 2, 3, 4):
            for t in (2, -3):
                lhs = poly_substitute_power(a, j)(t=t, u=5, v=7)
                rhs = a(t=-((-t) ** j), u=5**j, v=7**j)
                assert lhs == rhs

    def test_specialize(self):
        assert poly_specialize(P("1 + t*u + t*v + t^2*u*v"), u=1, v=1) == P("1 + 2*t + t^2")
        assert poly_specialize(P("1 + t*u*v"), t=-1) == P("1 - u*v")
        assert poly_specialize(TriPoly.constant(5), t=-1, u=1, v=1) == 5

    def test_exact_div(self):
        assert P("2 + 4*t").exact_div(2) == P("1 + 2*t")
        with pytest.raises(IntegralityError):
            P("2 + 3*t").exact_div(2)

    def test_rejects_negative_exponent_and_float(self):
        with pytest.raises(ValueError):
            TriPoly({(-1, 0, 0): 1})
        with pytest.raises(TypeError):
            TriPoly({(0, 0, 0): 1.5})

    def test_no_zero_terms_stored(self):
        p = TriPoly({(1, 0, 0): 1, (0, 0, 0): 0}) + P("-t")
        assert len(p) == 0 and p == 0


class TestSerialization:
    def test_canonical_text(self):
        p = P("t^2*u*v + 1 + t*u - 3*t*v")
        assert p.to_text() == "1 - 3*t*v + t*u + t^2*u*v"
        assert P(p.to_text()) == p
        assert TriPoly().to_text() == "0"
        assert (-ONE).to_text() == "-1"

    def test_json_records(self):
        p = P("1 + 12345678901234567890123*t^3*u*v^2")
        records = json.loads(p.to_json())
        assert records == [
            {"k": 0, "p": 0, "q": 0, "c": "1"},
            {"k": 3, "p": 1, "q": 2, "c": "12345678901234567890123"},
        ]
        assert TriPoly.from_json(p.to_json()) == p

    def test_monomial_order_is_lexicographic(self):
        p = P("v + u + t + t*v + t*u")
        assert [tuple(m) for m, _ in p.terms()] == [(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 0, 1), (1, 1, 0)]

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            P("1 + x")
        with pytest.raises(ValueError):
            P("")

    @given(small_polys)
    def test_text_and_json_roundtrip(self, p):
        assert P(p.to_text()) == p
        assert TriPoly.from_json(p.to_json()) == p


class TestRingAxioms:
    @given(small_polys, small_polys, small_polys)
    def test_associative_commutative_distributive(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c

    @given(small_polys, small_polys, st.integers(1, 4))
    def test_substitution_is_multiplicative(self, a, b, j):
        assert poly_substitute_power(a * b, j) == poly_substitute_power(a, j) * poly_substitute_power(b, j)

    @given(small_polys, small_polys, st.sampled_from([None, 1, -1, 2]), st.sampled_from([None, 1, -1]))
    def test_specialize_commutes_with_mul(self, a, b, t, u):
        lhs = poly_specialize(a * b, t=t, u=u, v=1)
        rhs = poly_specialize(a, t=t, u=u, v=1) * poly_specialize(b, t=t, u=u, v=1)
        assert lhs == rhs


class TestZSeries:
    def test_mul(self):
        assert series_mul(S(2, "1", "1"), S(2, "1", "-1")) == S(2, "1", "0", "-1")
        assert series_mul(S(1, "1", "t"), ZSeries.one(1)) == S(1, "1", "t")
        assert series_mul(S(2, "1", "1", "1"), S(2, "1", "1", "1")) == S(2, "1", "2", "3")

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            series_mul(ZSeries.one(1), ZSeries.one(2))

    def test_int_pow(self):
        assert series_int_pow(S(3, "1", "-1"), -1) == S(3, "1", "1", "1", "1")
        assert series_int_pow(S(2, "1", "t"), 2) == S(2, "1", "2*t", "t^2")
        inv = series_int_pow(S(2, "1", "-t^4"), -1)
        assert inv == S(2, "1", "t^4", "t^8")
        assert inv * S(2, "1", "-t^4") == ZSeries.one(2)

    def test_int_pow_requires_unit(self):
        with pytest.raises(ValueError):
            series_int_pow(S(2, "2", "1"), -1)
        with pytest.raises(ValueError):
            series_int_pow(S(2, "1 + t", "1"), 3)

    def test_coeff(self):
        assert series_coeff(S(3, "1", "t") ** 4, 0) == 1
        # (1 - t z)/(1 - z) = (1 - t z)(1 + z + z^2)
        s = S(2, "1", "-t") * series_int_pow(S(2, "1", "-1"), -1)
        assert series_coeff(s, 1) == P("1 - t")
        assert series_coeff(S(2, "1", "1", "1") * S(2, "1", "1", "1"), 2) == 3
        with pytest.raises(IndexError):
            series_coeff(s, 3)

    @settings(max_examples=40)
    @given(st.lists(small_polys, min_size=1, max_size=3), st.integers(0, 4), st.integers(0, 3))
    def test_power_times_inverse_power_is_one(self, tail, e, order):
        a = ZSeries(order, [ONE] + tail)
        assert series_int_pow(a, e) * series_int_pow(a, -e) == ZSeries.one(order)

    def test_monomial_helpers(self):
        assert Monomial(1, 2, 3).scaled(2) == (2, 4, 6)
        assert Monomial(1, 0, 0) * Monomial(0, 1, 1) == Monomial(1, 1, 1)
