"""
Fields, orders, rings, arithmetic and the polynomial parser
"""

import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from app.models.ring import FieldSpec, MonomialOrder, OrderKind, PolyRing, render_polynomial
from app.services.arithmetic import ArithOp, poly_arith, power
from app.services.parsing import parse_generators, parse_polynomial
from app.utils.exceptions import (
    CharacteristicError,
    FieldSpecError,
    ParseError,
    RingMismatchError,
    UnknownVariableError,
)
from tests.strategies import exponent_vectors, poly, polynomials, ring_and_polys, ring_of, rings


class TestFieldSpec:
    def test_parse_rationals(self):
        assert FieldSpec.parse("Q") == FieldSpec.rationals()
        assert FieldSpec.parse("QQ").characteristic == 0

    def test_parse_prime_fields(self):
        assert FieldSpec.parse("F7") == FieldSpec.prime(7)
        assert FieldSpec.parse("GF5").label == "F5"

    @pytest.mark.parametrize("text", ["F4", "F1", "R", "F", "Z"])
    def test_rejects_bad_specs(self, text):
        with pytest.raises(FieldSpecError):
            FieldSpec.parse(text)


class TestPolyRing:
    def test_duplicate_variables_rejected(self):
        with pytest.raises(ValueError):
            PolyRing(("x", "x"))

    def test_needs_a_variable(self):
        with pytest.raises(ValueError):
            PolyRing(())

    def test_block_split_bounded(self):
        with pytest.raises(ValueError):
            PolyRing(("x", "y"), order=MonomialOrder.elimination(3))

    def test_label(self):
        assert str(ring_of("x,y", FieldSpec.prime(3))) == "F3[x,y]"

    def test_convert_matches_names(self, qxy, qxyz):
        f = poly(qxy, "x*y + y^2")
        assert qxyz.convert(f, qxy) == poly(qxyz, "x*y + y^2")

    def test_convert_refuses_missing_variable(self, qxy, qxyz):
        with pytest.raises(RingMismatchError):
            qxy.convert(poly(qxyz, "z"), qxyz)


class TestArithmetic:
    def test_cancellation(self, qxy):
        assert poly_arith(ArithOp.ADD, poly(qxy, "x + y"), poly(qxy, "-y")) == poly(qxy, "x")

    def test_difference_of_squares(self, qxy):
        product = poly_arith(ArithOp.MUL, poly(qxy, "x + y"), poly(qxy, "x - y"))
        assert product == poly(qxy, "x^2 - y^2")

    def test_cube_in_characteristic_three(self, f3xyz):
        assert power(poly(f3xyz, "x + y + z"), 3) == poly(f3xyz, "x^3 + y^3 + z^3")

    def test_neg_and_scalar(self, qxy):
        f = poly(qxy, "x - 2*y")
        assert poly_arith(ArithOp.NEG, f) == poly(qxy, "2*y - x")
        assert poly_arith(ArithOp.SCALAR_MUL, f, 3) == poly(qxy, "3*x - 6*y")
        assert poly_arith(ArithOp.SCALAR_MUL, f, poly(qxy, "1/2")) == poly(qxy, "1/2*x - y")

    def test_scalar_needs_constant(self, qxy):
        with pytest.raises(ValueError):
            poly_arith(ArithOp.SCALAR_MUL, poly(qxy, "x"), poly(qxy, "y"))

    def test_ring_mismatch(self, qxy, qxyz):
        with pytest.raises(RingMismatchError):
            poly_arith(ArithOp.ADD, poly(qxy, "x"), poly(qxyz, "x"))

    @given(ring_and_polys(count=3))
    @hyp_settings(max_examples=60, deadline=None)
    def test_ring_axioms(self, data):
        _, (f, g, h) = data
        add = lambda a, b: poly_arith(ArithOp.ADD, a, b)
        mul = lambda a, b: poly_arith(ArithOp.MUL, a, b)
        assert add(add(f, g), h) == add(f, add(g, h))
        assert mul(mul(f, g), h) == mul(f, mul(g, h))
        assert mul(f, add(g, h)) == add(mul(f, g), mul(f, h))
        assert not add(f, poly_arith(ArithOp.NEG, f))

    @given(ring_and_polys(count=1))
    @hyp_settings(max_examples=60, deadline=None)
    def test_terms_strictly_descending(self, data):
        ring, (f,) = data
        keys = [ring.order.key(m) for m in f.monoms()]
        assert all(a > b for a, b in zip(keys, keys[1:]))
        assert all(c for c in f.coeffs())


class TestMonomialOrders:
    @given(st.data())
    @hyp_settings(max_examples=100, deadline=None)
    def test_order_axioms(self, data):
        ring = data.draw(rings())
        n = ring.ngens
        a, b, c = (data.draw(exponent_vectors(n)) for _ in range(3))
        key = ring.order.key
        one = tuple([0] * n)
        if a != b:
            assert key(a) != key(b)
        shift = lambda m: tuple(x + y for x, y in zip(m, c))
        if key(a) < key(b):
            assert key(shift(a)) < key(shift(b))
        assert key(one) <= key(a)

    def test_grevlex_and_lex_differ(self, qxyz):
        lex_ring = qxyz.with_order(MonomialOrder(OrderKind.LEX))
        assert lex_ring.order.key((1, 0, 2)) > lex_ring.order.key((0, 3, 0))
        assert qxyz.order.key((0, 3, 0)) > qxyz.order.key((1, 0, 2))
        assert qxyz.order.key((0, 2, 0)) > qxyz.order.key((1, 0, 0))

    def test_block_elimination(self):
        order = MonomialOrder.elimination(1)
        # anything with the first variable beats everything without it
        assert order.key((1, 0, 0)) > order.key((0, 5, 5))
        assert order.key((0, 2, 0)) > order.key((0, 0, 1))


class TestParser:
    def test_reads_terms(self, qxyz):
        f = parse_polynomial("x*y - z^2", qxyz)
        assert dict(f) == {(1, 1, 0): 1, (0, 0, 2): -1}

    def test_cubic_over_f3(self, f3xyz):
        assert len(parse_polynomial("x^3+y^3+z^3", f3xyz)) == 3

    def test_rational_literals(self, qxy):
        f = parse_polynomial("1/2*x - 3/4", qxy)
        assert render_polynomial(f, qxy) == "1/2*x - 3/4"

    def test_whitespace_insignificant(self, qxy):
        assert parse_polynomial(" x *y+ 2 ", qxy) == parse_polynomial("x*y+2", qxy)

    def test_unknown_variable(self, qxy):
        with pytest.raises(UnknownVariableError) as exc_info:
            parse_polynomial("x + w", qxy)
        assert exc_info.value.position == 4

    def test_literal_invalid_in_characteristic(self):
        ring = ring_of("x", FieldSpec.prime(2))
        with pytest.raises(CharacteristicError):
            parse_polynomial("1/2*x", ring)

    @pytest.mark.parametrize("text", ["", "x + * y", "x y", "x^", "x ++ y", "x $ y", "1/0"])
    def test_syntax_errors(self, qxy, text):
        with pytest.raises(ParseError):
            parse_polynomial(text, qxy)

    def test_generator_errors_carry_columns(self, qxy):
        with pytest.raises(UnknownVariableError) as exc_info:
            parse_generators("x, w", qxy)
        assert (exc_info.value.line, exc_info.value.column) == (1, 4)

    def test_unicode_minus(self, qxy):
        assert parse_polynomial("x − y", qxy) == parse_polynomial("x - y", qxy)

    @given(st.data())
    @hyp_settings(max_examples=100, deadline=None)
    def test_parse_render_round_trip(self, data):
        ring = data.draw(rings())
        f = data.draw(polynomials(ring))
        assert parse_polynomial(render_polynomial(f, ring), ring) == f
