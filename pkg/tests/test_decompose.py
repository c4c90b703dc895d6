"""
Minimal primes, certificates and the monomial oracle
"""

from itertools import combinations

import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from app.config import settings
from app.models.ideal import Ideal
from app.models.primes import CertificateKind
from app.models.ring import FieldSpec, MonomialOrder
from app.services.decompose import (
    check_leaf,
    minimal_primes,
    minimal_variable_covers,
    monomial_minimal_primes_oracle,
    quadratic_form_rank,
    verify_certificate,
)
from app.services.groebner import contains, ideal_membership, krull_dimension, reduced_groebner_basis
from app.utils.exceptions import NonMonomialInputError, RingMismatchError
from tests.strategies import (
    generator_families,
    ideal_of,
    monomial_ideals,
    monomials_up_to,
    poly,
    rendered_set,
    ring_of,
    rings,
)


def prime_strings(result):
    return [component.rendered() for component in result.primes]


def check_result(ring, ideal, result):
    """Containment, incomparability, dimensions and certificates of a result"""
    for component in result.primes:
        assert all(ideal_membership(g, component.ideal) for g in ideal.nonzero_generators())
        assert component.dim_of_quotient == krull_dimension(ring, component.ideal)
        assert verify_certificate(component)
    for first, second in combinations(result.primes, 2):
        assert not contains(first.ideal, second.ideal)
        assert not contains(second.ideal, first.ideal)


class TestMinimalPrimes:
    def test_coordinate_axes(self, qxyz):
        result = minimal_primes(qxyz, ideal_of(qxyz, "x*y, x*z"))
        assert result.complete
        assert prime_strings(result) == ["(x)", "(y, z)"]
        assert [c.dim_of_quotient for c in result.primes] == [2, 1]

    def test_fermat_cubic_over_f7(self, f7xyz):
        result = minimal_primes(f7xyz, ideal_of(f7xyz, "x, y, x^3 + y^3 + z^3"))
        assert result.complete
        assert prime_strings(result) == ["(x, y, z)"]
        assert result.primes[0].certificate.kind == CertificateKind.MONOMIAL_COVER

    def test_frobenius_root_over_f3(self, f3xyz):
        result = minimal_primes(f3xyz, ideal_of(f3xyz, "x, x^3 + y^3 + z^3"))
        assert result.complete
        assert prime_strings(result) == ["(x, y + z)"]
        certificate = result.primes[0].certificate
        assert certificate.kind == CertificateKind.FROBENIUS_ROOT_REDUCED
        assert certificate.base == CertificateKind.VARIABLES_PLUS_MONIC_LINEAR
        check_result(f3xyz, ideal_of(f3xyz, "x, x^3 + y^3 + z^3"), result)

    def test_embedded_component_dropped(self, qxyz):
        result = minimal_primes(qxyz, ideal_of(qxyz, "x, x*z"))
        assert result.complete
        assert prime_strings(result) == ["(x)"]
        assert result.primes[0].certificate.kind == CertificateKind.GENERATED_BY_VARIABLES

    def test_unit_ideal_gives_empty_complete_result(self, qxy):
        result = minimal_primes(qxy, ideal_of(qxy, "x, x - 1"))
        assert result.complete
        assert result.primes == ()

    def test_monomial_content_split(self, qxyz):
        ideal = ideal_of(qxyz, "x*y - x*z^2")
        result = minimal_primes(qxyz, ideal)
        assert result.complete
        assert prime_strings(result) == ["(x)", "(z^2 - y)"]
        check_result(qxyz, ideal, result)

    def test_univariate_factor_split(self, qxy):
        ideal = ideal_of(qxy, "x^2 - 1, y")
        result = minimal_primes(qxy, ideal)
        assert result.complete
        assert prime_strings(result) == ["(x + 1, y)", "(x - 1, y)"]

    def test_univariate_split_depends_on_field(self):
        rational = ring_of("x,y")
        assert not minimal_primes(rational, ideal_of(rational, "x^2 + 1")).complete
        f5 = ring_of("x,y", FieldSpec.prime(5))
        result = minimal_primes(f5, ideal_of(f5, "x^2 + 1"))
        assert result.complete
        assert len(result.primes) == 2

    def test_repeated_factor(self, qxy):
        result = minimal_primes(qxy, ideal_of(qxy, "x^3 - 3*x^2 + 3*x - 1"))
        assert prime_strings(result) == ["(x - 1)"]

    def test_quadratic_rank_three_leaf(self, qxyz):
        result = minimal_primes(qxyz, ideal_of(qxyz, "x^2 + y^2 + z^2"))
        assert result.complete
        assert result.primes[0].certificate.kind == CertificateKind.VARIABLES_PLUS_QUADRATIC_RANK3
        assert result.primes[0].dim_of_quotient == 2

    def test_uncertifiable_leaf_is_residual(self, qxy):
        result = minimal_primes(qxy, ideal_of(qxy, "x^2 + y^2"))
        assert not result.complete
        assert result.primes == ()
        assert len(result.residuals) == 1

    def test_depth_guard(self, qxy, monkeypatch):
        monkeypatch.setattr(settings, "DECOMPOSE_MAX_DEPTH", -1)
        result = minimal_primes(qxy, ideal_of(qxy, "x*y"))
        assert not result.complete
        assert result.primes == ()

    def test_output_order_is_deterministic(self, qxyz):
        forward = minimal_primes(qxyz, ideal_of(qxyz, "x*y, x*z"))
        backward = minimal_primes(qxyz, ideal_of(qxyz, "x*z, y*x"))
        assert prime_strings(forward) == prime_strings(backward)

    def test_ring_mismatch(self, qxy, qxyz):
        with pytest.raises(RingMismatchError):
            minimal_primes(qxyz, ideal_of(qxy, "x"))


class TestMonomialOracle:
    def test_disconnected_support(self):
        ring = ring_of("x,y,u,v")
        primes = monomial_minimal_primes_oracle(ideal_of(ring, "x*u, x*v, y*u, y*v"))
        assert rendered_set(primes) == {"{x, y}", "{u, v}"}

    def test_principal_variable(self, qxy):
        assert rendered_set(monomial_minimal_primes_oracle(ideal_of(qxy, "x"))) == {"{x}"}

    def test_non_cohen_macaulay_example(self, qxyz):
        primes = monomial_minimal_primes_oracle(ideal_of(qxyz, "x*z, y*z"))
        assert rendered_set(primes) == {"{z}", "{x, y}"}

    def test_rejects_non_monomial(self, qxy):
        with pytest.raises(NonMonomialInputError):
            monomial_minimal_primes_oracle(ideal_of(qxy, "x + y"))

    def test_minimal_covers(self):
        covers = minimal_variable_covers([frozenset({0, 2}), frozenset({1, 2})])
        assert covers == [frozenset({0, 1}), frozenset({2})]

    @pytest.mark.parametrize("names,max_degree,squarefree", [
        ("x,y,z", 3, False),
        ("a,b,c,d", 1, True),
    ])
    def test_exhaustive_equivalence(self, names, max_degree, squarefree):
        # full family in three variables; in four, one squarefree generator per support
        ring = ring_of(names)
        n = ring.ngens
        if squarefree:
            monomials = [tuple(1 if i in subset else 0 for i in range(n))
                         for size in range(1, n + 1) for subset in combinations(range(n), size)]
        else:
            monomials = monomials_up_to(n, max_degree)
        for family in generator_families(monomials, 3):
            ideal = Ideal(ring, [ring.monomial(m) for m in family])
            result = minimal_primes(ring, ideal)
            assert result.complete
            assert rendered_set(c.ideal for c in result.primes) == rendered_set(
                monomial_minimal_primes_oracle(ideal)
            ), family
            assert all(verify_certificate(c) for c in result.primes)


class TestSplittingSoundness:
    @given(st.data())
    @hyp_settings(max_examples=60, deadline=None)
    def test_product_splits_into_factors(self, data):
        ring = data.draw(rings(min_vars=2, max_vars=4, order=MonomialOrder()))
        base = data.draw(monomial_ideals(ring, max_generators=2))
        g, h = (data.draw(monomial_ideals(ring, max_generators=1)).generators[0] for _ in range(2))

        combined = minimal_primes(ring, base.extended([g * h]))
        parts = [minimal_primes(ring, base.extended([g])), minimal_primes(ring, base.extended([h]))]
        candidates = [c.ideal for part in parts for c in part.primes]
        expected = [p for p in candidates if not any(contains(p, q) and not contains(q, p) for q in candidates)]

        assert rendered_set(c.ideal for c in combined.primes) == rendered_set(expected)
        check_result(ring, base.extended([g * h]), combined)

    @given(st.data())
    @hyp_settings(max_examples=40, deadline=None)
    def test_results_are_sound(self, data):
        ring = data.draw(rings(min_vars=2, max_vars=3, order=MonomialOrder()))
        ideal = data.draw(monomial_ideals(ring, max_generators=3))
        check_result(ring, ideal, minimal_primes(ring, ideal))


class TestCertificates:
    def test_quadratic_form_rank(self, qxyz):
        assert quadratic_form_rank(poly(qxyz, "x^2 + y^2 + z^2"), qxyz) == 3
        assert quadratic_form_rank(poly(qxyz, "x*y"), qxyz) == 2
        assert quadratic_form_rank(poly(qxyz, "x*y - z^2"), qxyz) == 3
        assert quadratic_form_rank(poly(qxyz, "x^2"), qxyz) == 1

    def test_rank_over_prime_field(self):
        ring = ring_of("x,y,z", FieldSpec.prime(3))
        # x^2 + y^2 + z^2 + 2xy + 2yz + 2xz = (x + y + z)^2
        f = poly(ring, "x^2 + y^2 + z^2 + 2*x*y + 2*y*z + 2*x*z")
        assert quadratic_form_rank(f, ring) == 1

    def test_not_a_quadratic_form(self, qxyz):
        assert quadratic_form_rank(poly(qxyz, "x^2 + y"), qxyz) is None
        assert quadratic_form_rank(qxyz.zero, qxyz) is None

    def test_disabled_in_characteristic_two(self):
        ring = ring_of("x,y,z", FieldSpec.prime(2))
        assert quadratic_form_rank(poly(ring, "x^2 + y*z"), ring) is None

    def test_check_leaf(self, qxyz):
        def leaf(text):
            return check_leaf(reduced_groebner_basis(ideal_of(qxyz, text)))

        assert leaf("x, y") == CertificateKind.GENERATED_BY_VARIABLES
        assert leaf("x, y - z^2") == CertificateKind.VARIABLES_PLUS_MONIC_LINEAR
        assert leaf("x*y - z^2") == CertificateKind.VARIABLES_PLUS_QUADRATIC_RANK3
        assert leaf("x^2 + y^2") is None
        assert leaf("x^2 - y*z, x*y") is None
