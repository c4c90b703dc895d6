"""
Invariant reports, corollary rules and toric presentations
"""

import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from app.models.ideal import Ideal
from app.models.ring import FieldSpec, MonomialOrder
from app.schemas.common import PredictionKind, RuleKind
from app.schemas.invariants import AssumptionFlags
from app.services.groebner import ideal_membership, krull_dimension
from app.services.invariants import (
    FIELD_NOTE,
    POWER_SERIES_NOTE,
    corollary_rules,
    ideal_in_quotient,
    invariant_report,
    quotient_ring,
)
from app.services.parsing import parse_generators
from app.services.toric import (
    default_variable_names,
    lift_monomial,
    parameter_names,
    substitution_check,
    toric_presentation,
)
from app.utils.exceptions import EmptyVarietyError, ToricInputError
from tests.strategies import ideal_of, monomial_ideals, poly, ring_of, rings

CM = AssumptionFlags(complete_asserted=True, cohen_macaulay_asserted=True)


def report_for(ring, defining: str, ideal: str, assumptions=CM):
    quotient = quotient_ring(ring, ideal_of(ring, defining) if defining else None)
    return invariant_report(ideal_in_quotient(quotient, parse_generators(ideal, ring)), assumptions)


def prime_strings(report):
    return [p.rendered for p in report.primes]


class TestQuotientRing:
    def test_dimension_of_defining_quotient(self, qxyz):
        assert quotient_ring(qxyz, ideal_of(qxyz, "x*z")).dim_r == 2
        assert quotient_ring(qxyz).dim_r == 3

    def test_unit_defining_ideal(self, qxy):
        with pytest.raises(EmptyVarietyError):
            quotient_ring(qxy, ideal_of(qxy, "x, x - 1"))

    def test_preimage_contains_defining(self, qxyz):
        quotient = quotient_ring(qxyz, ideal_of(qxyz, "y*z"))
        a = ideal_in_quotient(quotient, parse_generators("x, y", qxyz))
        assert all(ideal_membership(g, a.preimage) for g in quotient.defining.generators)

    def test_unit_preimage(self, qxy):
        with pytest.raises(EmptyVarietyError):
            report_for(qxy, "x", "x - 1")


class TestInvariantReport:
    def test_polynomial_ring(self, qxy):
        report = report_for(qxy, "", "x")
        assert (report.d, report.fdim, report.big_height, report.vanishing_bound) == (2, 1, 1, 1)
        assert prime_strings(report) == ["(x)"]
        assert report.condition2 is True
        assert report.prediction.kind == PredictionKind.VANISHING_ABOVE_BOUND
        assert report.prediction.bound == 1

    def test_coordinate_axes(self, qxyz):
        report = report_for(qxyz, "", "x*y, x*z")
        assert report.d == 3
        assert prime_strings(report) == ["(x)", "(y, z)"]
        assert [p.dim for p in report.primes] == [2, 1]
        assert [p.height for p in report.primes] == [1, 2]
        assert (report.fdim, report.small_height, report.big_height, report.vanishing_bound) == (2, 1, 2, 1)
        assert report.equidimensional is False
        assert report.condition2 is False
        assert report.prediction.kind == PredictionKind.NONVANISHING_EXPECTED_AT_FDIM
        assert report.prediction.witness_degree == 2

    def test_maximal_ideal(self, qxyz):
        report = report_for(qxyz, "", "x, y, z")
        assert (report.fdim, report.vanishing_bound, report.codim) == (0, 0, 3)
        assert report.prediction.kind == PredictionKind.VANISHING_ABOVE_BOUND

    def test_macaulay_session(self, qxyz):
        report = report_for(qxyz, "y*z", "x, y")
        assert (report.d, report.fdim, report.codim, report.vanishing_bound) == (2, 1, 1, 1)
        assert prime_strings(report) == ["(x, y)"]

    def test_non_equidimensional_ring(self, qxyz):
        report = report_for(qxyz, "x*z", "x")
        assert prime_strings(report) == ["(x)"]
        assert (report.d, report.codim, report.big_height, report.vanishing_bound) == (2, 0, 0, 2)

    def test_fermat_cubic(self, f7xyz):
        report = report_for(f7xyz, "x^3 + y^3 + z^3", "x, y")
        assert (report.d, report.fdim, report.big_height, report.vanishing_bound) == (2, 0, 2, 0)

    def test_frobenius_leaf_reports_base(self, f3xyz):
        report = report_for(f3xyz, "x^3 + y^3 + z^3", "x")
        assert prime_strings(report) == ["(x, y + z)"]
        assert report.primes[0].certificate == "frobenius_root_reduced"
        assert report.primes[0].certificate_base == "variables_plus_monic_linear"

    def test_assumptions_required(self, qxy):
        report = report_for(qxy, "", "x", assumptions=AssumptionFlags(complete_asserted=True))
        assert report.prediction.kind == PredictionKind.INDETERMINATE
        assert report.prediction.bound == 1

    def test_incomplete_decomposition(self, qxy):
        report = report_for(qxy, "", "x^2 + y^2")
        assert report.decomposition_complete is False
        assert report.fdim == report.dim_quotient == 1
        assert report.condition2 is None
        assert report.equidimensional is None
        assert report.big_height is None
        assert report.prediction.kind == PredictionKind.INDETERMINATE
        assert report.residuals == ["(x^2 + y^2)"]

    def test_modeling_notes(self, qxy):
        assert report_for(qxy, "", "x").modeling == [POWER_SERIES_NOTE]
        flagged = report_for(qxy, "", "x", AssumptionFlags(field_modeled_as_q=True))
        assert flagged.modeling == [POWER_SERIES_NOTE, FIELD_NOTE]

    def test_scaling_invariance(self, qxyz):
        plain = report_for(qxyz, "", "x*y, x*z")
        scaled = report_for(qxyz, "", "3*x*y, -1/2*x*z")
        assert plain.model_dump() == scaled.model_dump()

    def test_redundant_generator_invariance(self, qxyz):
        plain = report_for(qxyz, "x*z", "x")
        padded = report_for(qxyz, "x*z", "x, x*y + x^2, x*z")
        assert plain.model_dump() == padded.model_dump()

    def test_redundant_multiple_leaves_report_unchanged(self, qxyz):
        plain = report_for(qxyz, "", "x")
        padded = report_for(qxyz, "", "x, x*y")
        assert plain.model_dump() == padded.model_dump()
        assert "generator_count" not in plain.model_dump()

    @given(st.data())
    @hyp_settings(max_examples=50, deadline=None)
    def test_fdim_matches_direct_dimension(self, data):
        ring = data.draw(rings(min_vars=2, max_vars=4, order=MonomialOrder()))
        defining = data.draw(monomial_ideals(ring, max_generators=2))
        a = data.draw(monomial_ideals(ring, max_generators=3))
        quotient = quotient_ring(ring, defining)
        report = invariant_report(ideal_in_quotient(quotient, a.generators), CM)
        assert report.fdim == report.dim_quotient
        assert report.fdim <= report.d
        assert report.codim == report.d - report.fdim
        assert report.small_height <= report.big_height
        assert report.vanishing_bound <= report.d
        if report.condition2:
            assert report.fdim == report.vanishing_bound
            assert len({p.height for p in report.primes}) == 1

    @given(st.data())
    @hyp_settings(max_examples=30, deadline=None)
    def test_random_scaling_and_padding(self, data):
        ring = data.draw(rings(min_vars=2, max_vars=3, field=FieldSpec.rationals(), order=MonomialOrder()))
        a = data.draw(monomial_ideals(ring, max_generators=3))
        quotient = quotient_ring(ring)
        base = invariant_report(ideal_in_quotient(quotient, a.generators), CM)
        factor = ring.field.domain.convert(data.draw(st.integers(1, 9)))
        scaled = [g * factor for g in a.generators]
        padded = list(a.generators) + [a.generators[0] * ring.gens[-1]]
        for generators in (scaled, padded):
            other = invariant_report(ideal_in_quotient(quotient, generators), CM)
            assert base.model_dump() == other.model_dump()


class TestCorollaryRules:
    def test_set_theoretic_complete_intersection(self):
        ring = ring_of("x1,x2,x3,x4")
        report = report_for(ring, "", "x1, x2")
        rules = corollary_rules(report, generator_count=2, regular_asserted=True)
        rule = next(r for r in rules if r.rule == RuleKind.SET_THEORETIC_COMPLETE_INTERSECTION)
        assert rule.vanishing_above == 2
        assert rule.theorem_bound == 2

    def test_prime_ideal(self, qxyz):
        report = report_for(qxyz, "", "x, y")
        assert report.preimage_is_prime
        rules = corollary_rules(report)
        assert [r.rule for r in rules] == [RuleKind.PRIME_IDEAL]
        assert rules[0].nonvanishing_degree == 2
        assert rules[0].theorem_bound == 1

    def test_nothing_applies(self, qxyz):
        report = report_for(qxyz, "", "x*y, x*z")
        assert not report.preimage_is_prime
        assert corollary_rules(report) == []
        assert corollary_rules(report, regular_asserted=False, ideal_is_prime=False) == []

    def test_generator_count_must_match_codim(self, qxyz):
        report = report_for(qxyz, "", "x, x*y")
        assert report.codim == 1
        rules = corollary_rules(report, generator_count=2, regular_asserted=True, ideal_is_prime=False)
        assert rules == []

    def test_set_theoretic_rule_needs_a_count(self):
        report = report_for(ring_of("x1,x2,x3,x4"), "", "x1, x2")
        rules = corollary_rules(report, regular_asserted=True, ideal_is_prime=False)
        assert rules == []


class TestToric:
    WEIGHTS = [(4, 0), (3, 1), (1, 3), (0, 4)]

    def test_quartic_presentation(self):
        ring, ideal = toric_presentation(self.WEIGHTS)
        assert ring.variables == ("a", "b", "c", "d")
        for binomial in ("b*c - a*d", "b^3 - a^2*c", "c^3 - b*d^2"):
            assert ideal_membership(poly(ring, binomial), ideal)
        assert krull_dimension(ring, ideal) == 2
        assert substitution_check(ring, ideal, self.WEIGHTS)

    def test_polynomial_ring_has_zero_presentation(self):
        ring, ideal = toric_presentation([(1, 0), (0, 1)])
        assert not ideal.nonzero_generators()
        assert krull_dimension(ring, ideal) == 2

    def test_numerical_invariant_through_presentation(self):
        ring, ideal = toric_presentation(self.WEIGHTS)
        lifted = [lift_monomial(e, self.WEIGHTS) for e in [(4, 0), (3, 1)]]
        assert lifted == [(1, 0, 0, 0), (0, 1, 0, 0)]
        a = ideal_in_quotient(quotient_ring(ring, ideal), [ring.monomial(e) for e in lifted])
        report = invariant_report(a)
        assert (report.d, report.fdim, report.vanishing_bound) == (2, 1, 1)

    def test_lift_outside_semigroup(self):
        assert lift_monomial((1, 0), self.WEIGHTS) is None
        assert lift_monomial((2, 2), self.WEIGHTS) is None
        assert lift_monomial((4, 4), self.WEIGHTS) is not None

    def test_substitution_check_detects_wrong_generator(self):
        ring, _ = toric_presentation(self.WEIGHTS)
        wrong = Ideal(ring, [poly(ring, "a*d - b^2")])
        assert not substitution_check(ring, wrong, self.WEIGHTS)

    def test_named_variables(self):
        ring, ideal = toric_presentation([(2,), (3,)], variables=["u", "v"])
        assert ring.variables == ("u", "v")
        assert ideal.rendered() == ["u^3 - v^2"]

    @pytest.mark.parametrize("weights", [[], [(1, 0), (1,)], [(1, -1)], [(0, 0)], [()]])
    def test_bad_weights(self, weights):
        with pytest.raises(ToricInputError):
            toric_presentation(weights)

    def test_names_must_not_clash(self):
        with pytest.raises(ToricInputError):
            toric_presentation([(1, 0), (0, 1)], variables=["s", "x"])

    def test_name_helpers(self):
        assert parameter_names(1) == ["s"]
        assert parameter_names(3) == ["s1", "s2", "s3"]
        assert default_variable_names(3) == ["a", "b", "c"]
        assert "s" not in default_variable_names(24)
