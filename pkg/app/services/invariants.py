"""
Quotient-ring bookkeeping, the invariant report and corollary rules
"""

import logging
from typing import Iterable, List, Optional

from app.models.ideal import Ideal
from app.models.primes import MinimalPrimesResult
from app.models.quotient import IdealInQuotient, QuotientRing
from app.models.ring import PolyRing, Polynomial
from app.schemas.common import PredictionKind, RuleKind
from app.schemas.invariants import (
    AssumptionFlags,
    CorollaryVerdict,
    InvariantReport,
    PredictionVerdict,
    PrimeEntry,
)
from app.services.decompose import minimal_primes
from app.services.groebner import contains, krull_dimension, reduced_groebner_basis
from app.utils.exceptions import EmptyVarietyError, InvariantViolationError

logger = logging.getLogger(__name__)

POWER_SERIES_NOTE = "power series modeled by polynomial ring"
FIELD_NOTE = "field modeled as Q"


def quotient_ring(ambient: PolyRing, defining: Optional[Ideal] = None) -> QuotientRing:
    """R = ambient/defining with d = dim R; the zero ideal when defining is omitted"""
    defining = defining if defining is not None else Ideal(ambient)
    d = krull_dimension(ambient, defining)
    if d is None:
        raise EmptyVarietyError("defining ideal contains 1; the ring is zero")
    return QuotientRing(ambient, defining, d)


def ideal_in_quotient(ring: QuotientRing, generators: Iterable[Polynomial]) -> IdealInQuotient:
    return IdealInQuotient(ring, tuple(generators))


def modeling_notes(assumptions: AssumptionFlags) -> List[str]:
    notes = [POWER_SERIES_NOTE]
    if assumptions.field_modeled_as_q:
        notes.append(FIELD_NOTE)
    return notes


def _predict(complete: bool, condition2: Optional[bool], fdim: int, bound: Optional[int],
             assumptions: AssumptionFlags) -> PredictionVerdict:
    if not complete or condition2 is None:
        return PredictionVerdict(kind=PredictionKind.INDETERMINATE, bound=bound)
    if not (assumptions.complete_asserted and assumptions.cohen_macaulay_asserted):
        return PredictionVerdict(kind=PredictionKind.INDETERMINATE, bound=bound)
    if condition2:
        return PredictionVerdict(kind=PredictionKind.VANISHING_ABOVE_BOUND, bound=bound)
    return PredictionVerdict(kind=PredictionKind.NONVANISHING_EXPECTED_AT_FDIM, bound=bound, witness_degree=fdim)


def _render_basis(ideal: Ideal) -> str:
    return "(" + ", ".join(reduced_groebner_basis(ideal).rendered()) + ")"


def _preimage_is_prime(preimage: Ideal, result: MinimalPrimesResult) -> bool:
    if not result.complete or len(result.primes) != 1:
        return False
    prime = result.primes[0].ideal
    return contains(preimage, prime) and contains(prime, preimage)


def invariant_report(a: IdealInQuotient, assumptions: Optional[AssumptionFlags] = None) -> InvariantReport:
    """Heights, Fdim, the vanishing bound and the equidimensionality verdict for a in R"""
    assumptions = assumptions or AssumptionFlags()
    ambient = a.ambient
    preimage = a.preimage
    d = a.ring.dim_r

    dim_quotient = krull_dimension(ambient, preimage)
    if dim_quotient is None:
        raise EmptyVarietyError()

    result = minimal_primes(ambient, preimage)
    primes = [
        PrimeEntry(
            gens=component.basis.rendered(),
            dim=component.dim_of_quotient,
            height=d - component.dim_of_quotient,
            certificate=component.certificate.kind.value,
            certificate_base=component.certificate.base.value if component.certificate.base else None,
        )
        for component in result.primes
    ]

    dims = [p.dim for p in primes]
    heights = [p.height for p in primes]
    small_height = min(heights) if heights else None
    big_height = max(heights) if heights else None
    bound = d - big_height if big_height is not None else None

    if result.complete:
        fdim = max(dims)
        if fdim != dim_quotient:
            raise InvariantViolationError(
                "formal dimension disagrees with the quotient dimension",
                details={"fdim": fdim, "dim_quotient": dim_quotient, "ideal": str(preimage)},
            )
        equidimensional = len(set(dims)) == 1
        condition2 = equidimensional and fdim == bound
    else:
        fdim = dim_quotient
        equidimensional = None
        condition2 = None

    report = InvariantReport(
        d=d,
        dim_quotient=dim_quotient,
        codim=d - dim_quotient,
        primes=primes,
        fdim=fdim,
        small_height=small_height,
        big_height=big_height,
        equidimensional=equidimensional,
        vanishing_bound=bound,
        condition2=condition2,
        prediction=_predict(result.complete, condition2, fdim, bound, assumptions),
        assumptions=assumptions,
        decomposition_complete=result.complete,
        residuals=[_render_basis(r) for r in result.residuals],
        preimage_is_prime=_preimage_is_prime(preimage, result),
        modeling=modeling_notes(assumptions),
    )
    logger.debug(f"Invariants of {a} in {a.ring}: d={d} fdim={fdim} bound={bound}")
    return report


def corollary_rules(report: InvariantReport, generator_count: Optional[int] = None, regular_asserted: bool = False,
                    ideal_is_prime: Optional[bool] = None) -> List[CorollaryVerdict]:
    """Rules that apply on top of the main criterion.

    The set-theoretic rule needs a regular ambient ring and as many nonzero
    generators of a as the codimension; it never fires without a count.
    The prime rule fires for a certified prime preimage and names its
    height as the single nonvanishing degree.
    """
    rules = []
    if regular_asserted and generator_count is not None and generator_count == report.codim:
        rules.append(CorollaryVerdict(
            rule=RuleKind.SET_THEORETIC_COMPLETE_INTERSECTION,
            vanishing_above=report.codim,
            theorem_bound=report.vanishing_bound,
        ))
    is_prime = report.preimage_is_prime if ideal_is_prime is None else ideal_is_prime
    if is_prime and report.primes:
        rules.append(CorollaryVerdict(
            rule=RuleKind.PRIME_IDEAL,
            nonvanishing_degree=report.primes[0].height,
            theorem_bound=report.vanishing_bound,
        ))
    return rules
