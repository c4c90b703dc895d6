"""
Invariant report, corollary and toric schemas
"""

from typing import List, Optional

from pydantic import Field

from app.schemas.common import BaseSchema, PredictionKind, RuleKind


class AssumptionFlags(BaseSchema):
    """User-asserted hypotheses; never verified"""
    complete_asserted: bool = Field(default=False, description="Ring asserted complete")
    cohen_macaulay_asserted: bool = Field(default=False, description="Ring asserted Cohen-Macaulay")
    field_modeled_as_q: bool = Field(default=False, description="Complex coefficients modeled by Q")
    regular_asserted: bool = Field(default=False, description="Ambient ring asserted regular")


class PrimeEntry(BaseSchema):
    gens: List[str] = Field(..., description="Reduced Groebner basis of the prime")
    dim: int = Field(..., ge=0, description="dim R/p")
    height: int = Field(..., ge=0, description="d - dim R/p")
    certificate: str
    certificate_base: Optional[str] = Field(None, description="Check passed after a Frobenius root")

    @property
    def rendered(self) -> str:
        return "(" + ", ".join(self.gens) + ")"


class PredictionVerdict(BaseSchema):
    kind: PredictionKind
    bound: Optional[int] = None
    witness_degree: Optional[int] = None


class InvariantReport(BaseSchema):
    """Dimension data of an ideal a in R = A/J"""
    d: int = Field(..., ge=0)
    dim_quotient: int = Field(..., ge=0, description="dim R/a")
    codim: int = Field(..., description="d - dim R/a")
    primes: List[PrimeEntry] = Field(default_factory=list)
    fdim: int = Field(..., ge=0)
    small_height: Optional[int] = None
    big_height: Optional[int] = None
    equidimensional: Optional[bool] = None
    vanishing_bound: Optional[int] = None
    condition2: Optional[bool] = None
    prediction: PredictionVerdict
    assumptions: AssumptionFlags
    decomposition_complete: bool
    residuals: List[str] = Field(default_factory=list)
    preimage_is_prime: bool = False
    modeling: List[str] = Field(default_factory=list)


class CorollaryVerdict(BaseSchema):
    rule: RuleKind
    vanishing_above: Optional[int] = Field(None, description="F^i = 0 for i above this degree")
    nonvanishing_degree: Optional[int] = Field(None, description="Only nonvanishing degree")
    theorem_bound: Optional[int] = Field(None, description="d - c shown alongside")


class ToricReport(BaseSchema):
    weights: List[List[int]]
    parameters: List[str]
    variables: List[str]
    generators: List[str]
    substitution_ok: bool
