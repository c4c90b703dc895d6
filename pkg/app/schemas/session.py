"""
Session and session report schemas
"""

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import Field, model_validator

from app.schemas.audit import AuditRow
from app.schemas.cech import CechReport
from app.schemas.common import BaseSchema, Outcome
from app.schemas.invariants import (
    AssumptionFlags,
    CorollaryVerdict,
    PredictionVerdict,
    PrimeEntry,
    ToricReport,
)


class TaskKind(str, Enum):
    INVARIANTS = "invariants"
    COROLLARIES = "corollaries"
    CECH = "cech"
    TORIC = "toric"


class Task(BaseSchema):
    kind: TaskKind
    box: Optional[Tuple[int, int]] = Field(None, description="Degree interval used for every variable")
    powers: Optional[Tuple[int, int]] = Field(None, description="Truncation exponents n, inclusive")
    weights: Optional[List[List[int]]] = None

    @model_validator(mode="after")
    def check_ranges(self):
        if self.box is not None and self.box[0] > self.box[1]:
            raise ValueError(f"empty box {self.box[0]}..{self.box[1]}")
        if self.powers is not None and not 1 <= self.powers[0] <= self.powers[1]:
            raise ValueError(f"powers must satisfy 1 <= a <= b, got {self.powers[0]}..{self.powers[1]}")
        return self


class Session(BaseSchema):
    """One ring, one ideal, assumptions and tasks; polynomials kept in rendered form"""
    ring_name: str
    field: str
    variables: List[str]
    defining: List[str] = Field(default_factory=list)
    ideal_name: str
    ideal: List[str] = Field(default_factory=list)
    assumptions: AssumptionFlags = Field(default_factory=AssumptionFlags)
    tasks: List[Task] = Field(default_factory=list)

    def ring_label(self) -> str:
        label = f"{self.field}[{','.join(self.variables)}]"
        if self.defining:
            label += "/(" + ", ".join(self.defining) + ")"
        return label

    def describe(self) -> str:
        return f"{self.ring_name} = {self.ring_label()}; {self.ideal_name} = (" + ", ".join(self.ideal) + ")"


class SessionReport(BaseSchema):
    """Flattened report of one session run; JSON output shape"""
    session: str
    outcome: Outcome = Outcome.OK
    d: Optional[int] = None
    dim_quotient: Optional[int] = None
    codim: Optional[int] = None
    generator_count: Optional[int] = None
    primes: List[PrimeEntry] = Field(default_factory=list)
    fdim: Optional[int] = None
    small_height: Optional[int] = None
    big_height: Optional[int] = None
    equidimensional: Optional[bool] = None
    vanishing_bound: Optional[int] = None
    condition2: Optional[bool] = None
    prediction: Optional[PredictionVerdict] = None
    assumptions: AssumptionFlags = Field(default_factory=AssumptionFlags)
    decomposition_complete: Optional[bool] = None
    residuals: List[str] = Field(default_factory=list)
    preimage_is_prime: Optional[bool] = None
    modeling: List[str] = Field(default_factory=list)
    corollaries: List[CorollaryVerdict] = Field(default_factory=list)
    toric: List[ToricReport] = Field(default_factory=list)
    cech: List[CechReport] = Field(default_factory=list)
    cech_notes: List[str] = Field(default_factory=list)
    audit: List[AuditRow] = Field(default_factory=list)
