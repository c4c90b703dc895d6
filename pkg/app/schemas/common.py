"""
Common Pydantic schemas and base classes
"""

from enum import Enum

from pydantic import BaseModel, ConfigDict


class BaseSchema(BaseModel):
    """Base schema with common configuration"""
    model_config = ConfigDict(
        from_attributes=True,
        validate_assignment=True,
        use_enum_values=True,
        validate_default=True,
    )


# Common enums
class PredictionKind(str, Enum):
    VANISHING_ABOVE_BOUND = "vanishing_above_bound"
    NONVANISHING_EXPECTED_AT_FDIM = "nonvanishing_expected_at_fdim"
    INDETERMINATE = "indeterminate"


class RuleKind(str, Enum):
    SET_THEORETIC_COMPLETE_INTERSECTION = "set_theoretic_complete_intersection"
    PRIME_IDEAL = "prime_ideal"


class Outcome(str, Enum):
    OK = "ok"
    EMPTY_VARIETY = "empty_variety"


class Provenance(str, Enum):
    PAPER = "paper"
    DERIVED = "derived"


class AuditStatus(str, Enum):
    MATCH = "match"
    MISMATCH = "mismatch"
    PAPER_INCONSISTENCY = "paper-inconsistency"
