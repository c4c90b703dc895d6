"""
Corpus schemas
"""

from typing import Any, Dict, List

from pydantic import Field

from app.schemas.audit import AuditRow
from app.schemas.common import AuditStatus, BaseSchema, Provenance
from app.schemas.session import SessionReport


class ExpectedValue(BaseSchema):
    value: Any
    provenance: Provenance


class CorpusEntry(BaseSchema):
    """A worked example: session text, expected values and printed claims that differ"""
    id: str
    title: str
    session: str
    expected: Dict[str, ExpectedValue]
    paper_claims: Dict[str, Any] = Field(default_factory=dict)


class CorpusRun(BaseSchema):
    timestamp: str = Field(..., description="Excluded from determinism comparisons")
    entries: List[SessionReport] = Field(default_factory=list)
    audit: List[AuditRow] = Field(default_factory=list)
    counts: Dict[str, int] = Field(default_factory=dict)

    @property
    def derived_mismatches(self) -> List[AuditRow]:
        return [row for row in self.audit if row.status == AuditStatus.MISMATCH]
