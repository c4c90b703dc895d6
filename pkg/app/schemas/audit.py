"""
Audit row schema
"""

from typing import Any, Optional

from app.schemas.common import AuditStatus, BaseSchema, Provenance


class AuditRow(BaseSchema):
    """Comparison of one observed value against a stored expectation"""
    entry_id: str
    key: str
    status: AuditStatus
    observed: Any = None
    expected: Any = None
    provenance: Optional[Provenance] = None
    paper: Any = None
