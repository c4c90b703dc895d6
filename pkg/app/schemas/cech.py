"""
Graded Cech report schemas
"""

from typing import List, Optional, Tuple

from pydantic import Field

from app.schemas.common import BaseSchema


class CechEntry(BaseSchema):
    i: int = Field(..., ge=0, description="Cohomological index")
    degree: List[int] = Field(..., description="Multidegree b")
    dim: int = Field(..., gt=0)


class CechReport(BaseSchema):
    """Nonzero cohomology dimensions over a degree box; absent entries are 0"""
    power: Optional[int] = Field(None, description="n of the truncation A/(J + a^n), None for A/J")
    generator_count: int = Field(..., ge=0, description="Cech generators s")
    box: List[Tuple[int, int]]
    cells: int
    dims: List[CechEntry] = Field(default_factory=list)
    per_i_totals: List[int] = Field(..., description="Totals over the box for i = 0..s")
    module_dimension: Optional[int] = None
    differentials_ok: bool = Field(..., description="d^(k+1) d^k = 0 in every degree")
    euler_ok: bool
    max_index_ok: bool = Field(..., description="No H^i above the number of radical generators")
    grothendieck_ok: bool
    evidence: Optional[str] = Field(None, description="Set on truncation reports, which are finite evidence only")

    def dim_at(self, i: int, degree) -> int:
        target = list(degree)
        for entry in self.dims:
            if entry.i == i and entry.degree == target:
                return entry.dim
        return 0

    def total(self, i: int) -> int:
        return self.per_i_totals[i] if 0 <= i < len(self.per_i_totals) else 0
