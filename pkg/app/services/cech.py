"""
Multigraded Cech cohomology of monomial quotients over a degree box

Every localization (A/J)_m of a monomial quotient at a monomial m is at
most one-dimensional in each multidegree, so the Cech complex in a fixed
degree is a complex of 0/1-dimensional pieces with signed identity maps.
"""

import logging
import time
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import pandas as pd
from sympy.polys.matrices import DomainMatrix

from app.config import settings
from app.models.ideal import Ideal
from app.models.quotient import IdealInQuotient
from app.models.ring import PolyRing, is_monomial, support
from app.schemas.cech import CechEntry, CechReport
from app.services.groebner import krull_dimension
from app.services.linalg import composes_to_zero, domain_matrix, kernel_dimension, matrix_rank
from app.utils.exceptions import BoxTooLargeError, NonMonomialInputError
from app.utils.logging import performance_logger

logger = logging.getLogger(__name__)

Box = Tuple[Tuple[int, int], ...]

EVIDENCE_LABEL = "finite evidence only"


@dataclass(frozen=True, eq=False)
class GradedCechInput:
    """Module A/J, Cech generators m_1..m_s of a, and a per-variable degree box"""
    ambient: PolyRing
    module_ideal: Ideal
    cech_ideal: Ideal
    box: Box

    def __post_init__(self):
        object.__setattr__(self, "box", tuple((int(lo), int(hi)) for lo, hi in self.box))
        _require_monomial(self.module_ideal, "module ideal generator")
        _require_monomial(self.cech_ideal, "Cech ideal generator")
        if len(self.box) != self.ambient.ngens:
            raise ValueError(f"box has {len(self.box)} intervals for {self.ambient.ngens} variables")
        for lo, hi in self.box:
            if lo > hi:
                raise ValueError(f"empty box interval [{lo}, {hi}]")

    @property
    def cech_exponents(self) -> List[Tuple[int, ...]]:
        return [g.LM for g in self.cech_ideal.nonzero_generators()]

    @property
    def module_exponents(self) -> List[Tuple[int, ...]]:
        return [g.LM for g in self.module_ideal.nonzero_generators()]

    @property
    def cells(self) -> int:
        count = 1
        for lo, hi in self.box:
            count *= hi - lo + 1
        return count


def _require_monomial(ideal: Ideal, what: str) -> None:
    for g in ideal.nonzero_generators():
        if not is_monomial(g):
            raise NonMonomialInputError(what, str(g))


def _inverted(localizing_set: Iterable[int], cech_exponents: Sequence[Tuple[int, ...]]) -> FrozenSet[int]:
    inverted = set()
    for j in localizing_set:
        inverted |= support(cech_exponents[j])
    return frozenset(inverted)


def _piece(inverted: FrozenSet[int], b: Sequence[int], module_exponents: Sequence[Tuple[int, ...]]) -> int:
    outside = [i for i in range(len(b)) if i not in inverted]
    if any(b[i] < 0 for i in outside):
        return 0
    for g in module_exponents:
        if all(g[i] <= b[i] for i in outside):
            return 0
    return 1


def graded_piece_basis(localizing_set: Iterable[int], b: Sequence[int], data: GradedCechInput) -> int:
    """Dimension (0 or 1) of (A/J) localized at prod m_j, j in localizing_set, in degree b.

    Generator indices are 0-based.
    """
    inverted = _inverted(localizing_set, data.cech_exponents)
    return _piece(inverted, b, data.module_exponents)


def _sign(localizing_set: Tuple[int, ...], j: int) -> int:
    return -1 if sum(1 for s in localizing_set if s < j) % 2 else 1


def _differential(source: List[Tuple[int, ...]], target: List[Tuple[int, ...]],
                  data: GradedCechInput) -> Optional[DomainMatrix]:
    """Matrix of C^k -> C^(k+1) in one degree; rows are targets, columns sources"""
    columns = {S: c for c, S in enumerate(source)}
    rows = []
    for T in target:
        row = [0] * len(source)
        for j in T:
            S = tuple(s for s in T if s != j)
            if S in columns:
                row[columns[S]] = _sign(S, j)
        rows.append(row)
    return domain_matrix(rows, len(source), data.ambient.field)


def minimal_support_count(exponents: Sequence[Tuple[int, ...]]) -> int:
    """Generators of the radical: supports of the exponents minimal under inclusion"""
    supports = {frozenset(support(e)) for e in exponents}
    return sum(1 for S in supports if not any(other < S for other in supports))


def cech_cohomology_box(data: GradedCechInput, max_cells: Optional[int] = None,
                        power: Optional[int] = None) -> CechReport:
    """Cohomology of the Cech complex of A/J on m_1..m_s in every degree of the box"""
    budget = max_cells or settings.MAX_CELLS
    cells = data.cells
    if cells > budget:
        raise BoxTooLargeError(cells, budget)

    start = time.perf_counter()
    exponents = data.cech_exponents
    module_exponents = data.module_exponents
    s = len(exponents)
    subsets = [list(combinations(range(s), k)) for k in range(s + 1)]
    inverted = {S: _inverted(S, exponents) for level in subsets for S in level}

    entries: List[CechEntry] = []
    totals = [0] * (s + 1)
    differentials_ok = True
    euler_ok = True
    for b in product(*(range(lo, hi + 1) for lo, hi in data.box)):
        alive = [[S for S in level if _piece(inverted[S], b, module_exponents)] for level in subsets]
        chain = [len(level) for level in alive]
        if not any(chain):
            continue
        maps = [_differential(alive[k], alive[k + 1], data) for k in range(s)] + [None]
        if not all(composes_to_zero(maps[k], maps[k + 1]) for k in range(s)):
            differentials_ok = False
            logger.warning(f"Cech differentials do not compose to zero in degree {b}")
        kernels = [kernel_dimension(maps[k], chain[k]) for k in range(s + 1)]
        images = [0] + [matrix_rank(maps[k]) for k in range(s)]
        cohomology = [kernels[k] - images[k] for k in range(s + 1)]
        for k, h in enumerate(cohomology):
            if h > 0:
                entries.append(CechEntry(i=k, degree=list(b), dim=h))
                totals[k] += h
        chain_euler = sum((-1) ** k * c for k, c in enumerate(chain))
        cohomology_euler = sum((-1) ** k * h for k, h in enumerate(cohomology))
        euler_ok = euler_ok and chain_euler == cohomology_euler and min(cohomology) >= 0

    module_dimension = krull_dimension(data.ambient, data.module_ideal)
    top = module_dimension if module_dimension is not None else -1
    radical_generators = minimal_support_count(exponents)
    report = CechReport(
        power=power,
        generator_count=s,
        box=list(data.box),
        cells=cells,
        dims=sorted(entries, key=lambda e: (e.i, e.degree)),
        per_i_totals=totals,
        module_dimension=module_dimension,
        differentials_ok=differentials_ok,
        euler_ok=euler_ok and differentials_ok,
        max_index_ok=all(e.i <= radical_generators for e in entries),
        grothendieck_ok=all(total == 0 for i, total in enumerate(totals) if i > top),
        evidence=EVIDENCE_LABEL if power is not None else None,
    )
    performance_logger.log_computation("cech", time.perf_counter() - start, cells)
    return report


def ideal_power(ideal: Ideal, n: int) -> Ideal:
    """All n-fold products of the generators"""
    gens = ideal.nonzero_generators()
    if n == 0:
        return Ideal(ideal.ring, [ideal.ring.one])
    products = []
    seen = set()
    for combo in combinations_with_replacement(range(len(gens)), n):
        f = ideal.ring.one
        for index in combo:
            f = f * gens[index]
        if f.LM not in seen:
            seen.add(f.LM)
            products.append(f)
    return Ideal(ideal.ring, products)


def default_box(a: IdealInQuotient, powers: Sequence[int] = ()) -> Box:
    """Symmetric box of radius CECH_DEGREE_BOUND + max power * max generator degree"""
    degrees = [sum(g.LM) for g in a.generators if g]
    radius = settings.CECH_DEGREE_BOUND + max(powers, default=0) * max(degrees, default=0)
    return tuple((-radius, radius) for _ in range(a.ambient.ngens))


def plain_report(a: IdealInQuotient, box: Optional[Box] = None, max_cells: Optional[int] = None) -> CechReport:
    """H^i_a(A/J) on the box"""
    box = box or default_box(a)
    data = GradedCechInput(a.ambient, a.ring.defining, Ideal(a.ambient, a.generators), box)
    return cech_cohomology_box(data, max_cells)


def truncated_formal_report(a: IdealInQuotient, powers: Iterable[int], box: Optional[Box] = None,
                            max_cells: Optional[int] = None) -> List[CechReport]:
    """One report per n for the truncations H^i_a(A/(J + a^n))"""
    powers = list(powers)
    cech_ideal = Ideal(a.ambient, a.generators)
    _require_monomial(a.ring.defining, "module ideal generator")
    _require_monomial(cech_ideal, "Cech ideal generator")
    box = box or default_box(a, powers)
    reports = []
    for n in powers:
        module_ideal = a.ring.defining + ideal_power(cech_ideal, n)
        data = GradedCechInput(a.ambient, module_ideal, cech_ideal, box)
        reports.append(cech_cohomology_box(data, max_cells, power=n))
        logger.debug(f"Truncation n={n}: totals {reports[-1].per_i_totals}")
    return reports


def stabilization_table(reports: Sequence[CechReport]) -> pd.DataFrame:
    """Per-i totals across n; finite evidence, never a limit"""
    rows: Dict[int, Dict[str, int]] = {}
    for report in reports:
        if report.power is None:
            continue
        rows[report.power] = {f"H^{i}": total for i, total in enumerate(report.per_i_totals)}
    table = pd.DataFrame.from_dict(rows, orient="index").fillna(0).astype(int).sort_index()
    table.index.name = "n"
    table.attrs["label"] = EVIDENCE_LABEL
    return table
