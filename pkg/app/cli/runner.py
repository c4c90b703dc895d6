"""
Execute a parsed session
"""

import logging
from typing import List, Optional

from app.config import settings
from app.models.ideal import Ideal
from app.models.quotient import IdealInQuotient
from app.models.ring import FieldSpec, MonomialOrder, PolyRing
from app.schemas.common import Outcome
from app.schemas.session import Session, SessionReport, Task, TaskKind
from app.services.cech import plain_report, truncated_formal_report
from app.services.invariants import corollary_rules, ideal_in_quotient, invariant_report, modeling_notes, quotient_ring
from app.services.parsing import parse_generators
from app.services.toric import toric_presentation, toric_report
from app.utils.exceptions import EmptyVarietyError, ToricInputError

logger = logging.getLogger(__name__)

NON_MONOMIAL_NOTE = "cech skipped: defining ideal and ideal must both be monomial"


def session_ring(session: Session) -> PolyRing:
    return PolyRing(tuple(session.variables), FieldSpec.parse(session.field),
                    MonomialOrder.parse(settings.DEFAULT_ORDER))


def _tasks(session: Session, kind: TaskKind) -> List[Task]:
    return [task for task in session.tasks if task.kind == kind]


class SessionRunner:
    """Runs sessions under one Cech cell budget"""

    def __init__(self, max_cells: Optional[int] = None):
        self.max_cells = max_cells

    def run(self, session: Session, name: Optional[str] = None) -> SessionReport:
        """Run every task of the session; toric tasks first since they extend the defining ideal"""
        ring = session_ring(session)
        defining = parse_generators(", ".join(session.defining), ring)
        report = SessionReport(
            session=name or session.describe(),
            assumptions=session.assumptions,
            modeling=modeling_notes(session.assumptions),
        )
        defining.extend(self._run_toric(session, ring, report))

        try:
            quotient = quotient_ring(ring, Ideal(ring, defining))
            a = ideal_in_quotient(quotient, parse_generators(", ".join(session.ideal), ring))
            invariants = invariant_report(a, session.assumptions)
        except EmptyVarietyError as exc:
            logger.info(f"{report.session}: {exc.message}")
            report.outcome = Outcome.EMPTY_VARIETY
            return report

        for key in type(invariants).model_fields:
            if key in SessionReport.model_fields:
                setattr(report, key, getattr(invariants, key))
        report.generator_count = len([g for g in a.generators if g])

        if _tasks(session, TaskKind.COROLLARIES):
            report.corollaries = corollary_rules(
                invariants,
                generator_count=report.generator_count,
                regular_asserted=session.assumptions.regular_asserted,
            )

        self._run_cech(session, a, report)
        return report

    def _run_toric(self, session: Session, ring: PolyRing, report: SessionReport) -> list:
        extra = []
        for task in _tasks(session, TaskKind.TORIC):
            if len(task.weights) != ring.ngens:
                raise ToricInputError(f"{len(task.weights)} weights given for {ring.ngens} ring variables")
            presentation_ring, presentation = toric_presentation(task.weights, ring.variables, ring.field)
            report.toric.append(toric_report(presentation_ring, presentation, task.weights))
            extra.extend(ring.convert(g, presentation_ring) for g in presentation.generators)
        return extra

    def _run_cech(self, session: Session, a: IdealInQuotient, report: SessionReport) -> None:
        ring = a.ambient
        for task in _tasks(session, TaskKind.CECH):
            if not (a.ring.defining.is_monomial() and Ideal(ring, a.generators).is_monomial()):
                report.cech_notes.append(NON_MONOMIAL_NOTE)
                continue
            box = tuple(task.box for _ in range(ring.ngens)) if task.box else None
            report.cech.append(plain_report(a, box, self.max_cells))
            if task.powers:
                lo, hi = task.powers
                report.cech.extend(truncated_formal_report(a, range(lo, hi + 1), box, self.max_cells))


def execute_session(session: Session, max_cells: Optional[int] = None, name: Optional[str] = None) -> SessionReport:
    return SessionRunner(max_cells).run(session, name)
