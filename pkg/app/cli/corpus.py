"""
Built-in corpus of worked examples and the consistency audit

Expected values carry their provenance. Entries whose printed values
cannot be reproduced store the derived values as expectations and keep the
printed ones under ``paper_claims``; those differences are audit rows, never
failures.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional, Tuple

from app.cli.runner import execute_session
from app.cli.session import parse_session
from app.config import settings
from app.schemas.audit import AuditRow
from app.schemas.common import AuditStatus, Outcome, Provenance, RuleKind
from app.schemas.corpus import CorpusEntry, CorpusRun, ExpectedValue
from app.schemas.session import SessionReport
from app.utils.logging import audit_logger

logger = logging.getLogger(__name__)


def _values(provenance: Provenance, **values: Any) -> Dict[str, ExpectedValue]:
    return {key: ExpectedValue(value=value, provenance=provenance) for key, value in values.items()}


def paper(**values: Any) -> Dict[str, ExpectedValue]:
    return _values(Provenance.PAPER, **values)


def derived(**values: Any) -> Dict[str, ExpectedValue]:
    return _values(Provenance.DERIVED, **values)


VANISHING = "vanishing_above_bound"
NONVANISHING = "nonvanishing_expected_at_fdim"
INDETERMINATE = "indeterminate"

CORPUS: List[CorpusEntry] = [
    CorpusEntry(
        id="ex:poly",
        title="Polynomial ring",
        session="ring R = Q[x,y]; ideal a = (x); assume complete; assume cm;"
                " task invariants; task cech box=3 powers=1..4;",
        expected=paper(d=2, codim=1, fdim=1, big_height=1, vanishing_bound=1, primes=["(x)"],
                       prediction=VANISHING, truncation_higher_totals=0),
    ),
    CorpusEntry(
        id="ex:non-equi",
        title="Non-equidimensional ideal",
        session="ring R = Q[x,y,z] / (x*z); ideal a = (x); assume complete; assume cm;"
                " task invariants; task cech box=2 powers=1..3;",
        expected=derived(d=2, codim=0, primes=["(x)"], prime_dims=[2], big_height=0, fdim=2,
                         vanishing_bound=2, condition2=True, prediction=VANISHING,
                         h2_truncations_vanish=True),
        paper_claims={
            "primes": ["(x)", "(x, z)"], "prime_dims": [2, 1], "big_height": 1,
            "vanishing_bound": 1, "condition2": False, "prediction": NONVANISHING,
            "h2_truncations_vanish": False,
        },
    ),
    CorpusEntry(
        id="ex:reg-seq",
        title="Regular sequence",
        session="ring R = Q[x1,x2,x3,x4]; ideal a = (x1,x2); assume complete; assume cm; assume regular;"
                " task invariants; task corollaries; task cech box=2 powers=1..2;",
        expected={
            **paper(d=4, codim=2, fdim=2, vanishing_bound=2, primes=["(x1, x2)"],
                    prediction=VANISHING, set_theoretic_vanishing_above=2),
            **derived(truncation_higher_totals=0),
        },
    ),
    CorpusEntry(
        id="ex:prime",
        title="Prime ideal",
        session="ring R = Q[x,y,z]; ideal a = (x,y); assume complete; assume cm; assume regular;"
                " task invariants; task corollaries;",
        expected=paper(d=3, codim=2, fdim=1, vanishing_bound=1, primes=["(x, y)"],
                       prediction=VANISHING, prime_rule_degree=2),
    ),
    CorpusEntry(
        id="ex:nonred",
        title="Non-reduced ideal",
        session="ring R = Q[x,y] / (x^2); ideal a = (x); task invariants;",
        expected=derived(d=1, codim=0, primes=["(x)"], prime_dims=[1], big_height=0, fdim=1,
                         vanishing_bound=1),
        paper_claims={"prime_dims": [0], "big_height": 1, "fdim": 0, "vanishing_bound": 0},
    ),
    CorpusEntry(
        id="ex:nonCM",
        title="Non-Cohen-Macaulay ring",
        session="ring R = Q[x,y,z] / (x*z, y*z); ideal a = (z); assume complete; task invariants;",
        expected=derived(d=2, codim=0, primes=["(z)"], prime_dims=[2], big_height=0, fdim=2,
                         vanishing_bound=2, prediction=INDETERMINATE),
        paper_claims={
            "primes": ["(x, z)", "(y, z)"], "prime_dims": [1, 1], "big_height": 1, "fdim": 1,
            "vanishing_bound": 1,
        },
    ),
    CorpusEntry(
        id="ex:fpure",
        title="F-pure ring",
        session="ring R = F7[x,y,z] / (x^3+y^3+z^3); ideal a = (x,y); assume complete; assume cm;"
                " task invariants;",
        expected=paper(d=2, fdim=0, big_height=2, vanishing_bound=0, primes=["(x, y, z)"],
                       prediction=VANISHING),
    ),
    CorpusEntry(
        id="ex:axes",
        title="Coordinate axes",
        session="ring R = Q[x,y,z]; ideal a = (x*y, x*z); assume complete; assume cm; assume field_q;"
                " task invariants; task cech box=1;",
        expected={
            **paper(d=3, primes=["(x)", "(y, z)"], prime_dims=[2, 1], fdim=2, small_height=1,
                    big_height=2, vanishing_bound=1, condition2=False, prediction=NONVANISHING,
                    witness_degree=2),
            **derived(h2_at_negative_unit=1),
        },
    ),
    CorpusEntry(
        id="ex:curve",
        title="Singular curve",
        session="ring R = Q[x,y,z] / (x*y - z^2); ideal a = (x,z); assume field_q; task invariants;",
        expected=paper(d=2, codim=1, fdim=1, vanishing_bound=1, primes=["(x, z)"]),
    ),
    CorpusEntry(
        id="ex:m2",
        title="Macaulay2 computation",
        session="ring R = Q[x,y,z] / (y*z); ideal a = (x,y); assume complete; assume cm; task invariants;",
        expected=derived(d=2, codim=1, fdim=1, vanishing_bound=1, primes=["(x, y)"]),
        paper_claims={"codim": 2, "vanishing_bound": 0},
    ),
    CorpusEntry(
        id="ex:num",
        title="Numerical invariant",
        session="ring R = Q[a,b,c,d]; ideal I = (a,b);"
                " task toric weights=(4,0),(3,1),(1,3),(0,4); task invariants;",
        expected={
            **paper(d=2, fdim=1, vanishing_bound=1),
            **derived(primes=["(a, b, c)"], toric_substitution_ok=True),
        },
    ),
    CorpusEntry(
        id="ex:discon",
        title="Disconnected support",
        session="ring R = Q[x,y,u,v] / (x*u, x*v, y*u, y*v); ideal a = (x,y); assume complete; assume field_q;"
                " task invariants;",
        expected=derived(d=2, primes=["(x, y)"], prime_dims=[2], big_height=0, fdim=2,
                         vanishing_bound=2),
        paper_claims={"primes": ["(u, v)", "(x, y)"], "big_height": 1, "vanishing_bound": 1},
    ),
    CorpusEntry(
        id="ex:finj",
        title="F-injective ring",
        session="ring R = F3[x,y,z] / (x^3+y^3+z^3); ideal a = (x); assume complete; assume cm;"
                " task invariants;",
        expected=paper(d=2, fdim=1, vanishing_bound=1, primes=["(x, y + z)"]),
    ),
    CorpusEntry(
        id="ex:dual",
        title="Grothendieck duality",
        session="ring R = Q[x,y,z]; ideal a = (x,y,z); assume complete; assume cm; task invariants;",
        expected=paper(d=3, codim=3, fdim=0, vanishing_bound=0, prediction=VANISHING),
    ),
]


def _rule(report: SessionReport, rule: RuleKind, attribute: str) -> Optional[int]:
    for verdict in report.corollaries:
        if verdict.rule == rule:
            return getattr(verdict, attribute)
    return None


def observed_values(report: SessionReport) -> Dict[str, Any]:
    """Flat, JSON-native view of a report used by the audit"""
    values: Dict[str, Any] = {"outcome": report.outcome}
    if report.outcome == Outcome.EMPTY_VARIETY:
        return values
    ordered = sorted(report.primes, key=lambda p: p.rendered)
    values.update(
        d=report.d,
        dim_quotient=report.dim_quotient,
        codim=report.codim,
        fdim=report.fdim,
        small_height=report.small_height,
        big_height=report.big_height,
        vanishing_bound=report.vanishing_bound,
        equidimensional=report.equidimensional,
        condition2=report.condition2,
        primes=[p.rendered for p in ordered],
        prime_dims=[p.dim for p in ordered],
        heights=[p.height for p in ordered],
        prediction=report.prediction.kind if report.prediction else None,
        witness_degree=report.prediction.witness_degree if report.prediction else None,
        prime_rule_degree=_rule(report, RuleKind.PRIME_IDEAL, "nonvanishing_degree"),
        set_theoretic_vanishing_above=_rule(report, RuleKind.SET_THEORETIC_COMPLETE_INTERSECTION,
                                            "vanishing_above"),
    )
    if report.toric:
        values["toric_substitution_ok"] = all(t.substitution_ok for t in report.toric)
    truncations = [c for c in report.cech if c.power is not None]
    plain = [c for c in report.cech if c.power is None]
    if truncations:
        values["truncation_higher_totals"] = sum(sum(c.per_i_totals[1:]) for c in truncations)
        values["h2_truncations_vanish"] = all(c.total(2) == 0 for c in truncations)
    if plain and report.d is not None:
        values["h2_at_negative_unit"] = plain[0].dim_at(2, [-1] * len(plain[0].box))
    return values


def audit_entry(entry: CorpusEntry, report: SessionReport) -> List[AuditRow]:
    observed = observed_values(report)
    rows = []
    for key, expected in entry.expected.items():
        value = observed.get(key)
        status = AuditStatus.MATCH if value == expected.value else AuditStatus.MISMATCH
        rows.append(AuditRow(entry_id=entry.id, key=key, status=status, observed=value,
                             expected=expected.value, provenance=expected.provenance))
        if status == AuditStatus.MISMATCH:
            audit_logger.log_event("DERIVED_MISMATCH", entry.id,
                                   {"key": key, "observed": value, "expected": expected.value})
    for key, claim in entry.paper_claims.items():
        value = observed.get(key)
        if value == claim:
            continue
        rows.append(AuditRow(entry_id=entry.id, key=key, status=AuditStatus.PAPER_INCONSISTENCY,
                             observed=value, paper=claim, provenance=Provenance.PAPER))
        audit_logger.log_event("PAPER_INCONSISTENCY", entry.id, {"key": key, "computed": value, "printed": claim})
    return rows


def run_entry(entry: CorpusEntry, max_cells: Optional[int] = None) -> Tuple[SessionReport, List[AuditRow]]:
    logger.info(f"Running corpus entry {entry.id} ({entry.title})")
    report = execute_session(parse_session(entry.session), max_cells=max_cells, name=entry.id)
    rows = audit_entry(entry, report)
    report.audit = rows
    return report, rows


def run_corpus(max_cells: Optional[int] = None, workers: Optional[int] = None,
               entries: Optional[List[CorpusEntry]] = None) -> CorpusRun:
    """Run entries concurrently; output ordered by entry id"""
    entries = sorted(entries if entries is not None else CORPUS, key=lambda e: e.id)
    with ThreadPoolExecutor(max_workers=workers or settings.CORPUS_WORKERS) as pool:
        results = list(pool.map(lambda entry: run_entry(entry, max_cells), entries))

    audit = [row for _, rows in results for row in rows]
    counts = {"entries": len(entries)}
    for status in AuditStatus:
        counts[status.value] = sum(1 for row in audit if row.status == status)
    return CorpusRun(
        timestamp=datetime.now(timezone.utc).isoformat(),
        entries=[report for report, _ in results],
        audit=audit,
        counts=counts,
    )
