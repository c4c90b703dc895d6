"""
Human-readable and JSON renderings of session reports and corpus runs
"""

from typing import List

import pandas as pd

from app.schemas.common import Outcome
from app.schemas.corpus import CorpusRun
from app.schemas.session import SessionReport
from app.services.cech import EVIDENCE_LABEL, stabilization_table


def to_json(value: SessionReport | CorpusRun) -> str:
    return value.model_dump_json(indent=2)


def _flag(value) -> str:
    return "n/a" if value is None else str(value)


def primes_table(report: SessionReport) -> pd.DataFrame:
    rows = [
        {
            "prime": p.rendered,
            "dim R/p": p.dim,
            "height": p.height,
            "certificate": p.certificate if not p.certificate_base else f"{p.certificate} ({p.certificate_base})",
        }
        for p in report.primes
    ]
    return pd.DataFrame(rows, columns=["prime", "dim R/p", "height", "certificate"])


def audit_table(run: CorpusRun) -> pd.DataFrame:
    rows = [
        {
            "entry": row.entry_id,
            "key": row.key,
            "status": row.status,
            "observed": row.observed,
            "expected": row.expected if row.expected is not None else row.paper,
            "provenance": row.provenance,
        }
        for row in run.audit
    ]
    return pd.DataFrame(rows, columns=["entry", "key", "status", "observed", "expected", "provenance"])


def render_report(report: SessionReport) -> str:
    lines: List[str] = [f"session: {report.session}", f"outcome: {report.outcome}"]
    if report.outcome == Outcome.EMPTY_VARIETY:
        return "\n".join(lines) + "\n"

    lines.append(f"d = {report.d}    dim R/a = {report.dim_quotient}    codim = {report.codim}")
    if report.primes:
        lines.append("minimal primes:")
        lines.append(primes_table(report).to_string(index=False))
    if not report.decomposition_complete:
        lines.append("decomposition incomplete; residual branches: " + ", ".join(report.residuals))
    lines.append(f"Fdim = {report.fdim}    heights {_flag(report.small_height)}..{_flag(report.big_height)}")
    lines.append(f"vanishing bound d - c = {_flag(report.vanishing_bound)}")
    lines.append(f"equidimensional: {_flag(report.equidimensional)}    condition (2): {_flag(report.condition2)}")
    prediction = report.prediction
    if prediction is not None:
        text = f"prediction: {prediction.kind}"
        if prediction.bound is not None:
            text += f" (bound {prediction.bound})"
        if prediction.witness_degree is not None:
            text += f", witness degree {prediction.witness_degree}"
        lines.append(text)

    asserted = [name for name, value in report.assumptions.model_dump().items() if value]
    lines.append("assumptions: " + (", ".join(asserted) if asserted else "none"))
    for note in report.modeling:
        lines.append(f"note: {note}")

    for verdict in report.corollaries:
        if verdict.vanishing_above is not None:
            lines.append(f"corollary {verdict.rule}: vanishing for i > {verdict.vanishing_above}"
                         f" (theorem bound {_flag(verdict.theorem_bound)})")
        else:
            lines.append(f"corollary {verdict.rule}: only nonvanishing degree {verdict.nonvanishing_degree}")

    for toric in report.toric:
        lines.append(f"toric presentation in {', '.join(toric.variables)}: " + ", ".join(toric.generators))
        lines.append(f"substitution check: {'ok' if toric.substitution_ok else 'FAILED'}")

    for cech in report.cech:
        label = "H^i_a(A/J)" if cech.power is None else f"H^i_a(A/(J + a^{cech.power}))"
        lines.append(f"{label} over {cech.cells} degrees: totals {cech.per_i_totals}"
                     f" (euler {cech.euler_ok}, d^2 = 0 {cech.differentials_ok},"
                     f" max index {cech.max_index_ok}, grothendieck {cech.grothendieck_ok})")
    truncations = [c for c in report.cech if c.power is not None]
    if truncations:
        lines.append(f"stabilization ({EVIDENCE_LABEL}):")
        lines.append(stabilization_table(truncations).to_string())
    for note in report.cech_notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def render_corpus(run: CorpusRun) -> str:
    lines = [render_report(report) for report in run.entries]
    lines.append("audit:")
    lines.append(audit_table(run).to_string(index=False))
    lines.append("counts: " + ", ".join(f"{key}={value}" for key, value in run.counts.items()))
    return "\n".join(lines) + "\n"
