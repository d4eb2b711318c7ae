from __future__ import annotations

"""
Verdict records and their writers.

`to_record` flattens a Verdict into a VerdictRecord; the writers serialise
records as JSON lines, CSV (fixed column order, see constants.CSV_COLUMNS)
or a short human-readable block. Output depends only on the record, so
identical inputs give byte-identical files.
"""

import csv
import json
from typing import Any, Dict, List, Optional, TextIO

from pretzelslice.constants import CSV_COLUMNS, RECORD_SCHEMA_VERSION
from pretzelslice.core.interfaces.render import RecordWriterProtocol
from pretzelslice.core.models import CosetReport, RibbonReduction, Verdict, VerdictRecord, multiset_key


def _solution_dict(rep: CosetReport) -> Dict[str, Any]:
    return {
        "solution": rep.solution.as_tuple(),
        "v1_tilde": rep.v1_tilde,
        "v2_tilde": rep.v2_tilde,
        "R": rep.R,
        "H": rep.H,
        "H_bar": rep.H_bar,
        "cond_I": rep.cond_I,
        "cond_II": rep.cond_II,
        "full_coverage": rep.full_coverage,
        "H_bar_single": rep.H_bar_single,
        "case": rep.case,
        "case_bound": rep.case_bound,
        "case_identity_holds": rep.case_identity_holds,
    }


def _witness_moves(witness: Optional[RibbonReduction]) -> Optional[List[Dict[str, Any]]]:
    if witness is None:
        return None
    return [
        {"arranged": list(m.arranged), "index": m.index, "removed": list(m.removed), "result": list(m.result)}
        for m in witness.moves
    ]


def to_record(verdict: Verdict) -> VerdictRecord:
    trace = verdict.trace
    sig = trace.signature
    reports = trace.coset_reports
    flags: Dict[str, Any] = {
        "schema": RECORD_SCHEMA_VERSION,
        "knot_class": trace.knot_class.value,
        "pairs": trace.pair_profile.t if trace.pair_profile else None,
        "single_twists": trace.single_twists,
        "simple_ribbon": trace.simple_ribbon,
        "mutant_ribbon": trace.mutant_ribbon,
        "any_full_coverage": trace.any_full_coverage,
        "max_R": max((r.R for r in reports), default=None),
        "max_H_bar": max((r.H_bar for r in reports), default=None),
        "single_twist_case": trace.single_twist_case,
        "e_hat": str(sig.e_hat) if sig else None,
        "infinite_order": sig.infinite_order if sig else None,
        "normalized": list(trace.normalized.as_tuple()) if trace.normalized else None,
        "mirrored": trace.normalized.mirrored if trace.normalized else None,
        "unit_pair_reduced": list(verdict.unit_pair_reduced) if verdict.unit_pair_reduced else None,
        "ribbon_witness": _witness_moves(verdict.witness),
    }
    return VerdictRecord(
        tuple=trace.params,
        multiset=multiset_key(trace.params),
        verdict=verdict.kind.value,
        reason=verdict.reason.value if verdict.reason else None,
        sigma=sig.sigma if sig else None,
        det=trace.determinant,
        num_embedding_solutions=len(trace.embedding_solutions),
        solutions=tuple(_solution_dict(r) for r in reports),
        flags=flags,
    )


def _jsonable(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def record_to_json(record: VerdictRecord) -> str:
    return json.dumps(_jsonable(record.to_dict()), ensure_ascii=False, separators=(",", ":"))


def record_from_json(line: str) -> VerdictRecord:
    return VerdictRecord.from_dict(json.loads(line))


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    return str(value)


def csv_row(record: VerdictRecord) -> List[str]:
    flags = record.flags
    values = {
        "tuple": record.tuple,
        "multiset": record.multiset,
        "verdict": record.verdict,
        "reason": record.reason,
        "sigma": record.sigma,
        "det": record.det,
        "num_embedding_solutions": record.num_embedding_solutions,
    }
    return [_cell(values[col] if col in values else flags.get(col)) for col in CSV_COLUMNS]


class JsonlRecordWriter(RecordWriterProtocol):
    def __init__(self, stream: TextIO) -> None:
        self._out = stream

    def write(self, record: VerdictRecord) -> None:
        self._out.write(record_to_json(record) + "\n")

    def close(self) -> None:
        self._out.flush()


class CsvRecordWriter(RecordWriterProtocol):
    """CSV with a header row; list cells are space-separated."""

    def __init__(self, stream: TextIO) -> None:
        self._out = stream
        self._writer = csv.writer(stream, lineterminator="\n")
        self._header_done = False

    def write(self, record: VerdictRecord) -> None:
        if not self._header_done:
            self._writer.writerow(CSV_COLUMNS)
            self._header_done = True
        self._writer.writerow(csv_row(record))

    def close(self) -> None:
        if not self._header_done:
            self._writer.writerow(CSV_COLUMNS)
            self._header_done = True
        self._out.flush()


class TextRecordWriter(RecordWriterProtocol):
    def __init__(self, stream: TextIO) -> None:
        self._out = stream

    def write(self, record: VerdictRecord) -> None:
        flags = record.flags
        head = f"P({', '.join(str(p) for p in record.tuple)}): {record.verdict}"
        if record.reason:
            head += f" ({record.reason})"
        lines = [head]
        if record.sigma is not None:
            lines.append(f"  σ = {record.sigma}   det = {record.det}   ê = {flags.get('e_hat')}")
        lines.append(
            f"  pairs = {flags.get('pairs')}   single twists = {_cell(flags.get('single_twists'))}"
            f"   simple ribbon = {_cell(flags.get('simple_ribbon'))}"
            f"   mutant ribbon = {_cell(flags.get('mutant_ribbon'))}"
        )
        if flags.get("normalized") is not None:
            mirrored = " (mirrored)" if flags.get("mirrored") else ""
            lines.append(
                f"  normalised P{tuple(flags['normalized'])}{mirrored}: "
                f"{record.num_embedding_solutions} embedding solution(s)"
            )
        for sol in record.solutions:
            lines.append(
                f"    (α,β,γ,x,y,z) = {tuple(sol['solution'])}  ṽ₁ = {tuple(sol['v1_tilde'])}"
                f"  ṽ₂ = {tuple(sol['v2_tilde'])}  R = {sol['R']}  |ℋ| = {sol['H']}"
                f"  |ℋ̄| = {sol['H_bar']}  full coverage = {_cell(sol['full_coverage'])}"
            )
        witness = flags.get("ribbon_witness")
        if witness:
            steps = " → ".join(f"drop {tuple(m['removed'])}" for m in witness)
            lines.append(f"  ribbon witness: {steps}")
        if flags.get("unit_pair_reduced"):
            lines.append(f"  {{-1, 1}} pair removed: P{tuple(flags['unit_pair_reduced'])}")
        self._out.write("\n".join(lines) + "\n")

    def close(self) -> None:
        self._out.flush()


def make_writer(fmt: str, stream: TextIO) -> RecordWriterProtocol:
    if fmt == "json":
        return JsonlRecordWriter(stream)
    if fmt == "csv":
        return CsvRecordWriter(stream)
    if fmt == "text":
        return TextRecordWriter(stream)
    raise ValueError(f"unknown record format {fmt!r}")
