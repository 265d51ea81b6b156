"""Report documents: structured (JSON) and text renderings.

Everything inside the library is 0-based.  Documents are written in the
caller's index base and always echo it, so that a magma or IFS printed in a
document re-parses to the identical value.
"""

from __future__ import annotations

import json
from typing import Any, Iterable

from .claims import ClaimReport
from .conditions import ifs_to_data
from .magma import FiniteMagma, make_magma

FORMAT_VERSION = 1

# keys whose integer values (at any nesting depth) name carrier elements
ELEMENT_KEYS = frozenset(
    {
        "tuple",
        "subset",
        "cut",
        "element",
        "elements",
        "failing_element",
        "failing_elements",
        "table",
        "x",
        "y",
        "a",
        "witness_element",
        "crisp_left_witness",
        "crisp_right_witness",
        "violations",
    }
)


def _shift_value(value, base: int):
    if base == 0 or value is None:
        return value
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value + base
    if isinstance(value, (list, tuple)):
        return [_shift_value(v, base) for v in value]
    if isinstance(value, dict):
        return {k: _shift_value(v, base) for k, v in value.items()}
    return value


def shift(doc: Any, base: int) -> Any:
    """Translate element indices in a JSON-ready value by ``base``."""
    if isinstance(doc, dict):
        return {k: _shift_value(v, base) if k in ELEMENT_KEYS else shift(v, base) for k, v in doc.items()}
    if isinstance(doc, list):
        return [shift(v, base) for v in doc]
    return doc


def magma_to_data(magma: FiniteMagma) -> dict:
    return {"n": magma.n, "table": [list(r) for r in magma.table]}


def magma_from_data(data: dict, base: int = 0) -> FiniteMagma:
    return make_magma(data["n"], [[v - base for v in row] for row in data["table"]])


def report_to_data(report: ClaimReport) -> dict:
    """0-based JSON-ready form of one claim report."""
    return {
        "claim": report.claim.value,
        "statement": report.statement,
        "verdict": report.verdict.value,
        "scope": report.scope.value,
        "magma": magma_to_data(report.magma),
        "chain_k": report.chain_k,
        "inputs": [ifs_to_data(A) for A in report.inputs],
        "failed_precondition": report.failed_precondition,
        "witness": report.witness,
        "truncated": report.truncated,
        "details": report.details,
        "notes": report.notes,
    }


def document(command: str, config: dict, body: dict, base: int) -> dict:
    doc = {"format": FORMAT_VERSION, "command": command, "index_base": base, "config": config}
    doc.update(shift(body, base))
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def has_refutation(doc: Any) -> bool:
    """True if any report inside ``doc`` carries the verdict ``refuted``."""
    if isinstance(doc, dict):
        if doc.get("verdict") == "refuted":
            return True
        return any(has_refutation(v) for v in doc.values())
    if isinstance(doc, list):
        return any(has_refutation(v) for v in doc)
    return False


# -- text ---------------------------------------------------------------------


def _fmt_ifs(data: dict) -> str:
    return "mu=[" + " ".join(data["mu"]) + "] gamma=[" + " ".join(data["gamma"]) + "]"


def format_condition(c: dict, base: int, indent: str = "    ") -> list[str]:
    args = c["args"]
    if c["name"] == "and":
        lines = [f"{indent}and = {c['value']}"]
        for part in args["parts"]:
            lines += format_condition(part, base, indent + "  ")
        return lines
    shown = []
    for key, value in args.items():
        if key == "sets":
            continue
        if key in ELEMENT_KEYS:
            value = _shift_value(value, base)
        shown.append(f"{key}={json.dumps(value, ensure_ascii=False)}")
    lines = [f"{indent}{c['name']}({', '.join(shown)}) = {c['value']}"]
    for sym, data in zip("ABCD", args.get("sets", [])):
        lines.append(f"{indent}  {sym}: {_fmt_ifs(data)}")
    return lines


def format_report(report: ClaimReport, base: int = 1) -> str:
    lines = [f"{report.claim.value}: {report.verdict.value} [{report.scope.value}]", f"  {report.statement}"]
    if report.failed_precondition:
        lines.append(f"  unmet: {report.failed_precondition}")
        failing = report.details.get("failing_elements")
        if failing:
            lines.append("  failing elements: " + ", ".join(str(a + base) for a in failing))
    if report.truncated:
        lines.append("  population truncated to the instance budget")
    if report.witness:
        lines.append(f"  witness ({report.witness['form']}):")
        for c in report.witness["conditions"]:
            lines += format_condition(c, base)
    table = report.details.get("comparison")
    if table:
        lines.append("  element  (A∘B).mu  (A∩B).mu  (A∘B).gamma  (A∩B).gamma  equal")
        for row in table:
            lines.append(
                f"  {row['element'] + base:>7}  {row['product_mu']:>8}  {row['meet_mu']:>8}"
                f"  {row['product_gamma']:>11}  {row['meet_gamma']:>11}  {row['equal']}"
            )
    matrix = report.details.get("matrix")
    if matrix:
        props = report.details["properties"]
        width = max(len(p) for p in props)
        lines.append("  coincidence matrix (1 = same class over the chain):")
        for p, row in zip(props, matrix):
            lines.append(f"    {p:<{width}}  " + " ".join("1" if v else "." for v in row))
    for note in report.notes:
        lines.append(f"  note: {note}")
    return "\n".join(lines)


def format_reports(reports: Iterable[ClaimReport], base: int = 1) -> str:
    return "\n".join(format_report(r, base) for r in reports) + "\n"


def verdict_tally(reports: Iterable[ClaimReport]) -> dict[str, int]:
    tally: dict[str, int] = {}
    for r in reports:
        tally[r.verdict.value] = tally.get(r.verdict.value, 0) + 1
    return dict(sorted(tally.items()))

