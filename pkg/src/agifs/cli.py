"""Command-line front end.

Exit status: 0 when every verdict is confirmed or not applicable, 1 when
some report is refuted (or, for ``adjudicate``, when a discrepancy is
found), 2 for usage, parse and input errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from . import claims
from .adjudicate import adjudicate, format_adjudication
from .claims import ClaimId, SearchBudget
from .conditions import ifs_to_data
from .errors import AGError, ConstraintError, ParseError
from .ideals import FuzzyIdealKind, is_if_ideal
from .ifs import IFS, GradeChain, make_ifs
from .magma import (
    CrispIdealKind,
    CrispSubset,
    FiniteMagma,
    LawKind,
    check_law,
    enumerate_ag_groupoids,
    intra_regular_witnesses,
    is_crisp_ideal,
    make_magma,
)
from .report import document, dumps, format_report, format_reports, magma_to_data, report_to_data

EXIT_OK, EXIT_REFUTED, EXIT_USAGE = 0, 1, 2


# -- parsing ------------------------------------------------------------------


def _tokens(text: str):
    """(line number, [(column, token), ...]) for each non-blank, non-comment line."""
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        toks = []
        col = 0
        for tok in line.split():
            col = line.index(tok, col)
            toks.append((col + 1, tok))
            col += len(tok)
        if toks:
            yield lineno, toks


def _int(tok: str, lineno: int, col: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer {what}, got {tok!r}", lineno, col) from None


def parse_magma_text(text: str, base: int = 1) -> FiniteMagma:
    lines = list(_tokens(text))
    if not lines:
        raise ParseError("empty magma file")
    lineno, toks = lines[0]
    if len(toks) != 1:
        raise ParseError("first line must hold only the order n", lineno, toks[1][0])
    n = _int(toks[0][1], lineno, toks[0][0], "order")
    if n < 1:
        raise ParseError("order must be positive", lineno, toks[0][0])
    rows = lines[1:]
    if len(rows) != n:
        where = rows[n] if len(rows) > n else (lines[-1] if rows else lines[0])
        raise ParseError(f"expected {n} rows, found {len(rows)}", where[0], where[1][0][0])
    table = []
    for lineno, toks in rows:
        if len(toks) != n:
            col = toks[n][0] if len(toks) > n else toks[-1][0]
            raise ParseError(f"expected {n} entries, found {len(toks)}", lineno, col)
        row = []
        for col, tok in toks:
            v = _int(tok, lineno, col, "entry")
            if not base <= v < n + base:
                raise ParseError(f"entry {v} outside {base}..{n - 1 + base}", lineno, col)
            row.append(v - base)
        table.append(row)
    return make_magma(n, table)


def parse_ifs_text(text: str, strict: bool = True, base: int = 1, n: Optional[int] = None) -> IFS:
    """Records ``index mu gamma``, one per element, in any order."""
    records: dict[int, tuple[str, str, int]] = {}
    for lineno, toks in _tokens(text):
        if len(toks) != 3:
            raise ParseError(f"expected 'index mu gamma', found {len(toks)} fields", lineno, toks[0][0])
        (c0, idx), (c1, mu), (c2, gamma) = toks
        x = _int(idx, lineno, c0, "index") - base
        if x in records:
            raise ParseError(f"duplicate index {x + base}", lineno, c0)
        if x < 0 or (n is not None and x >= n):
            raise ParseError(f"index {x + base} outside the carrier", lineno, c0)
        for col, tok in ((c1, mu), (c2, gamma)):
            try:
                make_ifs([tok], ["0"], strict=False)
            except AGError as exc:
                raise ParseError(str(exc), lineno, col) from None
        records[x] = (mu, gamma, lineno)
    size = n if n is not None else (max(records) + 1 if records else 0)
    missing = [x + base for x in range(size) if x not in records]
    if not records or missing:
        raise ParseError(f"missing records for elements {missing}" if missing else "empty IFS file")
    mus = [records[x][0] for x in range(size)]
    gammas = [records[x][1] for x in range(size)]
    try:
        return make_ifs(mus, gammas, strict=strict)
    except ConstraintError as exc:
        raise ParseError(
            f"mu + gamma = {exc.total} > 1 at element {exc.element + base} (strict mode)",
            records[exc.element][2],
        ) from exc


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def parse_magma_file(path: str, base: int = 1) -> FiniteMagma:
    try:
        return parse_magma_text(_read(path), base)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def parse_ifs_file(path: str, strict: bool = True, base: int = 1, n: Optional[int] = None) -> IFS:
    try:
        return parse_ifs_text(_read(path), strict, base, n)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def parse_subset(text: str, n: int, base: int = 1) -> CrispSubset:
    try:
        items = [int(t) - base for t in text.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"bad subset {text!r}") from None
    bad = [x + base for x in items if not 0 <= x < n]
    if bad:
        raise ParseError(f"subset elements {bad} outside the carrier")
    return CrispSubset.of(n, items)


# -- configuration ------------------------------------------------------------


@dataclass
class RunConfiguration:
    command: str
    magma: Optional[str] = None
    ifs: list = field(default_factory=list)
    base: int = 1
    strict: bool = True
    chain: int = 2
    max_order: int = 4
    budget: int = 100_000
    seed: int = 0
    samples: int = 200
    fmt: str = "text"
    out: Optional[str] = None
    claim: Optional[str] = None
    kind: Optional[str] = None
    subset: Optional[str] = None
    order: Optional[int] = None
    left_identity: Optional[bool] = None
    converse: bool = False

    def search_budget(self) -> SearchBudget:
        return SearchBudget(
            max_order=self.max_order,
            chain_k=self.chain,
            max_instances=self.budget,
            seed=self.seed,
            samples=self.samples,
            left_identity=self.left_identity,
        )

    def echo(self) -> dict:
        d = asdict(self)
        d.pop("out")
        return d


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--base", type=int, choices=(0, 1), default=1, help="index base of files and output")
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--strict", dest="strict", action="store_true", default=True)
    mode.add_argument("--lenient", dest="strict", action="store_false", help="accept sets with mu + gamma > 1")
    common.add_argument("--chain", type=int, default=2, metavar="K", help="grade chain {0, 1/K, ..., 1}")
    common.add_argument("--max-order", type=int, default=4, metavar="N")
    common.add_argument("--budget", type=int, default=100_000, metavar="M", help="max IFS instances per magma")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=200, help="random tuples for sampled claims")
    common.add_argument("--format", dest="fmt", choices=("text", "structured"), default="text")
    common.add_argument("--out", metavar="PATH")

    p = argparse.ArgumentParser(prog="agifs", description="Finite AG-groupoid and intuitionistic fuzzy set workbench.")
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name: str, help: str, magma: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help)
        if magma:
            sp.add_argument("magma", help="Cayley table file")
        return sp

    cmd("laws", "check the AG laws and left identity")
    cmd("intra", "intra-regularity witnesses per element")
    sp = cmd("ideal", "crisp or fuzzy ideal verdicts")
    sp.add_argument("--kind", choices=[k.value for k in FuzzyIdealKind])
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--subset", help="crisp subset, e.g. '1,2'")
    src.add_argument("--ifs", action="append", help="IFS file")
    sp = cmd("claim", "verify one claim", magma=False)
    sp.add_argument("claim", choices=[c.value for c in ClaimId], metavar="CLAIM")
    sp.add_argument("magma", help="Cayley table file")
    sp.add_argument("--ifs", action="append", default=[], help="IFS input file (repeatable, in order)")
    cmd("audit", "every claim on one magma")
    sp = cmd("search", "counterexample search over the census", magma=False)
    sp.add_argument("claim", choices=[c.value for c in ClaimId], metavar="CLAIM")
    sp.add_argument("--converse", action="store_true", help="level-cut claims: search the converse direction")
    ident = sp.add_mutually_exclusive_group()
    ident.add_argument("--left-identity", dest="left_identity", action="store_true", default=None)
    ident.add_argument("--any-identity", dest="left_identity", action="store_false")
    sp = cmd("enumerate", "AG-groupoid census for one order", magma=False)
    sp.add_argument("order", type=int)
    sp.add_argument("--left-identity", dest="left_identity", action="store_true", default=None)
    cmd("semilattice", "semilattice of fuzzy two-sided ideals")
    cmd("duo", "crisp versus fuzzy duo")
    cmd("adjudicate", "compare the example tables' asserted facts with computation", magma=False)
    return p


def parse_args(argv: Optional[Sequence[str]] = None) -> RunConfiguration:
    ns = vars(build_parser().parse_args(argv))
    ifs = ns.pop("ifs", None) or []
    config = RunConfiguration(ifs=ifs, **{k: v for k, v in ns.items() if k in RunConfiguration.__dataclass_fields__})
    if config.chain < 1:
        raise ParseError("--chain must be at least 1")
    for path in [config.magma, *config.ifs]:
        if path is not None and not Path(path).is_file():
            raise ParseError(f"no such file: {path}")
    return config


# -- commands -----------------------------------------------------------------


@dataclass
class Result:
    body: dict
    text: str
    failed: bool = False


def _laws(cfg, magma) -> Result:
    reports = [check_law(magma, law) for law in LawKind]
    body = {
        "magma": magma_to_data(magma),
        "laws": [{"law": r.law.value, "holds": r.holds, "tuple": list(r.witness) if r.witness else None} for r in reports],
    }
    lines = []
    for r in reports:
        w = "" if r.witness is None else " witness " + " ".join(str(v + cfg.base) for v in r.witness)
        lines.append(f"{r.law.value}: {'holds' if r.holds else 'fails'}{w}")
    return Result(body, "\n".join(lines) + "\n")


def _intra(cfg, magma) -> Result:
    entries = []
    lines = []
    for a in magma.elements:
        ws = intra_regular_witnesses(magma, a)
        first = ws[0] if ws else None
        entries.append(
            {
                "element": a,
                "x": first.x if first else None,
                "y": first.y if first else None,
                "witness_count": len(ws),
            }
        )
        if first:
            lines.append(f"{a + cfg.base}: (x, y) = ({first.x + cfg.base}, {first.y + cfg.base}), {len(ws)} witnesses")
        else:
            lines.append(f"{a + cfg.base}: no witness")
    failing = [e["element"] for e in entries if e["x"] is None]
    lines.append("intra-regular" if not failing else "not intra-regular")
    body = {"magma": magma_to_data(magma), "intra_regular": not failing, "witnesses": entries}
    return Result(body, "\n".join(lines) + "\n")


def _ideal(cfg, magma) -> Result:
    kinds = [cfg.kind] if cfg.kind else [k.value for k in FuzzyIdealKind]
    verdicts = []
    if cfg.subset is not None:
        X = parse_subset(cfg.subset, magma.n, cfg.base)
        for kind in kinds:
            v = is_crisp_ideal(magma, X, CrispIdealKind(kind))
            verdicts.append({"kind": kind, "holds": v.holds, "element": v.witness})
        subject = {"subset": X.members()}
    else:
        if len(cfg.ifs) != 1:
            raise ParseError("ideal takes exactly one --ifs file")
        A = parse_ifs_file(cfg.ifs[0], cfg.strict, cfg.base, magma.n)
        for kind in kinds:
            v = is_if_ideal(magma, A, kind)
            verdicts.append(
                {
                    "kind": kind,
                    "holds": v.holds,
                    "tuple": list(v.witness) if v.witness else None,
                    "component": v.component,
                }
            )
        subject = {"ifs": ifs_to_data(A), "violations": list(A.violations)}
    lines = []
    for v in verdicts:
        w = v.get("tuple") or ([v["element"]] if v.get("element") is not None else None)
        extra = ""
        if w:
            extra = " at " + " ".join(str(e + cfg.base) for e in w)
            if v.get("component"):
                extra += f" ({v['component']})"
        lines.append(f"{v['kind']}: {'holds' if v['holds'] else 'fails'}{extra}")
    return Result({"magma": magma_to_data(magma), **subject, "verdicts": verdicts}, "\n".join(lines) + "\n")


def _claim(cfg, magma) -> Result:
    inputs = [parse_ifs_file(p, cfg.strict, cfg.base, magma.n) for p in cfg.ifs]
    chain = None if inputs else GradeChain(cfg.chain)
    r = claims.verify_claim(cfg.claim, magma, inputs or None, chain, cfg.search_budget())
    return Result({"reports": [report_to_data(r)]}, format_report(r, cfg.base) + "\n", r.verdict.value == "refuted")


def _audit(cfg, magma) -> Result:
    reports = claims.audit_all(magma, GradeChain(cfg.chain), cfg.search_budget())
    failed = any(r.verdict.value == "refuted" for r in reports)
    return Result({"reports": [report_to_data(r) for r in reports]}, format_reports(reports, cfg.base), failed)


def _search(cfg, magma) -> Result:
    found = claims.search_counterexample(cfg.claim, cfg.search_budget(), converse=cfg.converse)
    if found is None:
        return Result({"found": False, "reports": []}, f"{cfg.claim}: no counterexample within the budget\n")
    rows = "\n".join("  " + " ".join(str(v + cfg.base) for v in row) for row in found.magma.table)
    text = f"counterexample on a magma of order {found.magma.n} (magma #{found.examined} examined):\n{rows}\n"
    text += format_report(found.report, cfg.base) + "\n"
    body = {
        "found": True,
        "magma": magma_to_data(found.magma),
        "inputs": [ifs_to_data(A) for A in found.inputs],
        "examined": found.examined,
        "reports": [report_to_data(found.report)],
    }
    return Result(body, text, True)


def _enumerate(cfg, magma) -> Result:
    tables = list(enumerate_ag_groupoids(cfg.order, bool(cfg.left_identity), max_order=cfg.max_order))
    body = {"order": cfg.order, "count": len(tables), "tables": [magma_to_data(m)["table"] for m in tables]}
    text = f"{len(tables)} AG-groupoids of order {cfg.order}" + (" with left identity" if cfg.left_identity else "") + "\n"
    return Result(body, text)


def _semilattice(cfg, magma) -> Result:
    r = claims.verify_semilattice(magma, GradeChain(cfg.chain), cfg.search_budget())
    return Result({"reports": [report_to_data(r)]}, format_report(r, cfg.base) + "\n", r.verdict.value == "refuted")


def _duo(cfg, magma) -> Result:
    r = claims.duo_audit(magma, GradeChain(cfg.chain), cfg.search_budget())
    d = r.details
    lines = [format_report(r, cfg.base)]
    for side in ("left", "right"):
        lines.append(f"  {side}: crisp duo {d[f'crisp_{side}_duo']}, fuzzy duo {d[f'fuzzy_{side}_duo']}")
    return Result({"reports": [report_to_data(r)]}, "\n".join(lines) + "\n", r.verdict.value == "refuted")


def _adjudicate(cfg, magma) -> Result:
    adj = adjudicate()
    return Result(adj.to_data(), format_adjudication(adj, cfg.base), bool(adj.discrepancies))


COMMANDS = {
    "laws": _laws,
    "intra": _intra,
    "ideal": _ideal,
    "claim": _claim,
    "audit": _audit,
    "search": _search,
    "enumerate": _enumerate,
    "semilattice": _semilattice,
    "duo": _duo,
    "adjudicate": _adjudicate,
}


def run(config: RunConfiguration) -> tuple[int, str]:
    """Execute one configuration; returns (exit status, rendered output)."""
    magma = parse_magma_file(config.magma, config.base) if config.magma else None
    result = COMMANDS[config.command](config, magma)
    status = EXIT_REFUTED if result.failed else EXIT_OK
    if config.fmt == "structured":
        doc = document(config.command, config.echo(), result.body, config.base)
        return status, dumps(doc)
    return status, result.text


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        config = parse_args(argv)
        status, output = run(config)
    except SystemExit as exc:  # argparse usage errors
        return EXIT_USAGE if exc.code else EXIT_OK
    except AGError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if config.out:
        Path(config.out).write_text(output)
    else:
        sys.stdout.write(output)
    return status


if __name__ == "__main__":
    sys.exit(main())
