"""Command-line front end: verify identities, run corollaries, enumerate,
render diagrams and batch-process case files.

Exit codes: 0 when every requested verification holds, 1 when any equality
fails, 2 on usage or validation errors.  Reports are emitted as text or as
JSON tagged with the schema ``schur9/1``; case files additionally support a
delimited CSV summary and matplotlib figures written alongside it.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from . import corollaries
from .identities import VerifyReport, verify_q, verify_schur
from .lgv import (
    NINTH,
    dot_export,
    enumerate_fillings,
    is_nonintersecting,
    path_weight,
    paths_to_tableau,
    tableau_to_paths,
)
from .render import render_decomposition, render_shape, render_strip
from .shapes import ContainmentError, Partition, ShiftedSkewShape, SkewShape, StrictPartition
from .strips import ProfileMismatch, StripSpec, decompose
from .tableaux import enumerate_primed, enumerate_ssyt
from .weights import monomial, poly_eq, xvar, yvar

USAGE_ERROR = 2

COROLLARY_DISPATCH = {
    "jt": corollaries.jacobi_trudi,
    "djt": corollaries.dual_jacobi_trudi,
    "giambelli": corollaries.giambelli,
    "okada-inner": corollaries.okada_inner,
    "lp-outer": corollaries.lascoux_pragacz_outer,
    "jpn": corollaries.jpn_row,
    "qcol": corollaries.q_column,
    "q-inner": corollaries.q_inner,
    "q-outer": corollaries.q_outer,
}

Q_COROLLARIES = {"jpn", "qcol", "q-inner", "q-outer"}


class CliError(ValueError):
    pass


def _parse_partition(text: str, qfun: bool):
    cls = StrictPartition if qfun else Partition
    try:
        return cls.parse(text)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _print_report(report: VerifyReport, fmt: str) -> None:
    if fmt == "json":
        print(report.to_json())
        return
    status = "EQUAL" if report.equal else "NOT EQUAL"
    kind = "Q" if report.qfun else "s"
    print(
        f"[{status}] {report.name} {kind}[{report.lam}/{report.mu}] "
        f"strip={report.strip} n={report.n} lhs_terms={report.lhs_terms} "
        f"rhs_terms={report.rhs_terms} ({report.elapsed_ms:.1f} ms)"
    )


def _verify_one(lam_text: str, mu_text: str, strip_text: str, n: int, qfun: bool,
                perturb: bool) -> VerifyReport:
    spec = StripSpec.parse(strip_text)
    if qfun:
        lam = StrictPartition.parse(lam_text)
        mu = StrictPartition.parse(mu_text)
        return verify_q(lam, mu, spec, n, perturb=perturb)
    lam = Partition.parse(lam_text)
    mu = Partition.parse(mu_text)
    return verify_schur(lam, mu, spec, n, perturb=perturb)


def _report_figures(args, report, index: int | None = None) -> None:
    if not getattr(args, "figures", None):
        return
    from .plots import plot_report_figures

    qfun = report.qfun
    lam_cls = StrictPartition if qfun else Partition
    lam = lam_cls.parse("" if report.lam == "-" else report.lam)
    mu = lam_cls.parse("" if report.mu == "-" else report.mu)
    shape = (ShiftedSkewShape if qfun else SkewShape)(lam, mu)
    dec = None
    if shape.cells:
        try:
            spec = StripSpec.parse(report.strip)
            dec = decompose(shape, spec.build(shape), kind=spec.kind)
        except ValueError:
            dec = None
    stem = f"case_{index:03d}" if index is not None else "report"
    plot_report_figures(report, shape, dec, args.figures, stem)


def cmd_verify(args) -> int:
    if args.case_file:
        return _run_case_file(args)
    if args.lam is None or args.n is None or args.strip is None:
        raise CliError("verify requires --lambda, --strip and --n (or --case-file)")
    report = _verify_one(args.lam, args.mu, args.strip, args.n, args.qfun, args.perturb)
    _print_report(report, args.format)
    _report_figures(args, report)
    return 0 if report.equal else 1


def _run_case_file(args) -> int:
    path = Path(args.case_file)
    try:
        raw = path.read_text()
    except OSError as exc:
        raise CliError(f"cannot read case file: {exc}") from exc
    raw = raw.strip()
    cases: list[dict] = []
    if raw:
        try:
            data = json.loads(raw)
            if not isinstance(data, list):
                raise CliError("case file must hold a JSON list of cases")
            cases = data
        except json.JSONDecodeError:
            for line_no, line in enumerate(raw.splitlines(), 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    cases.append(json.loads(line))
                except json.JSONDecodeError as exc:
                    raise CliError(f"case file line {line_no}: {exc}") from exc
    reports: list[VerifyReport] = []
    for index, case in enumerate(cases):
        try:
            report = _verify_one(
                str(case.get("lambda", "")),
                str(case.get("mu", "")),
                str(case.get("strip", "row")),
                int(case["n"]),
                bool(case.get("qfun", False)),
                bool(case.get("perturb", False)),
            )
        except (KeyError, ValueError) as exc:
            raise CliError(f"case {index}: {exc}") from exc
        reports.append(report)
        _report_figures(args, report, index)
    all_equal = all(r.equal for r in reports)
    if args.format == "json":
        print(json.dumps({
            "schema": "schur9/1",
            "cases": [r.to_dict() for r in reports],
            "equal": all_equal,
            "threads": _thread_cap(),
        }))
    else:
        for report in reports:
            _print_report(report, "text")
        print(f"{sum(r.equal for r in reports)}/{len(reports)} equal")
    if args.csv:
        _write_csv(reports, args.csv)
    return 0 if all_equal else 1


def _write_csv(reports: list[VerifyReport], path: str) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(
            ["index", "check", "lambda", "mu", "strip", "n", "qfun", "equal",
             "lhs_terms", "rhs_terms", "elapsed_ms"]
        )
        for index, r in enumerate(reports):
            writer.writerow(
                [index, r.name, r.lam, r.mu, r.strip, r.n, int(r.qfun), int(r.equal),
                 r.lhs_terms, r.rhs_terms, f"{r.elapsed_ms:.3f}"]
            )


def _thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("SCHUR9_THREADS", "1")))
    except ValueError:
        return 1


def cmd_corollary(args) -> int:
    if args.lam is None or args.n is None:
        raise CliError("corollary requires --lambda and --n")
    name = args.name
    hook_at = 0
    if name.startswith("giambelli@"):
        hook_at = int(name.split("@", 1)[1])
        name = "giambelli@"
    if name == "giambelli@":
        lam = Partition.parse(args.lam)
        mu = Partition.parse(args.mu)
        report = verify_schur(lam, mu, StripSpec.parse(f"hook@{hook_at}"), args.n)
        report.name = args.name
    elif name in COROLLARY_DISPATCH:
        qfun = name in Q_COROLLARIES
        cls = StrictPartition if qfun else Partition
        lam = cls.parse(args.lam)
        mu = cls.parse(args.mu)
        report = COROLLARY_DISPATCH[name](lam, mu, args.n)
    else:
        raise CliError(f"unknown corollary {args.name!r}; choose from "
                       f"{', '.join(sorted(COROLLARY_DISPATCH))} or giambelli@M")
    _print_report(report, args.format)
    if name != "giambelli@":
        _report_figures(args, report)
    return 0 if report.equal else 1


def cmd_enumerate(args) -> int:
    if args.lam is None or args.n is None:
        raise CliError("enumerate requires --lambda and --n")
    if args.qfun:
        lam = StrictPartition.parse(args.lam)
        mu = StrictPartition.parse(args.mu)
        shape = ShiftedSkewShape(lam, mu)
        items = enumerate_primed(shape, args.n)
    else:
        lam = Partition.parse(args.lam)
        mu = Partition.parse(args.mu)
        shape = SkewShape(lam, mu)
        items = enumerate_ssyt(shape, args.n)
    count = 0
    shown = 0
    for tab in items:
        count += 1
        if args.show and shown < args.show:
            shown += 1
            if args.qfun:
                cells = " ".join(
                    f"({i},{j})={k}{'~' if primed else ''}"
                    for (i, j), (k, primed) in tab.entries
                )
            else:
                cells = " ".join(f"({i},{j})={k}" for (i, j), k in tab.entries)
            print(cells or "(empty tableau)")
    print(count)
    return 0


def cmd_render(args) -> int:
    if args.lam is None:
        raise CliError("render requires --lambda")
    if args.qfun:
        lam = StrictPartition.parse(args.lam)
        mu = StrictPartition.parse(args.mu)
        shape = ShiftedSkewShape(lam, mu)
    else:
        lam = Partition.parse(args.lam)
        mu = Partition.parse(args.mu)
        shape = SkewShape(lam, mu)
    print(render_shape(shape))
    dec = None
    if args.strip and shape.cells:
        spec = StripSpec.parse(args.strip)
        phi = spec.build(shape)
        print()
        print(render_strip(phi))
        print()
        dec = decompose(shape, phi, kind=spec.kind)
        print(render_decomposition(dec))
    if args.figures:
        from .plots import plot_decomposition, plot_shape, plot_strip

        out = Path(args.figures)
        out.mkdir(parents=True, exist_ok=True)
        if shape.cells:
            plot_shape(shape, out / "shape.png")
        if dec is not None:
            plot_strip(dec.strip, out / "strip.png")
            plot_decomposition(dec, out / "decomposition.png")
    return 0


def cmd_lgv_check(args) -> int:
    if args.lam is None or args.n is None:
        raise CliError("lgv-check requires --lambda and --n")
    qfun = args.qfun
    if qfun:
        lam = StrictPartition.parse(args.lam)
        mu = StrictPartition.parse(args.mu)
        shape = ShiftedSkewShape(lam, mu)
        tableaux = list(enumerate_primed(shape, args.n))
    else:
        lam = Partition.parse(args.lam)
        mu = Partition.parse(args.mu)
        shape = SkewShape(lam, mu)
        tableaux = list(enumerate_ssyt(shape, args.n))
    if not shape.cells:
        print("(empty shape, nothing to check)")
        return 0
    spec = StripSpec.parse(args.strip)
    dec = decompose(shape, spec.build(shape), kind=spec.kind)
    if args.dot and tableaux:
        Path(args.dot).write_text(dot_export(tableau_to_paths(tableaux[0], dec, n=args.n)))
    ok = True
    nonint = 0
    for tab in tableaux:
        pt = tableau_to_paths(tab, dec, n=args.n)
        if not (pt.valid and is_nonintersecting(pt)):
            ok = False
        if paths_to_tableau(pt, dec) != tab:
            ok = False
        atoms = []
        for cell, entry in tab.entries:
            c = cell[1] - cell[0]
            if qfun:
                k, primed = entry
                atoms.append(yvar(k, c) if primed else xvar(k, c))
            else:
                atoms.append(xvar(entry, c))
        if not poly_eq(path_weight(pt, NINTH), monomial(atoms)):
            ok = False
        nonint += 1
    total_fillings = 0
    nonint_fillings = 0
    if shape.size <= args.max_cells:
        for filling in enumerate_fillings(shape, args.n, qfun):
            total_fillings += 1
            pt = tableau_to_paths(filling, dec, n=args.n)
            if pt.valid and is_nonintersecting(pt):
                nonint_fillings += 1
        if nonint_fillings != len(tableaux):
            ok = False
    print(f"tableaux={len(tableaux)} bijection={'ok' if ok else 'FAILED'} "
          f"fillings_checked={total_fillings}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schur9",
        description="Verify ninth-variation Schur/Q outside-decomposition identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--lambda", dest="lam", default=None, help="outer partition, e.g. 5,4,4,2")
        p.add_argument("--mu", dest="mu", default="", help="inner partition (default empty)")
        p.add_argument("--n", type=int, default=None, help="alphabet size")
        p.add_argument("--qfun", action="store_true", help="use shifted shapes and Q-functions")
        p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("verify", help="check the determinant/Pfaffian identity on one shape or a case file")
    common(p)
    p.add_argument("--strip", default=None,
                   help="row|col|hook|hook@M|inner|outer|profile:<cmin>:<EN...>")
    p.add_argument("--perturb", action="store_true",
                   help="debug: bump one matrix entry by +1 (must fail)")
    p.add_argument("--case-file", default=None, help="JSON list of cases to verify")
    p.add_argument("--csv", default=None, help="write a delimited summary of the cases")
    p.add_argument("--figures", default=None, help="directory for matplotlib figures")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corollary", help="check one of the named corollaries")
    p.add_argument("name", help="jt|djt|giambelli|giambelli@M|okada-inner|lp-outer|"
                                "jpn|qcol|q-inner|q-outer")
    common(p)
    p.add_argument("--figures", default=None, help="directory for matplotlib figures")
    p.set_defaults(func=cmd_corollary)

    p = sub.add_parser("enumerate", help="count (and optionally list) tableaux")
    common(p)
    p.add_argument("--show", type=int, default=0, help="print the first SHOW tableaux")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("render", help="ASCII diagrams of the shape, strip and decomposition")
    common(p)
    p.add_argument("--strip", default=None)
    p.add_argument("--figures", default=None, help="directory for matplotlib figures")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("lgv-check", help="run the lattice path bijection checks")
    common(p)
    p.add_argument("--strip", required=True)
    p.add_argument("--max-cells", type=int, default=8,
                   help="cap for the all-fillings characterization oracle")
    p.add_argument("--dot", default=None,
                   help="write a DOT digraph of the first tableau's path tuple")
    p.set_defaults(func=cmd_lgv_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        if getattr(args, "n", None) is not None and args.n < 0:
            raise CliError("--n must be non-negative")
        return args.func(args)
    except (CliError, ContainmentError, ProfileMismatch, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except Exception as exc:  # the contract is to report, never to crash
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
