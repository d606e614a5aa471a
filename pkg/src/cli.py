"""
Command-line surface.

Commands: shape, composition, pattern, tableau, atlas, verify, schema.
Text output goes to stdout, progress to stderr. With --json, stdout carries
a single JSON document with sorted keys.

Exit codes: 0 success, 1 usage or parse error, 2 bound exceeded,
3 verification failure.
"""

import argparse
import json
import os
import sys
from typing import List, Optional

import pandas as pd

import config
from src.combinatorics.linkpatterns import (
    arcs, crossings, in_pi1, is_standard, nesting_violations, tableau_of_pattern,
)
from src.combinatorics.shapes import conjugate, dim_springer_fiber, dim_stabilizer, jordan_type_all_smooth
from src.combinatorics.tableaux import tableau_from_composition, transpose
from src.errors import ParseError, SpringerKitError, VerificationError
from src.geometry.bundles import fiber_bundle_base
from src.geometry.classify import (
    ComponentReport, bc_is_singular, classify_shape, classify_tableau,
)
from src.geometry.orbits import analyze_orbit
from src.reports.arc_diagram import render_ascii, render_html, render_svg
from src.reports.atlas import write_atlas
from src.reports.models import (
    AtlasRecord, AtlasRunReport, CompositionReport, PatternReport, ReportModel, TableauReport,
    VerificationReport, report_schema, to_json, version_stamp,
)
from src.reports.verification import SUITES, run_verification
from src.utils import (
    fmt_check, fmt_optional, fmt_parts, fmt_tableau_grid, parse_composition, parse_partition,
    parse_pattern, parse_tableau,
)


class _Parser(argparse.ArgumentParser):
    """ArgumentParser reporting usage errors as ParseError (exit 1)."""

    def error(self, message):
        raise ParseError(f"{self.prog}: {message}")


def _emit(args, report: ReportModel, lines: List[str]):
    """Print JSON or text, adding the version stamp unless --no-stamp."""
    if args.json:
        report = report.model_copy(update={'tool_version': version_stamp(not args.no_stamp)})
        sys.stdout.write(to_json(report))
        return
    if not args.no_stamp:
        print(f"# {version_stamp()}")
    for line in lines:
        print(line)


def _component_frame(reports: List[ComponentReport]) -> pd.DataFrame:
    rows = [{
        'tableau': str(r.tableau),
        'class': ','.join(r.classes) or '-',
        'verdict': r.singular.verdict.value,
        'bc': fmt_parts(r.bc_composition),
        'base': fmt_parts(r.bundle_base),
    } for r in reports]
    return pd.DataFrame(rows, columns=['tableau', 'class', 'verdict', 'bc', 'base'])


def cmd_shape(args) -> int:
    lam = parse_partition(args.shape)
    classification = classify_shape(lam, jobs=args.jobs)
    summary = classification.summary
    record = AtlasRecord.from_classification(classification, stamp=not args.no_stamp)

    lines = [
        f"Jordan type: {fmt_parts(lam)}  (n = {lam.n})",
        f"Conjugate: {fmt_parts(conjugate(lam))}",
        f"dim B_u = {dim_springer_fiber(lam)}",
        f"dim Z_u = {dim_stabilizer(lam)}",
        f"All components smooth: {fmt_check(jordan_type_all_smooth(lam))}",
        f"Singular component exists: {fmt_check(summary['exists_singular'])}",
        "Components: " + ', '.join(f"{k} {summary[k]}" for k in
                                   ('components', 'BC', 'R', 'genBC', 'genR', 'singular', 'smooth', 'unknown')),
        "",
        _component_frame(classification.reports).to_string(index=False),
    ]
    _emit(args, record, lines)
    return 0


def cmd_composition(args) -> int:
    pi = parse_composition(args.composition)
    t = tableau_from_composition(pi)
    dual = transpose(t)
    verdict = bc_is_singular(pi)
    base = fiber_bundle_base(dual, check=False)

    report = CompositionReport(
        composition=pi.to_list(),
        tableau=t.to_list(),
        singular=verdict.to_dict(),
        dual_tableau=dual.to_list(),
        dual_bundle_base=base,
        dim=dim_springer_fiber(pi.sorted_partition()),
    )
    witness = verdict.witness
    lines = [
        f"Composition: {fmt_parts(pi)}",
        "Bala-Carter tableau T_pi:",
        *fmt_tableau_grid(t.rows),
        f"dim = {report.dim}",
        f"Verdict: {verdict.verdict.value}"
        + (f" (contains {fmt_parts(witness['pattern'])} at positions {fmt_parts(witness['indices'])})"
           if witness else ""),
        "Dual tableau (Richardson component):",
        *fmt_tableau_grid(dual.rows),
        f"Dual bundle base: {fmt_parts(base)}",
    ]
    _emit(args, report, lines)
    return 0


def cmd_pattern(args) -> int:
    pattern = parse_pattern(args.pattern)
    t = tableau_of_pattern(pattern)
    info = analyze_orbit(pattern)
    cross = crossings(pattern)
    nested = nesting_violations(pattern)

    if args.render == 'html':
        if not args.out:
            raise ParseError("--render html requires --out FILE")
        render_html(pattern, args.out)
        print(f"✓ Wrote {args.out}", file=sys.stderr)
    elif args.render == 'svg' and args.out:
        with open(args.out, 'w', encoding='utf-8', newline='\n') as f:
            f.write(render_svg(pattern))
        print(f"✓ Wrote {args.out}", file=sys.stderr)

    report = PatternReport(
        pattern=pattern.to_dict(),
        jordan_type=pattern.jordan_type.to_list(),
        arcs=[list(a) for a in arcs(pattern)],
        crossings=[list(c) for c in cross],
        nesting_violations=[[list(a), list(b)] for a, b in nested],
        in_pi0=is_standard(pattern),
        in_pi1=in_pi1(pattern),
        tableau=t.to_list(),
        orbit=info.to_dict(),
    )
    lines = [
        f"Pattern: {pattern}  (n = {pattern.n}, type {fmt_parts(pattern.jordan_type)})",
        f"Arcs: {' '.join(f'{a}-{b}' for a, b in arcs(pattern)) or '-'}",
        f"Crossings: {' '.join(f'({i},{j})' for i, j in cross) or 'none'}",
        f"Nesting violations: {'; '.join(f'{fmt_parts(a)} inside {fmt_parts(b)}' for a, b in nested) or 'none'}",
        f"Standard (Pi^0): {fmt_check(report.in_pi0)}",
        f"Pi^1: {fmt_check(report.in_pi1)}",
        "Tableau T_pi:",
        *fmt_tableau_grid(t.rows),
        f"|A(pi)| = {info.stab_dim}",
        f"orbit dim = {info.orbit_dim}, dim B_u = {info.springer_dim}, codimension = {info.codimension}",
        f"Dense orbit: {fmt_check(info.dense)}",
    ]
    if args.render == 'ascii':
        lines += ["", render_ascii(pattern)]
    elif args.render == 'svg' and not args.out:
        lines += ["", render_svg(pattern).rstrip('\n')]
    _emit(args, report, lines)
    return 0


def cmd_tableau(args) -> int:
    t = parse_tableau(args.tableau)
    report = classify_tableau(t)
    payload = TableauReport.model_validate(report.to_dict())
    verdict = report.singular
    lines = [
        f"Tableau: {t}",
        *fmt_tableau_grid(t.rows),
        f"Shape: {fmt_parts(report.shape)}, dim = {report.dim}",
        f"Classes: {', '.join(report.classes) or 'none'}",
        f"Bala-Carter composition: {fmt_parts(report.bc_composition)}",
        f"Richardson composition: {fmt_parts(report.richardson_composition)}",
        f"Dense pattern: {fmt_optional(report.gen_bc_pattern)}",
        f"Verdict: {verdict.verdict.value} ({verdict.provenance.value})",
        f"Bundle base: {fmt_parts(report.bundle_base)}",
    ]
    _emit(args, payload, lines)
    return 0


def cmd_atlas(args) -> int:
    paths = write_atlas(args.max_n, args.out_dir, stamp=not args.no_stamp, jobs=args.jobs,
                        verbose=not args.json)
    payload = AtlasRunReport(out_dir=args.out_dir, files=[os.path.basename(p) for p in paths])
    lines = [f"✓ Wrote {len(paths) - 1} shape files and index.json to {args.out_dir}"]
    _emit(args, payload, lines)
    return 0


def cmd_verify(args) -> int:
    summary = run_verification(args.suite, args.max_n, jobs=args.jobs, verbose=not args.json)
    frame = summary.frame()
    lines = [frame.to_string(index=False) if not frame.empty else "(no shapes)"]
    if summary.passed:
        lines.append(f"✓ All checks passed (max n = {args.max_n})")
    else:
        lines.append(f"✗ First counterexample: {summary.first_counterexample}")
    _emit(args, VerificationReport.model_validate(summary.to_dict()), lines)
    if not summary.passed:
        raise VerificationError(summary.first_counterexample)
    return 0


def cmd_schema(args) -> int:
    text = json.dumps(report_schema(), sort_keys=True, indent=2) + '\n'
    if args.out:
        with open(args.out, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
        print(f"✓ Wrote {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument('--json', action='store_true', help='Emit a JSON document on stdout')
    common.add_argument('--no-stamp', action='store_true', help='Omit the tool version stamp')

    parser = _Parser(prog=config.TOOL_NAME,
                     description='Components of Springer fibers: classification, orbits and oracle checks.')
    parser.add_argument('--version', action='version', version=version_stamp())
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('shape', parents=[common], help='Classify every component of a Jordan type')
    p.add_argument('shape', help='Partition, e.g. "2,2,1,1"')
    p.add_argument('--jobs', type=int, default=config.JOBS)
    p.set_defaults(func=cmd_shape)

    p = sub.add_parser('composition', parents=[common], help='Bala-Carter component of a composition')
    p.add_argument('composition', help='Composition, e.g. "1,2,2,1"')
    p.set_defaults(func=cmd_composition)

    p = sub.add_parser('pattern', parents=[common], help='Analyze a link pattern')
    p.add_argument('pattern', help='Blocks separated by "|", e.g. "1 2 5 | 3 8 | 6 7 | 4"')
    p.add_argument('--render', choices=['ascii', 'svg', 'html'], default=None)
    p.add_argument('--out', default=None, help='Output file for svg/html rendering')
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser('tableau', parents=[common], help='Classify the component of a tableau')
    p.add_argument('tableau', help='Rows separated by "/", e.g. "1 3 / 2 5 / 4 / 6"')
    p.set_defaults(func=cmd_tableau)

    p = sub.add_parser('atlas', parents=[common], help='Write JSON reports for all shapes up to max n')
    p.add_argument('--max-n', type=int, required=True)
    p.add_argument('--out-dir', required=True)
    p.add_argument('--jobs', type=int, default=config.JOBS)
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser('verify', parents=[common], help='Run property sweeps against the oracle')
    p.add_argument('--suite', choices=list(SUITES) + ['all'], default='all')
    p.add_argument('--max-n', type=int, default=6)
    p.add_argument('--jobs', type=int, default=config.JOBS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('schema', parents=[common], help='Print or write the report JSON schema')
    p.add_argument('--out', default=None)
    p.set_defaults(func=cmd_schema)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except SpringerKitError as e:
        print(f"✗ Error: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"✗ Error: {e}", file=sys.stderr)
        return 1
