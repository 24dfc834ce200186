"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 lemma counterexample,
3 budget or enumeration ceiling exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import tempfile
from collections import Counter
from pathlib import Path
from typing import Sequence

from . import critical, lemma, parabolic, rootdata, weyl

EXIT_OK, EXIT_USAGE, EXIT_COUNTEREXAMPLE, EXIT_BUDGET = 0, 1, 2, 3
OUTPUT_DIR_ENV = "ORTHOCRIT_OUTPUT_DIR"

log = logging.getLogger("orthocrit")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return list(rootdata.Weight.parse(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _pair(text: str) -> tuple[int, int]:
    vals = _int_list(text)
    if len(vals) != 2:
        raise argparse.ArgumentTypeError(f"expected two integers LO,HI, got {text!r}")
    return vals[0], vals[1]


def _d_window(text: str):
    return "auto" if text == "auto" else _pair(text)


def write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def _output_dir() -> Path:
    return Path(os.environ.get(OUTPUT_DIR_ENV) or ".")


def _resolve(path: str | None) -> Path | None:
    if path is None:
        return None
    p = Path(path)
    return p if p.is_absolute() else _output_dir() / p


def _dumps(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


# ---------------------------------------------------------------- reports

def report_roots(args) -> dict:
    return rootdata.build_root_system(args.rank).to_json()


def report_weyl(args) -> dict:
    rs = rootdata.build_root_system(args.rank)
    hist = Counter()
    elements = []
    for w in weyl.enumerate_group(args.rank, args.ceiling):
        ell = weyl.length(w, rs)
        hist[ell] += 1
        if args.list:
            elements.append(dict(w.to_json(), length=ell))
    out = {
        "rank": args.rank,
        "order": sum(hist.values()),
        "expected_order": weyl.group_order(args.rank),
        "length_distribution": [hist[i] for i in range(max(hist) + 1)],
    }
    if args.list:
        out["elements"] = elements
    return out


def report_kostant(args) -> dict:
    p = parabolic.build_parabolic(args.ambient_rank, args.delete)
    return parabolic.kostant_reps(p, args.method, args.ceiling).to_json()


def _so_data(args) -> critical.SOWeightData:
    return critical.SOWeightData(args.n, rootdata.Weight(tuple(args.mu)))


def report_critical(args) -> dict:
    if args.rankin_selberg is not None:
        k, l = args.rankin_selberg
        return {"k": k, "l": l, "critical_set": list(critical.critical_set_rankin_selberg(k, l))}
    if args.n is None or args.mu is None:
        raise UsageError("critical-set needs --n and --mu (or --rankin-selberg K,L)")
    w = _so_data(args)
    return {"n": w.n, "mu": w.mu.to_json(), "critical_set": list(critical.critical_set_so(w)),
            "cohomological_degree": critical.cohomological_degree(w.n)}


def report_ratios(args) -> dict:
    w = _so_data(args)
    if args.d is not None:
        lo = hi = args.d
    else:
        lo, hi = lemma.auto_d_window(w.n, w.mu)
    rows = []
    for d in range(lo, hi + 1):
        pair = critical.ratio_argument_map(critical.TwistData(d), w)
        rows.append({"d": d, "pair": list(pair) if pair else None})
    return {"n": w.n, "mu": w.mu.to_json(),
            "successive_pairs": [list(p) for p in critical.successive_pairs(w)],
            "ratios": rows}


def _text(command: str, payload: dict) -> str:
    if command == "roots":
        lines = [f"D{payload['rank']}: {payload['num_roots']} roots, "
                 f"{payload['num_positive_roots']} positive",
                 f"simple roots: {payload['simple_roots']}",
                 f"rho = {payload['rho']}"]
    elif command == "weyl":
        lines = [f"|W(D{payload['rank']})| = {payload['order']}",
                 f"length distribution: {payload['length_distribution']}"]
        lines += [f"  {e['perm']} {e['signs']} length {e['length']}" for e in payload.get("elements", [])]
    elif command == "kostant":
        lines = [f"W^P for D{payload['ambient_rank']}, deleted {payload['deleted']}: "
                 f"count {payload['count']} ({payload['method']})",
                 f"lengths: {[r['length'] for r in payload['reps']]}"]
        lines += [f"  perm {r['perm']} signs {r['signs']} length {r['length']}" for r in payload["reps"]]
    elif command == "critical-set":
        lines = [f"critical set: {payload['critical_set']}"]
        if "cohomological_degree" in payload:
            lines.append(f"cohomological degree q0 = {payload['cohomological_degree']}")
    elif command == "ratios":
        lines = [f"successive pairs: {payload['successive_pairs']}"]
        lines += [f"  d = {r['d']}: {r['pair'] if r['pair'] else '-'}" for r in payload["ratios"]]
    elif command == "verify-lemma":
        lines = [f"{len(payload['counterexamples'])} counterexamples / {payload['instances']} instances",
                 f"agreements: {payload['agreements']}",
                 f"uniqueness ok: {payload['uniqueness_ok']}",
                 f"ratio coverage ok: {payload['ratio_coverage_ok']}"]
        if payload.get("runtime_ms") is not None:
            lines.append(f"runtime: {payload['runtime_ms']} ms")
        if payload.get("complete") is False:
            lines.append("INCOMPLETE: budget exceeded")
        if "exploratory" in payload:
            ex = payload["exploratory"]
            lines.append(f"odd n (exploratory, not asserted): {len(ex['counterexamples'])} "
                         f"counterexamples / {ex['instances']} instances")
    else:  # pragma: no cover
        lines = [json.dumps(payload)]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", help=f"also write the JSON report here "
                        f"(relative paths resolve against ${OUTPUT_DIR_ENV})")
    common.add_argument("--ceiling", type=int, default=weyl.DEFAULT_ENUMERATION_CEILING,
                        help="largest rank for full Weyl group enumeration")

    parser = _Parser(prog="orthocrit", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("roots", parents=[common], help="type-D root system")
    p.add_argument("--rank", type=int, required=True)

    p = sub.add_parser("weyl", parents=[common], help="enumerate W(D_r)")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--list", action="store_true", help="list every element")

    p = sub.add_parser("kostant", parents=[common], help="Kostant representatives")
    p.add_argument("--ambient-rank", type=int, required=True)
    p.add_argument("--delete", type=_int_list, default=[1],
                   help="comma-separated simple-root indices to delete (default 1)")
    p.add_argument("--method", choices=("auto", "brute-force", "direct"), default="auto")

    for name, help_ in (("critical-set", "critical set of L(s, chi0 x sigma)"),
                        ("ratios", "twist d -> successive critical pair")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--n", type=int)
        p.add_argument("--mu", type=_int_list, help="comma-separated, e.g. 3,2 or 3,-2")
        if name == "critical-set":
            p.add_argument("--rankin-selberg", type=_pair, metavar="K,L")
        else:
            p.add_argument("--d", type=int)

    p = sub.add_parser("verify-lemma", parents=[common], help="exhaustive lemma sweep")
    p.add_argument("--n", type=int, action="append", required=True,
                   help="repeatable; even values only unless --explore-odd")
    p.add_argument("--mu-max", type=int, required=True)
    p.add_argument("--d-window", type=_d_window, default="auto",
                   help="'auto' or LO,HI (write --d-window=-10,6 for negative LO)")
    p.add_argument("--method", choices=("direct", "brute-force"), default="direct",
                   help="how W^P is built for condition (3)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-instances", type=int, default=lemma.DEFAULT_MAX_INSTANCES)
    p.add_argument("--explore-odd", action="store_true",
                   help="allow odd n; reported, never asserted")
    p.add_argument("--timing", action="store_true",
                   help="record runtime_ms (otherwise null, keeping output reproducible)")
    p.add_argument("--counterexamples", default="lemma_counterexamples.json",
                   help="where disagreements are persisted")
    return parser


def _emit(args, payload: dict) -> None:
    text = _dumps(payload) if args.format == "json" else _text(args.command, payload)
    sys.stdout.write(text)
    out = _resolve(args.output)
    if out is not None:
        write_atomic(out, _dumps(payload))


def _verify(args) -> int:
    for n in args.n:
        if n % 2 and not args.explore_odd:
            raise UsageError(f"n = {n} is odd; the lemma is stated for even n (use --explore-odd)")
    spec = lemma.SweepSpec(tuple(args.n), args.mu_max, args.d_window,
                           allow_odd=args.explore_odd, method=args.method)
    try:
        report = lemma.verify_equivalence(spec, args.max_instances, args.jobs)
    except lemma.SweepBudgetExceeded as exc:
        report = exc.partial
        if not args.timing:
            report.runtime_ms = None
        checkpoint = _resolve(args.output) or _output_dir() / "lemma_checkpoint.json"
        write_atomic(checkpoint, _dumps(report.to_json()))
        print(f"error: {exc}; partial report in {checkpoint}", file=sys.stderr)
        return EXIT_BUDGET
    if not args.timing:
        report.runtime_ms = None
    _emit(args, report.to_json())
    if not report.ok:
        path = _resolve(args.counterexamples)
        write_atomic(path, _dumps({
            "counterexamples": [r.to_json() for r in report.counterexamples],
            "coverage_failures": report.coverage_failures,
            "uniqueness_ok": report.uniqueness_ok,
        }))
        print(f"lemma violated; details in {path}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


_REPORTS = {
    "roots": report_roots,
    "weyl": report_weyl,
    "kostant": report_kostant,
    "critical-set": report_critical,
    "ratios": report_ratios,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        if args.command == "verify-lemma":
            return _verify(args)
        if args.command == "ratios" and (args.n is None or args.mu is None):
            raise UsageError("ratios needs --n and --mu")
        _emit(args, _REPORTS[args.command](args))
        return EXIT_OK
    except weyl.EnumerationTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
