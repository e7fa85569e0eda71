"""Command-line entry point.

Exit codes: 0 all requested checks passed, 1 some check failed,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from almg import core, fileio, geometry, intervals, models, report, search
from almg.core import AlgebraError
from almg.fileio import AlgebraFormatError


def _timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0


def _emit(doc, as_json):
    if as_json:
        sys.stdout.write(report.dumps_json(doc))
    else:
        sys.stdout.write(report.render_text(doc))


def _input_desc(path, alg):
    return {
        "path": str(path),
        "format": fileio.HEADER,
        "size": alg.size,
        "zero": alg.zero,
        "partial": alg.is_partial,
    }


def cmd_check(args) -> int:
    alg = fileio.load(args.file)
    entries = []
    timing = {}
    cls, dt = _timed(core.classify, alg, args.witness_cap)
    timing["classify_s"] = dt
    order = ["lattice", "monoid", "metric", "contractions", "axiom2", "axiom4", "semiregular"]
    entries.extend(cls.reports[name] for name in order)
    if args.distributivity:
        rep, dt = _timed(core.check_add_distributive, alg, args.witness_cap)
        timing[rep.name + "_s"] = dt
        entries.append(rep)
    if args.drl:
        rep, dt = _timed(core.is_drl_compatible, alg, args.witness_cap)
        timing[rep.name + "_s"] = dt
        entries.append(rep)
    passed = all(e.passed for e in entries)
    doc = report.build_document(
        "check", _input_desc(args.file, alg), entries, timing,
        sections={"classification": cls.flags()}, passed=passed)
    _emit(doc, args.json)
    return 0 if passed else 1


PREDICATES = ("M", "L", "fixty")


def _eval_predicate(alg, name, params):
    if name == "M" and len(params) == 3:
        return geometry.metric_between(alg, *params)
    if name == "L" and len(params) == 3:
        return geometry.lattice_between(alg, *params)
    if name == "fixty" and len(params) == 3:
        return geometry.has_fixty(alg, geometry.Triangle(*params))
    raise AlgebraError(
        f"unknown predicate {name!r} or wrong arity; available: "
        + ", ".join(f"{p} a b c" for p in PREDICATES))


def cmd_geometry(args) -> int:
    alg = fileio.load(args.file)
    if args.predicate:
        name, *rest = args.predicate
        try:
            params = [int(x) for x in rest]
        except ValueError:
            raise AlgebraError(f"predicate arguments must be integers: {rest}") from None
        value = _eval_predicate(alg, name, params)
        doc = report.build_document(
            "geometry", _input_desc(args.file, alg), [], {},
            sections={"predicate": {"name": name, "args": params,
                                    "value": "undefined" if value is None else value}})
        if args.json:
            _emit(doc, True)
        else:
            sys.stdout.write(("undefined" if value is None else str(value).lower()) + "\n")
        return 0
    suite, dt = _timed(geometry.run_theorem_suite, alg, args.witness_cap,
                       args.tuple_scan_limit)
    entries = list(suite.reports.values()) + list(suite.findings.values())
    flags = {
        "al_monoid": suite.classification.al_monoid,
        "is_chain": suite.is_chain,
        "has_t1": suite.has_t1,
        "has_t2": suite.has_t2,
        "is_ptolemaic": suite.is_ptolemaic,
        "is_metrically_convex": suite.is_metrically_convex,
        "theorems_passed": suite.theorems_passed,
    }
    sections = {
        "flags": flags,
        "atoms": list(suite.atoms),
        "fixty_total": suite.fixty_total,
        "theorems": list(suite.theorem_names),
    }
    passed = suite.theorems_passed is not False
    doc = report.build_document(
        "geometry", _input_desc(args.file, alg), entries,
        {"suite_s": dt}, sections=sections, passed=passed)
    _emit(doc, args.json)
    return 0 if passed else 1


def _write_result_files(result, out_dir):
    files = []
    if out_dir:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, alg in enumerate(result.algebras):
            path = out / f"almg_n{result.size}_{i:04d}.alg"
            fileio.dump(alg, path)
            files.append(str(path))
        summary = {
            "size": result.size,
            "found": result.found,
            "emitted": len(result.algebras),
            "nodes_expanded": result.nodes_expanded,
            "pruned": result.pruned,
            "dedup_collapsed": result.dedup_collapsed,
            "exhausted": result.exhausted,
            "files": files,
        }
        (out / "summary.json").write_text(report.dumps_json(summary), encoding="utf-8")
    return files


def _result_sections(result, files):
    return {
        "result": {
            "found": result.found,
            "emitted": len(result.algebras),
            "nodes_expanded": result.nodes_expanded,
            "pruned": result.pruned,
            "dedup_collapsed": result.dedup_collapsed,
            "exhausted": result.exhausted,
        },
        "canonical_forms": [f.hex() for f in result.forms],
        "files": files,
    }


def cmd_enumerate(args) -> int:
    result, dt = _timed(search.enumerate_al_monoids, args.size, args.budget,
                        not args.no_dedup, args.threads)
    files = _write_result_files(result, args.out)
    doc = report.build_document(
        "enumerate", {"descriptor": f"size={args.size}", "size": args.size},
        [], {"search_s": dt}, sections=_result_sections(result, files))
    _emit(doc, args.json)
    return 0


def _axiom_set(text):
    return frozenset(x for x in (part.strip() for part in text.split(",")) if x)


def cmd_search(args) -> int:
    spec = search.SearchSpec(
        size=args.size,
        require=_axiom_set(args.require),
        violate=_axiom_set(args.violate),
        budget=args.budget,
        dedup=not args.no_dedup,
    )
    result, dt = _timed(search.search_counterexample, spec, args.threads,
                        not args.all)
    files = _write_result_files(result, args.out)
    sections = _result_sections(result, files)
    sections["spec"] = {
        "size": spec.size,
        "require": sorted(spec.require),
        "violate": sorted(spec.violate),
        "budget": spec.budget,
        "dedup": spec.dedup,
    }
    doc = report.build_document(
        "search", {"descriptor": f"size={args.size}", "size": args.size},
        [], {"search_s": dt}, sections=sections)
    _emit(doc, args.json)
    return 0


INTERVAL_DEMOS = ("ex", "fixty")
INTERVAL_OPS = ("star", "union", "intersect", "axiom2")


def cmd_intervals(args) -> int:
    what, *rest = args.args
    if what in INTERVAL_DEMOS:
        if rest:
            raise AlgebraError(f"demo {what!r} takes no arguments")
        rep, dt = _timed(intervals.demo_axiom4_failure if what == "ex"
                         else intervals.demo_fixty_nonzero_meet)
        doc = report.build_document(
            "intervals", {"descriptor": what}, [rep], {"demo_s": dt},
            passed=rep.passed)
        _emit(doc, args.json)
        return 0 if rep.passed else 1
    if what in INTERVAL_OPS:
        if len(rest) != 2:
            raise AlgebraError(f"operation {what!r} takes two interval literals")
        try:
            a = intervals.IntervalSet.parse(rest[0])
            b = intervals.IntervalSet.parse(rest[1])
        except ValueError as exc:
            raise AlgebraError(str(exc)) from None
        if what == "axiom2":
            rep = intervals.iv_check_axiom2_sample([(a, b)])
            doc = report.build_document(
                "intervals", {"descriptor": "axiom2"}, [rep], {}, passed=rep.passed)
            _emit(doc, args.json)
            return 0 if rep.passed else 1
        fn = {"star": intervals.iv_star, "union": intervals.iv_union,
              "intersect": intervals.iv_intersect}[what]
        value = fn(a, b)
        if args.json:
            doc = report.build_document(
                "intervals", {"descriptor": what}, [], {},
                sections={"operands": [str(a), str(b)], "value": str(value)})
            _emit(doc, True)
        else:
            sys.stdout.write(str(value) + "\n")
        return 0
    raise AlgebraError(
        f"unknown intervals command {what!r}; demos: {', '.join(INTERVAL_DEMOS)}; "
        f"operations: {', '.join(f'{op} A B' for op in INTERVAL_OPS)}")


def cmd_model(args) -> int:
    if args.family == "product":
        if not args.factor:
            raise AlgebraError("product needs at least one --factor spec")
        spec = models.ModelSpec(
            "product", factors=tuple(models.ModelSpec.parse(f) for f in args.factor))
    elif args.family == "boolean":
        spec = models.ModelSpec("boolean", k=args.k)
    elif args.family == "chain":
        spec = models.ModelSpec("chain", n=args.n, mode=args.mode)
    elif args.family == "z-u":
        spec = models.ModelSpec("z-u", radius=args.window, u_bottom=args.u_bottom)
    else:
        spec = models.ModelSpec("z-uv", radius=args.window)
    alg = spec.build()
    sys.stdout.write(fileio.dumps(alg))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="almg",
        description="Finite-model checks, geometry suite, and enumeration "
                    "for autometrized lattice-ordered monoids.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--witness-cap", type=int, default=core.DEFAULT_WITNESS_CAP,
                       help="max witnesses kept per check (totals stay exact)")
        p.add_argument("--threads", type=int, default=1,
                       help="worker cap for partitionable work; output is identical "
                            "for any value")

    p = sub.add_parser("check", help="run the structural axiom checks on an algebra file")
    p.add_argument("file")
    common(p)
    p.add_argument("--distributivity", action="store_true",
                   help="also check that add distributes over join and meet")
    p.add_argument("--drl", action="store_true",
                   help="also check the least-difference compatibility of star")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("geometry", help="run the theorem suite or evaluate one predicate")
    p.add_argument("file")
    common(p)
    p.add_argument("--predicate", nargs="+", metavar=("NAME", "ARG"),
                   help="evaluate a single predicate: M a x b | L a b c | fixty a b c")
    p.add_argument("--tuple-scan-limit", type=int, default=8,
                   help="carrier bound for the factorial B/D-linearity subset scan")
    p.set_defaults(fn=cmd_geometry)

    p = sub.add_parser("enumerate", help="enumerate all AL-monoids of a given size")
    common(p)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--budget", type=int, default=search.DEFAULT_BUDGET)
    p.add_argument("--no-dedup", action="store_true",
                   help="emit every labeled algebra instead of isomorphism classes")
    p.add_argument("--out", help="directory for emitted algebra files")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("search", help="search for algebras meeting require/violate axiom sets")
    common(p)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--require", default="", help="comma-separated axiom names")
    p.add_argument("--violate", default="", help="comma-separated axiom names")
    p.add_argument("--budget", type=int, default=search.DEFAULT_BUDGET)
    p.add_argument("--no-dedup", action="store_true")
    p.add_argument("--all", action="store_true",
                   help="collect every match instead of stopping at the first")
    p.add_argument("--out", help="directory for emitted algebra files")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("intervals", help="closed-sets model demos and operations")
    common(p)
    p.add_argument("args", nargs="+",
                   help="ex | fixty | star A B | union A B | intersect A B | axiom2 A B")
    p.set_defaults(fn=cmd_intervals)

    p = sub.add_parser("model", help="emit a model family instance as an algebra file")
    p.add_argument("family", choices=["boolean", "chain", "z-u", "z-uv", "product"])
    p.add_argument("--k", type=int, default=2, help="boolean: bitmask width")
    p.add_argument("--n", type=int, default=3, help="chain: number of elements")
    p.add_argument("--mode", choices=list(models.CHAIN_MODES), default="truncated",
                   help="chain: add is the truncated sum or the join")
    p.add_argument("--window", type=int, default=8, help="window radius")
    p.add_argument("--u-bottom", action="store_true",
                   help="z-u: place u below all integers instead of leaving it unordered")
    p.add_argument("--factor", action="append", default=[],
                   help="product factor spec, e.g. boolean:2 or chain:3:max (repeatable)")
    p.set_defaults(fn=cmd_model)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except AlgebraFormatError as exc:
        print(f"almg: parse error: {exc}", file=sys.stderr)
        return 2
    except AlgebraError as exc:
        print(f"almg: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"almg: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
