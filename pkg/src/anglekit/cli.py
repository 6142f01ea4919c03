"""Command-line interface.

Exit codes: 0 success, 1 input or usage error, 2 unresolved at the precision cap.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__, catalog
from . import io as aio
from .angles import Mode
from .census import census
from .errors import AngleKitError
from .render_text import format_value
from .report import Certification

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_UNRESOLVED = 2


class UsageError(Exception):
    pass


def _load(args) -> tuple[str, object]:
    """Configuration from --catalog or --config, with a display name."""
    if getattr(args, "catalog", None) and getattr(args, "config", None):
        raise UsageError("give either --catalog or --config, not both")
    if getattr(args, "catalog", None):
        entry = catalog.get(args.catalog)
        return entry.name, entry.config
    if getattr(args, "config", None):
        cfg = aio.load_config(args.config)
        return cfg.name or Path(args.config).stem, cfg
    raise UsageError("one of --catalog or --config is required")


def _emit(args, command: str, params: dict, payload, seed=None):
    path = getattr(args, "json", None)
    if path:
        aio.write_report(aio.report(command, params, payload, seed), path)


def _range(text: str) -> tuple[int, int]:
    parts = text.split("..")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise UsageError(f"bad range {text!r}; use A..B") from None
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


# -- commands ---------------------------------------------------------------------------


def cmd_count(args) -> int:
    name, cfg = _load(args)
    mode = Mode.IncludeZero if args.include_zero else Mode.ExcludeZero
    rep = census(cfg, mode)
    print(rep.summary())
    _emit(args, "count", {"source": name, "include_zero": args.include_zero}, rep)
    return EXIT_UNRESOLVED if rep.certification is Certification.Unresolved else EXIT_OK


def cmd_verify(args) -> int:
    results = []
    if args.config:
        for path in args.config:
            cfg = aio.load_config(path)
            results.append(catalog.verify_config(cfg, name=cfg.name or Path(path).stem))
    targets = args.catalog or ([] if args.config else ["all"])
    for t in targets:
        entries = catalog.all_entries() if t == "all" else [catalog.get(t)]
        results.extend(catalog.verify_entry(e) for e in entries)
    worst = EXIT_OK
    for r in results:
        status = r.report.certification.value
        if r.twin is not None:
            status += f", decimal twin {r.twin.certification.value}"
        count = r.report.count
        count_s = f"{count[0]}..{count[1]}" if isinstance(count, tuple) else str(count)
        mark = "OK" if r.ok else "FAIL"
        noun = "angle" if count == 1 else "angles"
        print(f"{mark:4} {r.name}: {r.points} points, {count_s} distinct {noun}, {status}")
        if not r.ok:
            print(f"     {r.message}")
            unresolved = r.report.certification is Certification.Unresolved
            worst = max(worst, EXIT_UNRESOLVED if unresolved and worst != EXIT_INPUT else EXIT_INPUT)
    passed = sum(r.ok for r in results)
    print(f"{passed}/{len(results)} verified")
    _emit(
        args,
        "verify",
        {"catalog": targets, "config": args.config or []},
        [{"name": r.name, "ok": r.ok, "message": r.message, "points": r.points, "census": r.report, "twin": r.twin} for r in results],
    )
    return worst


def cmd_bounds(args) -> int:
    if args.k is not None and args.range:
        raise UsageError("give either --k or --range")
    lo, hi = (args.k, args.k) if args.k is not None else _range(args.range or "1..10")
    rows = [catalog.bounds(k) for k in range(lo, hi + 1)]
    if args.table or len(rows) > 1:
        print(f"{'k':>4} {'lower':>6} {'upper':>6} {'exact':>6} {'conj':>6}")
        for b in rows:
            exact = str(b.exact) if b.exact is not None else "-"
            print(f"{b.k:>4} {b.lower:>6} {b.upper:>6} {exact:>6} {catalog.conjectured(b.k):>6}")
    else:
        b = rows[0]
        line = f"k={b.k}: lower {b.lower}, upper {b.upper}"
        if b.exact is not None:
            line += f", exact {b.exact}"
        print(line)
    _emit(args, "bounds", {"k": args.k, "range": args.range}, rows)
    return EXIT_OK


def cmd_render(args) -> int:
    from .svg import render_svg

    name, cfg = _load(args)
    svg = render_svg(cfg, annotate_angles=args.annotate_angles, title=name)
    if args.output == "-":
        sys.stdout.write(svg)
    else:
        try:
            Path(args.output).write_text(svg)
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc}") from exc
        print(f"wrote {args.output} ({len(cfg)} points)")
    return EXIT_OK


def cmd_search_extend(args) -> int:
    from .search.extend import GridUniverse, extend_search

    if args.base and args.config:
        raise UsageError("give either --base or --config")
    if args.base:
        name, cfg = args.base, catalog.get(args.base).config
    elif args.config:
        cfg = aio.load_config(args.config)
        name = cfg.name or Path(args.config).stem
    else:
        raise UsageError("--base or --config is required")
    grid = GridUniverse(args.box, args.divisions)
    res = extend_search(cfg, args.k, grid, args.refine_eps, threads=args.threads)
    print(f"base {name}, k={args.k}: {len(res.certified_points)} certified points")
    for i, c in enumerate(res.certified_points):
        x, y = c.to_float()
        print(f"  [{i}] ({c.point.x}, {c.point.y})  ~ ({x:.6f}, {y:.6f})  census {c.census_count}")
    if res.uncertified:
        print(f"{len(res.uncertified)} uncertified hits (numeric only):")
        for x, y in res.uncertified:
            print(f"  ({x:.12f}, {y:.12f})")
    pairs = sorted((i, j) for i, js in res.compatibility.items() for j in js if i < j)
    print("compatible pairs: " + (", ".join(f"{i}-{j}" for i, j in pairs) or "none"))
    print(f"max compatible size {res.max_compatible_size}: " + ", ".join(str(list(s)) for s in res.max_compatible_sets))
    payload = {
        "certified_points": [
            {"point": c.point, "field": c.field, "census_count": c.census_count, "status": c.status, "approx": c.to_float()}
            for c in res.certified_points
        ],
        "uncertified": res.uncertified,
        "compatibility": res.compatibility,
        "max_compatible_sets": res.max_compatible_sets,
        "max_compatible_size": res.max_compatible_size,
        "maximal_configs": res.maximal_configs,
        "detail": res.detail,
    }
    params = {"base": name, "k": args.k, "box": args.box, "divisions": args.divisions, "refine_eps": args.refine_eps}
    _emit(args, "search extend", params, payload)
    return EXIT_OK


def cmd_search_subset(args) -> int:
    from .search.subset import subset_search
    from .search.universe import parse_universes

    mode = Mode.IncludeZero if args.include_zero else Mode.ExcludeZero
    out = []
    for u in parse_universes(args.universe):
        res = subset_search(u, args.k, mode, threads=args.threads)
        print(f"{u.name}: k={args.k}, best {res.best_size}, {len(res.witnesses)} witness(es) up to symmetry, {res.nodes_explored} nodes")
        for w, rep in zip(res.witnesses[: args.show], res.reports):
            pts = " ".join(str(u.config.points[i]) for i in w)
            vals = ", ".join(format_value(v) for v in rep.values)
            print(f"  {{{pts}}}  angles: {vals}")
        out.append(
            {
                "universe": u.name,
                "best_size": res.best_size,
                "nodes_explored": res.nodes_explored,
                "witnesses": [
                    {"indices": list(w), "points": [u.config.points[i] for i in w], "census": rep}
                    for w, rep in zip(res.witnesses, res.reports)
                ],
            }
        )
    _emit(args, "search subset", {"universe": args.universe, "k": args.k, "include_zero": args.include_zero}, out)
    return EXIT_OK


def cmd_search_falsify(args) -> int:
    from .search.falsify import falsify_quad_lemma

    res = falsify_quad_lemma(args.trials, args.seed, args.tol)
    print(f"{res.trials} trials (seed {res.seed}, tol {res.tol:g})")
    print(f"  converged to <= 3 angles: {res.converged}")
    for fam, n in res.families.items():
        print(f"    {fam}: {n}")
    print(f"  stuck above 3 angles: {res.stuck}")
    print(f"  degenerate: {res.degenerate}, non-convex: {res.nonconvex}")
    print(f"  counterexamples: {len(res.counterexamples)}")
    for c in res.counterexamples:
        print(f"    trial {c.trial}: {c.points} distances {c.distances}")
    _emit(args, "search falsify", {"trials": args.trials, "tol": args.tol}, res, seed=args.seed)
    return EXIT_OK


def cmd_search_probe(args) -> int:
    from .search.probe import conjecture_probe
    from .search.universe import parse_universes

    universes = [u for desc in args.universe for u in parse_universes(desc)]
    rows = conjecture_probe(args.kmax, universes, threads=args.threads)
    print(f"{'k':>3} {'best':>5} {'conj':>5} {'lower':>6} {'upper':>6} {'exact':>6}  {'universe':<16} status")
    for r in rows:
        exact = str(r.exact) if r.exact is not None else "-"
        print(f"{r.k:>3} {r.best:>5} {r.conjectured:>5} {r.lower:>6} {r.upper:>6} {exact:>6}  {r.universe:<16} {r.status}")
    payload = [
        {
            "k": r.k,
            "best": r.best,
            "universe": r.universe,
            "conjectured": r.conjectured,
            "lower": r.lower,
            "upper": r.upper,
            "exact": r.exact,
            "status": r.status,
            "witness": r.witness,
        }
        for r in rows
    ]
    _emit(args, "search probe", {"kmax": args.kmax, "universe": args.universe}, payload)
    return EXIT_OK


# -- parser -------------------------------------------------------------------------------


def _source_flags(p):
    p.add_argument("--catalog", metavar="NAME", help="catalog entry, e.g. pentagon or lb:5")
    p.add_argument("--config", metavar="PATH", help="configuration JSON file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="anglekit", description="Exact distinct-angle counting for planar point sets.")
    parser.add_argument("--version", action="version", version=f"anglekit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="census of one configuration")
    _source_flags(p)
    p.add_argument("--include-zero", action="store_true", help="count the 0 angle as well")
    p.add_argument("--json", metavar="OUT", help="write a JSON report")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="re-census catalog entries against their declared values")
    p.add_argument("--catalog", action="append", metavar="NAME", help="entry name or 'all' (repeatable)")
    p.add_argument("--config", action="append", metavar="PATH", help="configuration file with a declared census (repeatable)")
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="known bounds on the largest set with k angles")
    p.add_argument("--k", type=int)
    p.add_argument("--range", metavar="A..B")
    p.add_argument("--table", action="store_true")
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("render", help="draw a configuration as SVG")
    _source_flags(p)
    p.add_argument("-o", "--output", default="-", help="output path, '-' for stdout")
    p.add_argument("--annotate-angles", action="store_true")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("search", help="extension, subset, falsification and conjecture searches")
    ss = p.add_subparsers(dest="search", required=True)

    q = ss.add_parser("extend", help="points addable to a base configuration")
    q.add_argument("--base", metavar="NAME")
    q.add_argument("--config", metavar="PATH")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--box", type=float, default=3.0, help="grid box as a multiple of the base diameter")
    q.add_argument("--divisions", type=int, default=200, help="grid steps per base diameter")
    q.add_argument("--refine-eps", type=float, default=1e-30)
    q.add_argument("--threads", type=int, default=1)
    q.add_argument("--json", metavar="OUT")
    q.set_defaults(func=cmd_search_extend)

    q = ss.add_parser("subset", help="largest subsets of a universe with at most k angles")
    q.add_argument("--universe", required=True, help="ngon_center:N, ngon:N, grid:G, or a range like ngon:4..12")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--include-zero", action="store_true")
    q.add_argument("--show", type=int, default=5, help="witnesses to print per universe")
    q.add_argument("--threads", type=int, default=1)
    q.add_argument("--json", metavar="OUT")
    q.set_defaults(func=cmd_search_subset)

    q = ss.add_parser("falsify", help="randomized search for three-angle convex quadrilaterals")
    q.add_argument("--trials", type=int, default=1000)
    q.add_argument("--seed", type=int, required=True)
    q.add_argument("--tol", type=float, default=1e-6)
    q.add_argument("--json", metavar="OUT")
    q.set_defaults(func=cmd_search_falsify)

    q = ss.add_parser("probe", help="best sizes per k against the conjectured value")
    q.add_argument("--kmax", type=int, required=True)
    q.add_argument("--universe", action="append", required=True, help="universe descriptor (repeatable)")
    q.add_argument("--threads", type=int, default=1)
    q.add_argument("--json", metavar="OUT")
    q.set_defaults(func=cmd_search_probe)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (AngleKitError, UsageError) as exc:
        print(f"error: {_describe(exc)}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def _describe(exc: Exception) -> str:
    from .errors import AllCollinear

    if isinstance(exc, AllCollinear) and "collinear" not in str(exc):
        return "all points collinear"
    return str(exc) or type(exc).__name__


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
