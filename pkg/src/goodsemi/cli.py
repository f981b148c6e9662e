"""Command-line interface.

Boolean subcommands exit 0 (true) / 1 (false); computational ones print
a semigroup file to stdout and exit 0; any violated precondition exits
2 with a diagnostic on stderr.  GOODSEMI_THREADS caps worker
parallelism (every computation is pure and deterministic, so results
never depend on it).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import arith, duality, curves, io as gio, render
from .enumeration import intermediate_good_semigroups
from .errors import GoodSemiError
from .points import Box, meet, unit, zero
from .rep import GoodSemigroup, check_axioms


def thread_cap():
    """Validated value of GOODSEMI_THREADS (a cap, >= 1)."""
    raw = os.environ.get("GOODSEMI_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        raise GoodSemiError(f"GOODSEMI_THREADS={raw!r} is not an integer")
    if cap < 1:
        raise GoodSemiError("GOODSEMI_THREADS must be >= 1")
    return cap


def _load_sgp(path):
    rep, _name = gio.parse_semigroup_file(Path(path).read_text())
    return rep


def _load_semigroup(path):
    return GoodSemigroup.checked(_load_sgp(path))


def _load_curve(path, args):
    curve, ideal = gio.parse_curve_file(Path(path).read_text())
    trunc = getattr(args, "truncation", None)
    margin = getattr(args, "margin", None)
    if trunc or margin:
        curve = curves.AlgebroidCurve(
            curve.generators,
            truncation=trunc or curve.truncation,
            margin=margin or curve.margin,
            uniformizers=curve.uniformizers,
            name=curve.name,
        )
        if ideal is not None:
            ideal = curves.FractionalIdeal(curve, ideal.generators)
    return curve, ideal


def _emit(rep, name=None):
    sys.stdout.write(gio.print_semigroup_file(rep, name))


def _parse_window(text, rep=None):
    lo_text, sep, hi_text = text.partition(":")
    if not sep:
        raise GoodSemiError(f"window {text!r} must look like 'lo:hi', e.g. '0,0:9,5'")
    return Box(gio.parse_point(lo_text), gio.parse_point(hi_text))


def _default_window(rep):
    lo = meet(rep.mu, zero(rep.branches))
    hi = tuple(g + 2 for g in rep.gamma)
    return Box(lo, hi)


def _figures(args, items):
    """Write report figures next to the text output when requested."""
    outdir = getattr(args, "figures", None)
    if not outdir:
        return
    from . import plotting

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for stem, rep in items:
        window = _default_window(rep)
        path = outdir / f"{stem}.svg"
        plotting.save_figure(rep, window, path, title=stem)
        print(f"figure: {path}")


def _bool_exit(value):
    return 0 if value else 1


# -- subcommand handlers ---------------------------------------------------


def _cmd_axioms(args):
    rep = _load_sgp(args.file)
    report = check_axioms(rep, as_semigroup=args.semigroup)
    for line in report.lines():
        print(line)
    return _bool_exit(report.ok)


def _cmd_info(args):
    rep = _load_sgp(args.file)
    print(f"branches = {rep.branches}")
    print(f"mu = {gio.format_point(rep.mu)}")
    print(f"gamma = {gio.format_point(rep.gamma)}")
    print(f"tau = {gio.format_point(rep.tau)}")
    print(f"box members = {len(rep.members())}")
    report = check_axioms(rep, as_semigroup=True)
    if report.ok:
        S = GoodSemigroup.checked(rep)
        print(f"good semigroup = yes, local = {'yes' if S.is_local() else 'no'}")
    else:
        print("good semigroup = no")
    return 0


def _cmd_dual(args):
    K = _load_sgp(args.canonical_file)
    E = _load_sgp(args.ideal_file)
    S = _load_semigroup(args.verify_against) if args.verify_against else None
    _emit(duality.dual(K, E, S=S))
    return 0


def _cmd_canonical(args):
    _emit(duality.canonical_ideal(_load_semigroup(args.file)))
    return 0


def _cmd_symmetric(args):
    value = duality.is_symmetric(_load_semigroup(args.file))
    print(f"symmetric: {'yes' if value else 'no'}")
    return _bool_exit(value)


def _cmd_stable(args):
    value = duality.is_stable(_load_sgp(args.file))
    print(f"stable: {'yes' if value else 'no'}")
    return _bool_exit(value)


def _cmd_selfdual(args):
    E = _load_sgp(args.ideal_file)
    K = _load_sgp(args.canonical_file)
    S = _load_semigroup(args.verify_against) if args.verify_against else None
    value = duality.is_self_dual(E, K, S=S)
    print(f"self-dual: {'yes' if value else 'no'}")
    return _bool_exit(value)


def _cmd_classify(args):
    result = duality.classify_tower(_load_semigroup(args.file))
    print(result.describe())
    return _bool_exit(result.classified)


def _cmd_tower(args):
    S = _load_semigroup(args.file)
    tower = intermediate_good_semigroups(S, node_budget=args.budget)
    print(f"count = {len(tower)}")
    for i, T in enumerate(tower):
        print()
        sys.stdout.write(gio.print_semigroup_file(T, name=f"tower[{i}]"))
    return 0


def _cmd_diff(args):
    E = _load_sgp(args.left)
    F = _load_sgp(args.right)
    _emit(arith.difference(E, F))
    return 0


def _cmd_sum(args):
    _emit(arith.ideal_sum(_load_sgp(args.left), _load_sgp(args.right)))
    return 0


def _cmd_shift(args):
    alpha = gio.parse_point(args.alpha)
    _emit(arith.shift(alpha, _load_sgp(args.file)))
    return 0


def _cmd_project(args):
    coords = [int(b) - 1 for b in args.branches.split(",")]
    _emit(arith.projection(_load_sgp(args.file), coords))
    return 0


def _cmd_localize(args):
    E = _load_sgp(args.file)
    S = _load_semigroup(args.semigroup)
    M = arith.upper_truncation(S, unit(S.branches, args.branch - 1))
    _emit(arith.localize(E, M, S=S))
    return 0


def _cmd_decompose(args):
    E = _load_sgp(args.file)
    S = _load_semigroup(args.semigroup if args.semigroup else args.file)
    result = arith.decompose(E, S)
    for keep, comp in result.components:
        label = "branches " + ",".join(str(i + 1) for i in keep)
        sys.stdout.write(gio.print_semigroup_file(comp, name=label))
        print()
    return 0


def _cmd_values(args):
    curve, _ideal = _load_curve(args.file, args)
    G = curves.value_semigroup(curve)
    _emit(G, name=curve.name)
    _figures(args, [("values", G)])
    return 0


def _cmd_ideal_values(args):
    curve, ideal = _load_curve(args.file, args)
    if ideal is None:
        raise GoodSemiError(f"{args.file} has no ideal-gen lines")
    G = curves.value_semigroup_ideal(curve, ideal)
    _emit(G)
    _figures(args, [("ideal-values", G)])
    return 0


def _cmd_colon(args):
    curve, ideal = _load_curve(args.file, args)
    if ideal is None:
        ideal = curve.maximal_ideal()
    _emit(curves.colon_values(curve, ideal))
    return 0


def _cmd_endo_chain(args):
    curve, ideal = _load_curve(args.file, args)
    if ideal is None:
        ideal = curve.maximal_ideal()
    chain = curves.blowup_chain(curve, ideal, n_budget=args.budget)
    print(f"steps = {len(chain.steps)}")
    print(f"ideal stable: {'yes' if chain.ideal_stable else 'no'}")
    for i, step in enumerate(chain.steps):
        print()
        sys.stdout.write(gio.print_semigroup_file(step, name=f"endo[{i + 1}]"))
    return 0


def _cmd_gorenstein(args):
    curve, ideal = _load_curve(args.file, args)
    if ideal is None:
        ideal = curve.maximal_ideal()
    report = curves.gorenstein_report(curve, ideal)
    for line in report.lines():
        print(line)
    _figures(
        args,
        [
            ("ideal-values", report.ideal_values),
            ("endo-values", report.endo_values),
            ("difference-values", report.difference_values),
        ],
    )
    return _bool_exit(report.condition_a and report.agree)


def _cmd_thm26(args):
    curve, _ideal = _load_curve(args.file, args)
    report = curves.extensions_report(curve, node_budget=args.budget)
    for line in report.lines():
        print(line)
    _figures(args, [("values", report.semigroup)])
    return _bool_exit(report.all_gorenstein)


def _cmd_plot(args):
    rep = _load_sgp(args.file)
    window = _parse_window(args.window) if args.window else _default_window(rep)
    text = render.render_grid(rep, window, args.format)
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


# -- parser -----------------------------------------------------------------


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="goodsemi",
        description="Good semigroups, duality, and value semigroups of "
        "algebroid curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = cmd("axioms", _cmd_axioms, "check the closure axioms of a semigroup file")
    p.add_argument("file")
    p.add_argument("--semigroup", action="store_true",
                   help="also require 0 to be the minimal element and closure under sums")

    p = cmd("info", _cmd_info, "print the header data of a semigroup file")
    p.add_argument("file")

    p = cmd("dual", _cmd_dual, "dualize an ideal against a canonical ideal")
    p.add_argument("canonical_file")
    p.add_argument("ideal_file")
    p.add_argument("--verify-against", metavar="SGP",
                   help="semigroup file; verify the first argument is canonical for it")

    p = cmd("canonical", _cmd_canonical, "normalized dualizing ideal of a semigroup")
    p.add_argument("file")

    p = cmd("symmetric", _cmd_symmetric, "is the semigroup its own dual? (exit 0/1)")
    p.add_argument("file")

    p = cmd("stable", _cmd_stable, "is the ideal a translate of its difference?")
    p.add_argument("file")

    p = cmd("selfdual", _cmd_selfdual, "does translating the ideal give its dual?")
    p.add_argument("ideal_file")
    p.add_argument("canonical_file")
    p.add_argument("--verify-against", metavar="SGP")

    p = cmd("classify", _cmd_classify,
            "match a local semigroup against the two symmetric-tower normal forms")
    p.add_argument("file")

    p = cmd("tower", _cmd_tower, "all good semigroups between S and its cone")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=500_000)

    p = cmd("diff", _cmd_diff, "ideal quotient E - F")
    p.add_argument("left")
    p.add_argument("right")

    p = cmd("sum", _cmd_sum, "pointwise sum E + F")
    p.add_argument("left")
    p.add_argument("right")

    p = cmd("shift", _cmd_shift, "translate an ideal by a lattice point")
    p.add_argument("alpha", help="e.g. '3' or '-2,1'")
    p.add_argument("file")

    p = cmd("project", _cmd_project, "project to a subset of branches")
    p.add_argument("file")
    p.add_argument("--branches", required=True, help="1-based, e.g. '1' or '1,3'")

    p = cmd("localize", _cmd_localize, "localize at the maximal ideal over a branch")
    p.add_argument("file")
    p.add_argument("semigroup")
    p.add_argument("--branch", type=int, required=True, help="1-based branch index")

    p = cmd("decompose", _cmd_decompose, "split over the maximal ideals")
    p.add_argument("file")
    p.add_argument("--semigroup", help="ambient semigroup file (defaults to the ideal)")

    for name, handler, help_text in (
        ("values", _cmd_values, "value semigroup of a curve file"),
        ("ideal-values", _cmd_ideal_values, "value set of the curve file's ideal"),
        ("colon", _cmd_colon, "values of (I : I) for the curve file's ideal"),
        ("endo-chain", _cmd_endo_chain, "endomorphism chain of the ideal powers"),
        ("gorenstein", _cmd_gorenstein, "Gorenstein report for End(I)"),
        ("thm26", _cmd_thm26, "are all integral extensions Gorenstein?"),
    ):
        p = cmd(name, handler, help_text)
        p.add_argument("file")
        p.add_argument("--truncation", type=int)
        p.add_argument("--margin", type=int)
        if name in ("endo-chain",):
            p.add_argument("--budget", type=int, default=10)
        if name in ("thm26",):
            p.add_argument("--budget", type=int, default=500_000)
        if name in ("values", "ideal-values", "gorenstein", "thm26"):
            p.add_argument("--figures", metavar="DIR",
                           help="also render matplotlib figures into DIR")

    p = cmd("plot", _cmd_plot, "render a semigroup file as a marker grid")
    p.add_argument("file")
    p.add_argument("--window", help="'lo:hi', e.g. '0,0:9,5'")
    p.add_argument("--format", choices=("text", "svg"), default="text")
    p.add_argument("--out", help="write to a file instead of stdout")

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        thread_cap()
        return args.handler(args)
    except GoodSemiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
