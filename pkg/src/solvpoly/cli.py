"""Command-line front end.

Every subcommand reads an algebra file, runs one kernel capability and
prints a deterministic report.  Exit status: 0 for PASS/success verdicts,
1 for FAIL/neither verdicts, 2 for usage, parse or input errors.
"""

from __future__ import annotations

import argparse
import random
import sys

from .algfile import (format_algebra_file, format_monomial, format_poly,
                      parse_algebra_file, parse_poly)
from .degrees import deg_poly, leading_homogeneous
from .errors import SolvPolyError
from .kernel import (DEFAULT_STEP_BUDGET, check_pbw_confluence, check_solvable,
                     mul)
from .orderings import ReesOrder, is_graded_wrt, leading_monomial, make_graded
from .transform import (build_associated_graded, build_rees, check_lm_transport,
                        dehomogenize, homogenize, homogenize_at,
                        is_degree_first, principal_symbol, project_mod_z)
from .verify import (TypeVerdict, check_filtered_type, check_graded_type,
                     find_weights, verify_degree_laws)


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise SolvPolyError(f"cannot read {path}: {exc.strerror}")
    return parse_algebra_file(text)


def _need_degree(data, path: str):
    if data.degree is None:
        raise SolvPolyError(
            f"{path}: this command needs generator weights "
            "(declare them as gens name:weight ...)")
    return data.degree


def _graded_ordering(data, dfun):
    # commands built on the degree-first composite accept any declared
    # ordering and wrap it on the fly when it is not already degree-first
    if is_degree_first(data.ordering, dfun):
        return data.ordering
    return make_graded(data.ordering, dfun)


def _parse_arg_poly(text: str, pres):
    return parse_poly(text, pres)


def _require_nonzero(f, what: str):
    if f.is_zero():
        raise SolvPolyError(f"{what} must be nonzero")
    return f


def _print_type_report(report, names) -> None:
    print(f"verdict: {report.verdict.value}")
    for w in report.witnesses:
        rel = "exceeds" if w.degree > w.required else "misses"
        print(f"  pair ({names[w.i]}, {names[w.j]}): term "
              f"{format_monomial(w.monomial, names)} has degree {w.degree}, "
              f"{rel} required {w.required}")


def _cmd_solvcheck(args) -> int:
    data = _load(args.file)
    report = check_solvable(data.presentation, data.ordering)
    names = data.presentation.names
    if report.ok:
        print("PASS: presentation is solvable under the declared ordering")
        return 0
    for f in report.failures:
        if f.reason == "zero-scalar":
            print(f"FAIL: pair ({names[f.i]}, {names[f.j]}): "
                  "swap scalar is zero")
        else:
            print(f"FAIL: pair ({names[f.i]}, {names[f.j]}): tail leading "
                  f"monomial {format_monomial(f.lm, names)} is not below "
                  f"{names[f.i]}*{names[f.j]}")
    return 1


def _cmd_confluence(args) -> int:
    data = _load(args.file)
    report = check_pbw_confluence(data.presentation, data.ordering,
                                  budget=args.budget)
    names = data.presentation.names
    if report.ok:
        print("PASS: all generator triples reduce confluently")
        return 0
    if report.budget_exceeded is not None:
        i, j, k, steps = report.budget_exceeded
        print(f"BUDGET EXCEEDED: triple ({names[i]}, {names[j]}, {names[k]}) "
              f"aborted after {steps} rewrite steps")
        return 1
    i, j, k, left, right = report.divergent
    print(f"FAIL: triple ({names[i]}, {names[j]}, {names[k]}) diverges:")
    print(f"  left:  {format_poly(left, names, data.ordering)}")
    print(f"  right: {format_poly(right, names, data.ordering)}")
    return 1


def _cmd_gradecheck(args) -> int:
    data = _load(args.file)
    report = check_graded_type(data.presentation, _need_degree(data, args.file))
    _print_type_report(report, data.presentation.names)
    return 0 if report.verdict is TypeVerdict.GRADED else 1


def _cmd_filtcheck(args) -> int:
    data = _load(args.file)
    report = check_filtered_type(data.presentation, _need_degree(data, args.file))
    _print_type_report(report, data.presentation.names)
    return 0 if report.verdict is not TypeVerdict.NEITHER else 1


def _cmd_findweights(args) -> int:
    data = _load(args.file)
    dfun = find_weights(data.presentation, mode=args.mode, bound=args.bound)
    if dfun is None:
        print(f"none: no {args.mode} weight vector with entries <= {args.bound}")
        return 1
    print("weights: " + ",".join(str(w) for w in dfun.weights))
    return 0


def _cmd_degreelaws(args) -> int:
    data = _load(args.file)
    dfun = _need_degree(data, args.file)
    ordering = _graded_ordering(data, dfun)
    rng = random.Random(args.seed)
    report = verify_degree_laws(data.presentation, ordering, dfun,
                                box=args.box, samples=200, rng=rng)
    print(str(report))
    return 0 if report.ok else 1


def _cmd_mul(args) -> int:
    data = _load(args.file)
    f = _parse_arg_poly(args.f, data.presentation)
    g = _parse_arg_poly(args.g, data.presentation)
    product = mul(data.presentation, data.ordering, f, g)
    print(format_poly(product, data.presentation.names, data.ordering))
    return 0


def _cmd_lm(args) -> int:
    data = _load(args.file)
    f = _require_nonzero(_parse_arg_poly(args.f, data.presentation), "argument")
    mono = leading_monomial(data.ordering, f)
    print(format_monomial(mono, data.presentation.names))
    return 0


def _cmd_lh(args) -> int:
    data = _load(args.file)
    dfun = _need_degree(data, args.file)
    f = _require_nonzero(_parse_arg_poly(args.f, data.presentation), "argument")
    print(format_poly(leading_homogeneous(dfun, f),
                      data.presentation.names, data.ordering))
    return 0


def _cmd_deg(args) -> int:
    data = _load(args.file)
    dfun = _need_degree(data, args.file)
    f = _require_nonzero(_parse_arg_poly(args.f, data.presentation), "argument")
    print(deg_poly(dfun, f))
    return 0


def _cmd_sigma(args) -> int:
    data = _load(args.file)
    dfun = _need_degree(data, args.file)
    f = _require_nonzero(_parse_arg_poly(args.f, data.presentation), "argument")
    print(format_poly(principal_symbol(f, dfun),
                      data.presentation.names, data.ordering))
    return 0


def _rees_names(names) -> tuple:
    return tuple(f"{nm}~" for nm in names) + ("Z",)


def _cmd_homog(args) -> int:
    data = _load(args.file)
    dfun = _need_degree(data, args.file)
    f = _require_nonzero(_parse_arg_poly(args.f, data.presentation), "argument")
    lifted = homogenize(f, dfun)
    ordering = ReesOrder(base=_graded_ordering(data, dfun))
    print(format_poly(lifted, _rees_names(data.presentation.names), ordering))
    return 0


def _cmd_homog_at(args) -> int:
    data = _load(args.file)
    dfun = _need_degree(data, args.file)
    f = _require_nonzero(_parse_arg_poly(args.f, data.presentation), "argument")
    lifted = homogenize_at(f, dfun, args.level)
    ordering = ReesOrder(base=_graded_ordering(data, dfun))
    print(format_poly(lifted, _rees_names(data.presentation.names), ordering))
    return 0


def _strip_tilde(names) -> tuple:
    stripped = tuple(nm[:-1] if nm.endswith("~") else nm for nm in names)
    return stripped if len(set(stripped)) == len(stripped) else names


def _central_dropped_ordering(data):
    return data.ordering.base if isinstance(data.ordering, ReesOrder) else None


def _cmd_dehomog(args) -> int:
    data = _load(args.file)
    h = _parse_arg_poly(args.f, data.presentation)
    result = dehomogenize(h)
    names = _strip_tilde(data.presentation.names[:-1])
    print(format_poly(result, names, _central_dropped_ordering(data)))
    return 0


def _cmd_modz(args) -> int:
    data = _load(args.file)
    h = _parse_arg_poly(args.f, data.presentation)
    result = project_mod_z(h)
    names = _strip_tilde(data.presentation.names[:-1])
    print(format_poly(result, names, _central_dropped_ordering(data)))
    return 0


def _cmd_gr(args) -> int:
    data = _load(args.file)
    dfun = _need_degree(data, args.file)
    result = build_associated_graded(data.presentation, dfun,
                                     _graded_ordering(data, dfun))
    sys.stdout.write(format_algebra_file(result.presentation, result.ordering,
                                         result.degree))
    return 0


def _cmd_rees(args) -> int:
    data = _load(args.file)
    dfun = _need_degree(data, args.file)
    result = build_rees(data.presentation, dfun, _graded_ordering(data, dfun))
    sys.stdout.write(format_algebra_file(result.presentation, result.ordering,
                                         result.degree))
    return 0


def _cmd_lemma44(args) -> int:
    data = _load(args.file)
    dfun = _need_degree(data, args.file)
    ordering = _graded_ordering(data, dfun)
    f = _require_nonzero(_parse_arg_poly(args.f, data.presentation), "argument")
    report = check_lm_transport(data.presentation, dfun, ordering, f)
    if report.ok:
        for law in report.LAWS:
            print(f"PASS [{law}]")
        return 0
    failed = {law for law, _ in report.failures}
    for law in report.LAWS:
        if law in failed:
            detail = next(d for l, d in report.failures if l == law)
            print(f"FAIL [{law}]: {detail}")
        else:
            print(f"PASS [{law}]")
    return 1


def _cmd_ordcheck(args) -> int:
    data = _load(args.file)
    dfun = _need_degree(data, args.file)
    report = is_graded_wrt(data.ordering, dfun, args.box)
    if report.ok:
        print("PASS: ordering is degree-compatible on the box")
        return 0
    names = data.presentation.names
    a, b, da, db = report.witness
    print(f"FAIL: {format_monomial(a, names)} precedes "
          f"{format_monomial(b, names)} in the ordering but has degree "
          f"{da} > {db}")
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="solvpoly",
        description="Exact kernel for solvable polynomial algebras: PBW "
                    "products, graded/filtered checks, associated graded "
                    "and Rees constructions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, func, help_text, *, poly_args=0, level=False,
            box=False, bound=False, budget=False, seed=False, mode=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="algebra file")
        if poly_args >= 1:
            p.add_argument("f", help="polynomial expression")
        if poly_args >= 2:
            p.add_argument("g", help="polynomial expression")
        if level:
            p.add_argument("level", type=int, help="target degree level")
        if box:
            p.add_argument("--box", type=int, default=2,
                           help="exhaustive-check exponent bound (default 2)")
        if bound:
            p.add_argument("--bound", type=int, default=16,
                           help="weight search bound (default 16)")
        if budget:
            p.add_argument("--budget", type=int, default=DEFAULT_STEP_BUDGET,
                           help="rewrite step budget (default 10^6)")
        if seed:
            p.add_argument("--seed", type=int, default=0,
                           help="seed for randomized property sampling")
        if mode:
            p.add_argument("--mode", choices=("graded", "filtered"),
                           default="graded", help="search target (default graded)")
        p.set_defaults(func=func)
        return p

    cmd("solvcheck", _cmd_solvcheck,
        "check pairwise solvability under the declared ordering")
    cmd("confluence", _cmd_confluence,
        "two-way reduction check on all generator triples", budget=True)
    cmd("gradecheck", _cmd_gradecheck, "graded-type verdict for the weights")
    cmd("filtcheck", _cmd_filtcheck, "filtered-type verdict for the weights")
    cmd("findweights", _cmd_findweights,
        "search for a weight vector of the requested type",
        bound=True, mode=True)
    cmd("degreelaws", _cmd_degreelaws,
        "exhaustive degree laws on a box plus sampled products",
        box=True, seed=True)
    cmd("ordcheck", _cmd_ordcheck,
        "degree-compatibility of the declared ordering on a box", box=True)
    cmd("mul", _cmd_mul, "normal-form product of two polynomials", poly_args=2)
    cmd("lm", _cmd_lm, "leading monomial", poly_args=1)
    cmd("lh", _cmd_lh, "leading homogeneous part", poly_args=1)
    cmd("deg", _cmd_deg, "weighted degree", poly_args=1)
    cmd("sigma", _cmd_sigma,
        "principal symbol (image in the associated graded algebra)",
        poly_args=1)
    cmd("homog", _cmd_homog, "homogenize into the Rees presentation",
        poly_args=1)
    cmd("homog-at", _cmd_homog_at, "homogenize at a chosen level",
        poly_args=1, level=True)
    cmd("dehomog", _cmd_dehomog,
        "substitute 1 for the central (last) generator", poly_args=1)
    cmd("modz", _cmd_modz,
        "drop terms divisible by the central (last) generator", poly_args=1)
    cmd("gr", _cmd_gr, "emit the associated graded presentation as a file")
    cmd("rees", _cmd_rees, "emit the Rees presentation as a file")
    cmd("lemma44", _cmd_lemma44,
        "degree and leading-monomial transport laws for one element",
        poly_args=1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SolvPolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ZeroDivisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
