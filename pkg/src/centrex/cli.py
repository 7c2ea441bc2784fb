"""Command-line surface of the workbench.

Exit codes: 0 success, 1 a checked expectation or internal assertion failed,
2 malformed input or violated precondition.  All reports are deterministic
given the input files and the seed.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog, serialize
from .config import DEFAULT_DIM_BOUND, DEFAULT_SEED, DEFAULT_TRIALS
from .errors import CheckFailed, InputError, WorkbenchError
from .extensions import (Extension, centralise, compose_extensions,
                         is_central, is_normal, is_perfect, is_trivial,
                         relative_commutator)
from .fields import GF, QQ
from .laws import variety_by_name
from .pruefer import check_example54
from .uce import build_uce, check_uce_condition, nested_compare, perfect_h2_dims


def _parse_field(spec: str):
    if spec == "Q":
        return QQ
    if spec.startswith("F") and spec[1:].isdigit():
        return GF(int(spec[1:]))
    raise InputError(f"bad field {spec!r}; expected Q or F<prime>")


def _resolve_variety(spec: str):
    if Path(spec).is_file():
        return serialize.variety_from_json(serialize.load_json(spec))
    return variety_by_name(spec)


def _resolve_algebra(spec: str):
    """A file path, or the name of a bundled algebra."""
    if Path(spec).is_file():
        algebra, variety = serialize.load_algebra(spec)
        return algebra, variety
    if spec in catalog.BUNDLED_ALGEBRAS:
        return catalog.bundled_algebra(spec), None
    raise InputError(
        f"no file or bundled algebra named {spec!r}; bundled names: "
        + ", ".join(sorted(catalog.BUNDLED_ALGEBRAS)))


def _resolve_extension(spec: str, ambient, coefficient) -> Extension:
    if Path(spec).is_file():
        return serialize.load_extension(spec, ambient, coefficient)
    try:
        e = catalog.bundled_extension(spec)
    except InputError:
        raise InputError(
            f"no file or bundled extension named {spec!r}; bundled names: "
            "nonassoc-f, nonassoc-g") from None
    if ambient is not None or coefficient is not None:
        e = Extension.make(e.f, ambient or e.ambient, coefficient or e.coefficient)
    return e


def _cmd_check(args) -> int:
    ambient = _resolve_variety(args.ambient) if args.ambient else None
    coeff = _resolve_variety(args.coeff) if args.coeff else None
    e = _resolve_extension(args.ext, ambient, coeff)
    if args.property == "central":
        dim = relative_commutator(e).dim
        verdict = "CENTRAL" if dim == 0 else "NOT-CENTRAL"
        print(f"{verdict} (dim [K,B]_{e.coefficient.name} = {dim})")
    elif args.property == "trivial":
        print("TRIVIAL" if is_trivial(e) else "NOT-TRIVIAL")
    else:
        print("NORMAL" if is_normal(e) else "NOT-NORMAL")
    return 0


def _cmd_centralise(args) -> int:
    ambient = _resolve_variety(args.ambient) if args.ambient else None
    coeff = _resolve_variety(args.coeff) if args.coeff else None
    e = _resolve_extension(args.ext, ambient, coeff)
    dim_before = relative_commutator(e).dim
    central, _ = centralise(e)
    serialize.save_extension(args.out, central)
    print(f"centralised: domain dim {e.domain.dim} -> {central.domain.dim} "
          f"(commutator dim {dim_before}); written to {args.out}")
    return 0


def _cmd_uce(args) -> int:
    algebra, attached = _resolve_algebra(args.algebra)
    variety = _resolve_variety(args.variety) if args.variety else attached
    if variety is None:
        raise InputError("no variety given (flag --variety or a 'variety' file key)")
    result = build_uce(algebra, variety)
    print(f"dim U = {result.dim_u}")
    print(f"dim H2 = {result.dim_h2}")
    for line in result.construction_log:
        print(line)
    if args.out:
        serialize.save_extension(args.out, result.u)
        print(f"universal extension written to {args.out}")
    return 0


def _cmd_h2(args) -> int:
    algebra, attached = _resolve_algebra(args.algebra)
    variety = _resolve_variety(args.variety) if args.variety else attached
    if variety is None:
        raise InputError("no variety given (flag --variety or a 'variety' file key)")
    _, h2 = perfect_h2_dims(algebra, variety)
    print(f"dim H2 = {h2}")
    return 0


def _cmd_perfect(args) -> int:
    algebra, _ = _resolve_algebra(args.algebra)
    coeff = _resolve_variety(args.coeff)
    print("PERFECT" if is_perfect(algebra, coeff) else "NOT-PERFECT")
    return 0


def paper_examples_report(p: int = 3, k_max: int = 6):
    """Run both bundled examples; returns (lines, all_expectations_met)."""
    lines = []
    ok = True

    def expect(label: str, got, want):
        nonlocal ok
        good = got == want
        ok = ok and good
        lines.append(f"{label}: {got}  [expect {want}] {'ok' if good else 'FAILED'}")

    lines.append("== central extensions that do not compose (non-associative chain) ==")
    chain = catalog.counterexample_chain()
    from .algebras import centre
    from .linalg import kernel

    dim_f = relative_commutator(chain.ext_f).dim
    expect("f : B -> A central", "CENTRAL" if dim_f == 0 else "NOT-CENTRAL", "CENTRAL")
    dim_g = relative_commutator(chain.ext_g).dim
    expect("g : C -> B central", "CENTRAL" if dim_g == 0 else "NOT-CENTRAL", "CENTRAL")
    composite = compose_extensions(chain.ext_f, chain.ext_g)
    dim_fg = relative_commutator(composite).dim
    expect("f.g : C -> A central", "CENTRAL" if dim_fg == 0 else "NOT-CENTRAL",
           "NOT-CENTRAL")
    lines.append(f"dim [K,C]_Vect for f.g = {dim_fg}")
    expect("dim Z(B)", centre(chain.b).dim, 1)
    expect("dim ker f", kernel(chain.f.matrix).dim, 1)
    expect("dim Z(C)", centre(chain.c).dim, 1)
    expect("dim ker g", kernel(chain.g.matrix).dim, 1)
    expect("B perfect", "PERFECT" if is_perfect(chain.b, chain.ext_f.coefficient) else "NOT-PERFECT",
           "PERFECT")
    expect("A perfect", "PERFECT" if is_perfect(chain.a, chain.ext_f.coefficient) else "NOT-PERFECT",
           "PERFECT")

    lines.append(f"== p-power torsion module demo (p={p}, stages k<={k_max}) ==")
    report = check_example54(p, k_max)
    lines.extend(report.lines)
    ok = ok and report.ok

    lines.append(f"RESULT: {'PASS' if ok else 'FAIL'}")
    return lines, ok


def _cmd_paper_examples(args) -> int:
    lines, ok = paper_examples_report(args.p, args.k_max)
    for line in lines:
        print(line)
    return 0 if ok else 1


def _cmd_search(args) -> int:
    ambient = _resolve_variety(args.ambient)
    field = _parse_field(args.field)
    inject = args.inject_paper
    if inject is None:
        inject = ambient.name == "NAAlg"
    violations = check_uce_condition(ambient, args.trials, args.dim, field,
                                     args.seed, inject_counterexample=inject)
    print(f"ambient = {ambient.name}, field = {field.name}, trials = {args.trials}, "
          f"dim bound = {args.dim}, seed = {args.seed}, "
          f"counterexample injected = {'yes' if inject else 'no'}")
    print(f"violations found: {len(violations)}")
    for v in violations:
        print(f"violation at trial {v.trial}: outer {v.outer.domain.dim}->"
              f"{v.outer.codomain.dim}, inner {v.inner.domain.dim}->"
              f"{v.inner.codomain.dim}, composite commutator dim "
              f"{v.composite_commutator_dim}")
    if args.out:
        serialize.save_json(args.out, [serialize.violation_to_json(v) for v in violations])
        print(f"violations written to {args.out}")
    return 0


def _cmd_nested(args) -> int:
    algebra, _ = _resolve_algebra(args.algebra)
    report = nested_compare(algebra)
    for line in report.log:
        print(line)
    print(f"RESULT: {'PASS' if report.ok else 'FAIL'}")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="centrex",
        description="Exact workbench for central extensions of finite-dimensional algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="test an extension for a property")
    p_check.add_argument("property", choices=["central", "trivial", "normal"])
    p_check.add_argument("--ext", required=True, help="extension file or bundled name")
    p_check.add_argument("--coeff", help="coefficient variety (name or file)")
    p_check.add_argument("--ambient", help="ambient variety (name or file)")
    p_check.set_defaults(func=_cmd_check)

    p_centralise = sub.add_parser("centralise",
                                  help="quotient an extension by its relative commutator")
    p_centralise.add_argument("--ext", required=True)
    p_centralise.add_argument("--coeff")
    p_centralise.add_argument("--ambient")
    p_centralise.add_argument("--out", required=True)
    p_centralise.set_defaults(func=_cmd_centralise)

    p_uce = sub.add_parser("uce", help="build the universal central extension")
    p_uce.add_argument("--algebra", required=True, help="algebra file or bundled name")
    p_uce.add_argument("--variety", help="ambient variety (name or file)")
    p_uce.add_argument("--out", help="write the resulting extension here")
    p_uce.set_defaults(func=_cmd_uce)

    p_h2 = sub.add_parser("h2", help="dimension of H2 of a perfect algebra")
    p_h2.add_argument("--algebra", required=True)
    p_h2.add_argument("--variety")
    p_h2.set_defaults(func=_cmd_h2)

    p_perfect = sub.add_parser("perfect", help="test perfectness for a coefficient variety")
    p_perfect.add_argument("--algebra", required=True)
    p_perfect.add_argument("--coeff", required=True)
    p_perfect.set_defaults(func=_cmd_perfect)

    p_paper = sub.add_parser("paper-examples",
                             help="run the bundled literature examples end to end")
    p_paper.add_argument("--p", type=int, default=3)
    p_paper.add_argument("--k-max", type=int, default=6, dest="k_max")
    p_paper.set_defaults(func=_cmd_paper_examples)

    p_search = sub.add_parser("search-uce-violation",
                              help="randomised search for non-composing central extensions")
    p_search.add_argument("--ambient", required=True)
    p_search.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p_search.add_argument("--dim", type=int, default=DEFAULT_DIM_BOUND)
    p_search.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_search.add_argument("--field", default="F5")
    p_search.add_argument("--inject-paper", dest="inject_paper",
                          action="store_true", default=None,
                          help="run the bundled counterexample pair as trial 0")
    p_search.add_argument("--no-inject-paper", dest="inject_paper", action="store_false")
    p_search.add_argument("--out", help="write the violation list as JSON")
    p_search.set_defaults(func=_cmd_search)

    p_nested = sub.add_parser("nested-compare",
                              help="compare universal central extensions across Leib > Lie")
    p_nested.add_argument("--algebra", required=True)
    p_nested.set_defaults(func=_cmd_nested)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except CheckFailed as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except WorkbenchError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
