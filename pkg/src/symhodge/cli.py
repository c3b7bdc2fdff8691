"""Command-line interface.

Exit status: 0 on success, 1 on domain errors (bad presentation file,
non-subgroup, failed identity, disagreeing evaluators), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import hodgecore, identities, symprod
from .hodgecore import ExteriorPresentation, PresentationError
from .polyring import IntegralityError
from .symgroup import Partition


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _gens(text: str) -> list[tuple[int, int]]:
    out = []
    for tok in text.split(","):
        d, sep, r = tok.strip().partition(":")
        try:
            out.append((int(d), int(r) if sep else 1))
        except ValueError:
            raise UsageError(f"expected degree:count pairs, got {text!r}") from None
    return out


def presentation_from_args(args) -> ExteriorPresentation:
    if args.file:
        return hodgecore.load_presentation(args.file)
    name = args.preset
    need = {"torus": "d", "cstar": "r", "gl": "m", "lag": "r", "lie": "gens"}[name]
    raw = getattr(args, need)
    if raw is None:
        raise UsageError(f"preset {name!r} requires --{need}")
    if name == "torus":
        return hodgecore.torus(raw)
    if name == "gl":
        return hodgecore.gl(raw)
    if name == "cstar":
        rs = _int_list(raw)
        if len(rs) != 1:
            raise UsageError("preset 'cstar' takes a single --r value")
        return hodgecore.cstar(rs[0])
    if name == "lag":
        return hodgecore.lag(_int_list(raw))
    return hodgecore.lie(_gens(raw))


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print(text)


def _need_n(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    return args.n


# -- commands ---------------------------------------------------------------


def cmd_mhp(args):
    pres = presentation_from_args(args)
    poly = hodgecore.mhp(pres)
    _emit(args, poly.to_text(), {"label": pres.label, "poly": poly.to_records()})


def cmd_sym(args):
    pres = presentation_from_args(args)
    n = _need_n(args)
    if args.method == "all":
        results = symprod.sym_mhp_all(pres, n)
        text = "\n".join(f"{r.method}: {r.poly.to_text()}" for r in results)
        _emit(args, text, [r.to_dict() for r in results])
    else:
        r = symprod.sym_mhp(pres, n, args.method)
        _emit(args, r.poly.to_text(), r.to_dict())


def cmd_equivariant(args):
    pres = presentation_from_args(args)
    n = _need_n(args)
    if n < 1:
        raise UsageError("--n must be at least 1")
    cf = symprod.equivariant_class_function(pres, n)
    symprod.dimension_check(cf, pres)
    text = "\n".join(f"{c.to_text()}: {v.to_text()}" for c, v in cf.items())
    _emit(args, text, cf.to_dict())


def cmd_isotypic(args):
    pres = presentation_from_args(args)
    n = _need_n(args)
    if n < 1:
        raise UsageError("--n must be at least 1")
    try:
        lam = Partition.parse(args.lam)
    except ValueError as exc:
        raise UsageError(f"bad partition {args.lam!r}: {exc}") from None
    if lam.n != n:
        raise UsageError(f"partition {lam.to_text()} has size {lam.n}, expected {n}")
    cf = symprod.equivariant_class_function(pres, n)
    poly = symprod.isotypic_multiplicity(cf, lam)
    _emit(args, poly.to_text(), {"n": n, "lambda": lam.to_text(), "poly": poly.to_records()})


def cmd_quotient(args):
    pres = presentation_from_args(args)
    n = _need_n(args)
    with open(args.subgroup, encoding="utf-8") as fh:
        group = symprod.parse_subgroup(fh.read())
    poly = symprod.quotient_by_subgroup(pres, n, group)
    _emit(args, poly.to_text(), {"n": n, "order": len(set(group)), "poly": poly.to_records()})


def cmd_poincare(args):
    pres = presentation_from_args(args)
    poly = hodgecore.poincare(pres) if args.n is None else symprod.sym_poincare(pres, _need_n(args))
    _emit(args, poly.to_text(), {"n": args.n, "poly": poly.to_records()})


def cmd_epoly(args):
    pres = presentation_from_args(args)
    poly = hodgecore.e_poly(pres) if args.n is None else symprod.sym_epoly(pres, _need_n(args))
    _emit(args, poly.to_text(), {"n": args.n, "poly": poly.to_records()})


def cmd_cheah(args):
    pres = presentation_from_args(args)
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    table = hodgecore.hodge_table(pres)
    if args.dim is not None:
        table = hodgecore.HodgeTable(table.numbers, dim=args.dim)
    variant = "compact" if args.compact else "ordinary"
    series = symprod.cheah_series(table, args.order, variant)
    text = "\n".join(f"z^{i}: {c.to_text()}" for i, c in enumerate(series.coeffs))
    payload = {"variant": variant, "order": series.order, "coeffs": [c.to_records() for c in series.coeffs]}
    _emit(args, text, payload)


def cmd_identity(args):
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    if args.which == "combgl":
        if args.m is None:
            raise UsageError("combgl requires --m")
        report = identities.check_combgl(args.m, args.order)
    else:
        if args.r is None:
            raise UsageError(f"{args.which} requires --r")
        rs = _int_list(args.r)
        check = identities.check_betti_identity if args.which == "betti" else identities.check_cheahfls
        report = check(rs, args.order)
    _emit(args, report.to_text(), report.to_dict())
    return 0 if report.equal else 1


def cmd_preset(args):
    pres = presentation_from_args(args)
    print(pres.to_json())


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit canonical JSON")

    source = argparse.ArgumentParser(add_help=False)
    group = source.add_mutually_exclusive_group(required=True)
    group.add_argument("--preset", choices=hodgecore.PRESET_NAMES)
    group.add_argument("--file", help="presentation JSON file")
    source.add_argument("--d", type=int, help="torus dimension")
    source.add_argument("--r", help="cstar rank, or comma-separated lag multiplicities")
    source.add_argument("--m", type=int, help="gl rank")
    source.add_argument("--gens", help="lie generators as degree:count pairs, e.g. 3:1,5:1")

    parser = argparse.ArgumentParser(
        prog="symhodge",
        description="Mixed Hodge polynomials of symmetric products of varieties with exterior cohomology.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, n=False):
        p = sub.add_parser(name, parents=[common, source], help=help_text)
        if n:
            p.add_argument("--n", type=int)
        p.set_defaults(func=fn)
        return p

    add("mhp", cmd_mhp, "mixed Hodge polynomial of X")
    p = add("sym", cmd_sym, "mixed Hodge polynomial of Sym^n X", n=True)
    p.add_argument("--method", choices=symprod.METHODS + ("all",), default="det")
    add("equivariant", cmd_equivariant, "S_n class function on H^*(X^n)", n=True)
    p = add("isotypic", cmd_isotypic, "graded multiplicity of an irreducible", n=True)
    p.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. 2,1")
    p = add("quotient", cmd_quotient, "mixed Hodge polynomial of X^n/H", n=True)
    p.add_argument("--subgroup", required=True, help="file with one permutation per line")
    add("poincare", cmd_poincare, "Poincare polynomial of X or Sym^n X", n=True)
    add("epoly", cmd_epoly, "E-polynomial of X or Sym^n X", n=True)
    p = add("cheah", cmd_cheah, "Cheah generating series")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--compact", action="store_true", help="compactly supported variant")
    p.add_argument("--dim", type=int, help="complex dimension for duality")
    add("preset", cmd_preset, "print a presentation as JSON")

    p = sub.add_parser("identity", parents=[common], help="check a generating-function identity")
    p.add_argument("which", choices=("combgl", "betti", "cheahfls"))
    p.add_argument("--m", type=int)
    p.add_argument("--r")
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_identity)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code = args.func(args)
    except UsageError as exc:
        print(f"symhodge {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (
        PresentationError,
        IntegralityError,
        symprod.SubgroupError,
        symprod.PathDisagreement,
        ValueError,
        OSError,
    ) as exc:
        print(f"symhodge {args.command}: {exc}", file=sys.stderr)
        return 1
    return code or 0


def main() -> None:
    sys.exit(run())
