"""Command line front end: ``realtrop <subcommand> ...``.

Exit status is 0 on success, 1 when a certificate or verification is
rejected, and 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .core import KPoly, RealTropPoly, SignedTrop, format_point, parse_point, tropicalize
from .discriminant import classify_plane_weight_classes, exhaustive_separating_L, is_singular
from .linear import LinearSystem, circuits, rejecting_circuit, sample_solutions
from .patchwork import certified_member, dual_subdivision, is_patchwork_certified, plane_curve_cells
from .qpoly import qpoly, render
from .svg import render_svg
from .univariate import PolyaError, certify_nonroot, polya_exponent, real_roots, signed_roots
from .zerodim import PointSetK, build_basis, verify_basis

OUTDIR_ENV = "REALTROP_OUTDIR"


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as err:
        raise InputError(f"{path}: {err.strerror}") from None


def _load(parse, path: str):
    try:
        return parse(_read(path))
    except (ValueError, TypeError) as err:
        raise InputError(f"{path}: {err}") from None


def _rt_poly(args) -> RealTropPoly:
    if getattr(args, "kpoly", None):
        return tropicalize(_load(KPoly.parse, args.kpoly))
    if not args.poly:
        raise InputError("one of --poly or --kpoly is required")
    return _load(RealTropPoly.parse, args.poly)


def _point(text: str) -> tuple[SignedTrop, ...]:
    try:
        return parse_point(text)
    except ValueError as err:
        raise InputError(f"--point: {err}") from None


def _q(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _label(p) -> str:
    return "(" + ",".join(c.label() for c in p) + ")"


def _emit(args, record: dict) -> None:
    if args.json:
        print(json.dumps(record, sort_keys=True))


def cmd_trop(args) -> int:
    F = _load(KPoly.parse, args.kpoly)
    f = tropicalize(F)
    if args.json:
        _emit(args, {"terms": [[list(e), a.sign, _q(a.modulus)] for e, a in f.terms]})
    else:
        sys.stdout.write(f.dump())
    return 0


def cmd_roots(args) -> int:
    f = _rt_poly(args)
    rows = real_roots(f)
    if args.json:
        for r in rows:
            _emit(args, {"modulus": _q(r.modulus), "m": r.complex_mult, "m_plus": r.real_mult_plus,
                         "m_minus": r.real_mult_minus})
        return 0
    print("modulus\tm\tm_plus\tm_minus")
    for r in rows:
        print(f"{_q(r.modulus)}\t{r.complex_mult}\t{r.real_mult_plus}\t{r.real_mult_minus}")
    print("# signed roots: " + " ".join(x.label() for x in signed_roots(f)))
    return 0


def cmd_member(args) -> int:
    f = _rt_poly(args)
    p = _point(args.point)
    argmin = f.argmin(p)
    member = f.contains(p)
    if args.json:
        _emit(args, {"member": member, "value": _q(f.evaluate(p)),
                     "argmin": [[list(e), s] for e, s in argmin]})
        return 0
    print("member" if member else "not member")
    print("# argmin: " + " ".join(f"{list(e)}{'+' if s > 0 else '-'}" for e, s in argmin))
    return 0


def _outdir(args) -> Path:
    base = args.out or os.environ.get(OUTDIR_ENV) or "realtrop-out"
    path = Path(base)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _point_file(points) -> str:
    return "".join(format_point(p) + "\n" for p in points)


def _slug(c) -> str:
    return "_".join(f"{'p' if x.sign > 0 else 'm'}{_q(x.modulus).replace('/', 'o').replace('-', 'n')}" for x in c)


def cmd_basis0d(args) -> int:
    V = _load(PointSetK.parse, args.points)
    cert = build_basis(V)
    out = _outdir(args)
    for j, F in enumerate(cert.coord_polys, 1):
        (out / f"F{j}.kpoly").write_text(F.dump())
    (out / "F0.kpoly").write_text(cert.f0.dump())
    (out / "L.txt").write_text(" ".join(map(str, cert.functional)) + "\n")
    (out / "S.points").write_text(_point_file(cert.candidates))
    (out / "tropV.points").write_text(_point_file(cert.trop_v))
    (out / "survivors.points").write_text(_point_file(cert.survivors))
    for c, G in cert.discards.items():
        (out / f"G_{_slug(c)}.kpoly").write_text(f"# discards {format_point(c)}\n" + G.dump())
    ok = verify_basis(cert, V)
    if args.json:
        _emit(args, {"outdir": str(out), "candidates": len(cert.candidates),
                     "survivors": len(cert.survivors), "discards": len(cert.discards),
                     "functional": list(cert.functional), "verified": ok})
    else:
        print(f"output\t{out}")
        print(f"functional\t{' '.join(map(str, cert.functional))}")
        print(f"candidates\t{len(cert.candidates)}")
        print(f"survivors\t{len(cert.survivors)}")
        print(f"discards\t{len(cert.discards)}")
        print(f"verified\t{'yes' if ok else 'no'}")
    return 0 if ok else 1


def cmd_patchwork(args) -> int:
    f = _rt_poly(args)
    certified = is_patchwork_certified(f)
    sub = dual_subdivision(f)
    lines = [f"certified\t{'yes' if certified else 'no'}"]
    for cell, dual in zip(sub.cells, sub.duals):
        lines.append(f"cell\t{' '.join(map(str, cell))}\tdual\t{'' if dual is None else ' '.join(map(_q, dual))}")
    record = {"certified": certified, "cells": [[list(p) for p in c] for c in sub.cells]}
    if args.point:
        cm = certified_member(f, _point(args.point))
        lines.append(f"membership\t{cm.status.value}")
        record["membership"] = cm.status.value
    if f.nvars == 2 and sub.dim == 2:
        curves = plane_curve_cells(f)
        for o, curve in curves.items():
            lines.append(f"orthant\t{o[0]:+d}{o[1]:+d}\tvertices\t{' '.join(curve.labels())}")
        if args.svg:
            Path(args.svg).write_text(render_svg(curves))
    elif args.svg:
        raise InputError("--svg needs a bivariate polynomial whose support spans the plane")
    if args.json:
        _emit(args, record)
    else:
        print("\n".join(lines))
    return 0


def cmd_circuits(args) -> int:
    system = _load(LinearSystem.parse, args.system)
    forms = circuits(system)
    for form in forms:
        if args.json:
            _emit(args, {"support": sorted(form.support), "coefficients": [str(c) for c in form.coefficients]})
        else:
            print(f"{form}\t# {form.dump()}")
    if args.samples:
        for x in sample_solutions(system, args.samples, args.seed):
            if args.json:
                _emit(args, {"sample": [str(c) for c in x]})
            else:
                print("sample\t" + ", ".join(map(str, x)))
    return 0


def cmd_linmember(args) -> int:
    system = _load(LinearSystem.parse, args.system)
    p = _point(args.point)
    if len(p) != system.n:
        raise InputError(f"point has {len(p)} coordinates, system has {system.n} variables")
    bad = rejecting_circuit(circuits(system), p)
    if args.json:
        _emit(args, {"member": bad is None, "rejecting_circuit": None if bad is None else str(bad)})
    else:
        print("member" if bad is None else "not member")
        if bad is not None:
            print(f"# rejected by {bad}")
    return 0


def cmd_singular(args) -> int:
    f = _rt_poly(args)
    p = _point(args.point)
    v = is_singular(f, p, span=args.span)
    if args.json:
        _emit(args, {"singular": v.singular, "level": v.level,
                     "functional": None if v.functional is None else [v.functional.b0, *v.functional.b],
                     "flag": [[sorted(map(list, pos)), sorted(map(list, neg))] for pos, neg in v.flag.signed_parts]})
    else:
        print("singular" if v.singular else "not singular")
        for line in v.flag.describe():
            print("# " + line)
        if v.functional is not None:
            print(f"# witness at level {v.level}: L = {v.functional}")
    if args.crosscheck:
        # an exhaustive scan finding a separator would contradict a singular verdict
        for i, (pos, neg) in enumerate(v.flag.signed_parts):
            prev = v.flag.chain[i - 1] if i else frozenset()
            if exhaustive_separating_L(prev, pos, neg, f.nvars, args.lp_bound) is not None and v.singular:
                print(f"# cross-check failed at level {i}", file=sys.stderr)
                return 1
    return 0


def cmd_singclasses(args) -> int:
    f = _rt_poly(args)
    signs = args.orthant.strip()
    if len(signs) != 2 or any(s not in "+-" for s in signs):
        raise InputError("--orthant must be two signs, e.g. ++ or +-")
    orthant = tuple(1 if s == "+" else -1 for s in signs)
    rows = classify_plane_weight_classes(f, orthant)
    if not args.json:
        print("representative\tverdict\tpieces")
    for wc in rows:
        verdict = "singular" if wc.verdict.singular else "not singular"
        if args.json:
            _emit(args, {"representative": format_point(wc.representative), "singular": wc.verdict.singular,
                         "pieces": wc.pieces})
        else:
            print(f"{_label(wc.representative)}\t{verdict}\t{wc.description}")
    return 0


def cmd_polya(args) -> int:
    if args.kpoly:
        if not args.point:
            raise InputError("--kpoly needs --point")
        F = _load(KPoly.parse, args.kpoly)
        (p,) = _point(args.point)
        try:
            H = certify_nonroot(F, p, args.nmax)
        except ValueError as err:
            print(f"rejected: {err}", file=sys.stderr)
            return 1
        sys.stdout.write(H.dump())
        return 0
    if not args.coeffs:
        raise InputError("give --coeffs or --kpoly")
    try:
        g = qpoly(Fraction(c) for c in args.coeffs.replace(",", " ").split())
    except ValueError as err:
        raise InputError(f"--coeffs: {err}") from None
    try:
        n, expanded = polya_exponent(g, args.nmax)
    except PolyaError as err:
        print(f"rejected: {err}", file=sys.stderr)
        return 1
    if args.json:
        _emit(args, {"N": n, "coefficients": [_q(c) for c in expanded]})
    else:
        print(f"N\t{n}")
        print(f"product\t{render(expanded)}")
    return 0


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON lines instead of TSV")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--nmax", type=_positive, default=64, help="largest Polya exponent tried")
    common.add_argument("--lp-bound", type=_positive, default=3, help="coefficient bound for exhaustive cross-checks")

    parser = argparse.ArgumentParser(prog="realtrop", description="Real tropical bases and singularities.")
    sub = parser.add_subparsers(dest="command", required=True)

    def poly_args(p, point=False):
        p.add_argument("--poly", help="real tropical polynomial file")
        p.add_argument("--kpoly", help="polynomial over Puiseux series, tropicalized first")
        if point:
            p.add_argument("--point", required=True, help='signed point, e.g. "+0 -1"')

    p = sub.add_parser("trop", parents=[common], help="tropicalize a polynomial over K")
    p.add_argument("--kpoly", required=True)
    p.set_defaults(func=cmd_trop)

    p = sub.add_parser("roots", parents=[common], help="univariate roots and multiplicities")
    poly_args(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("member", parents=[common], help="hypersurface membership")
    poly_args(p, point=True)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("basis0d", parents=[common], help="real tropical basis of a finite point set")
    p.add_argument("--points", required=True)
    p.add_argument("--out", help=f"certificate directory (default ${OUTDIR_ENV} or ./realtrop-out)")
    p.set_defaults(func=cmd_basis0d)

    p = sub.add_parser("patchwork", parents=[common], help="dual subdivision and plane curve cells")
    poly_args(p)
    p.add_argument("--point")
    p.add_argument("--svg", help="write a four-quadrant picture here")
    p.set_defaults(func=cmd_patchwork)

    p = sub.add_parser("circuits", parents=[common], help="minimal-support forms of a linear system")
    p.add_argument("--system", required=True)
    p.add_argument("--samples", type=int, default=0, help="also print this many sampled solutions")
    p.set_defaults(func=cmd_circuits)

    p = sub.add_parser("linmember", parents=[common], help="membership in a tropicalized affine space")
    p.add_argument("--system", required=True)
    p.add_argument("--point", required=True)
    p.set_defaults(func=cmd_linmember)

    p = sub.add_parser("singular", parents=[common], help="decide whether a point is singular")
    poly_args(p, point=True)
    p.add_argument("--span", choices=("affine", "linear"), default="affine")
    p.add_argument("--crosscheck", action="store_true", help="confirm with an exhaustive functional scan")
    p.set_defaults(func=cmd_singular)

    p = sub.add_parser("singclasses", parents=[common], help="weight classes of a plane curve in one orthant")
    poly_args(p)
    p.add_argument("--orthant", default="++")
    p.set_defaults(func=cmd_singclasses)

    p = sub.add_parser("polya", parents=[common], help="Polya exponent or non-root certificate")
    p.add_argument("--coeffs", help="coefficients by increasing degree, e.g. '8 -8 2 1'")
    p.add_argument("--kpoly", help="univariate polynomial over K")
    p.add_argument("--point", help="signed root candidate to certify away")
    p.set_defaults(func=cmd_polya)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
