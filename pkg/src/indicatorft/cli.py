"""Command-line driver: ``indicatorft {reproduce,ft,tile-check,oracle,interval-demo}``.

Exit codes: 0 success, 1 a reproduction/check step failed, 2 input error,
3 inconclusive sampling.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import bodies as bd
from .bodies import Ball, GeometryError, Interval1, ProductBody
from .oracle import QuadratureSpec, mc_indicator_ft, oracle_ft
from .tiling import (
    Lattice2,
    Z2,
    dual_lattice,
    exponential_orthogonality_check,
    k_tiling_check,
    spectral_tiling_check,
    tiling_report,
)
from .transform import DimensionMismatch, ft, lattice_agreement_report, write_points_csv

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3
DEFAULT_SEED = 7
CANDIDATE_LATTICE = ((1, 3), (1, -3))

NON_MULTITILER_ASSUMPTION = (
    "A convex body that k-tiles R^d by translations is a polytope "
    "(Gravin, Robins, Shiryaev 2012). P and Q have a round ball factor, so they "
    "are not polytopes and therefore not multi-tilers. Cited, not computed."
)


class InputError(ValueError):
    pass


def parse_body(text: str):
    """``R``, ``H``, ``ball:m:r``, ``square[:s]``, ``interval:h``, products joined by
    ``*``, or a path to a polygon JSON file."""
    text = text.strip()
    if "*" in text:
        factors = []
        for part in text.split("*"):
            f = parse_body(part)
            factors.extend(f.factors if isinstance(f, ProductBody) else [f])
        return ProductBody(factors)
    try:
        if text == "R":
            return bd.make_rhombus_R()
        if text == "H":
            return bd.make_hexagon_H()
        head, _, rest = text.partition(":")
        if head == "ball":
            m, _, r = rest.partition(":")
            return Ball(int(m), r or 1)
        if head == "square":
            return bd.make_square(rest or 1)
        if head == "interval":
            return Interval1(rest or 1)
    except (ValueError, GeometryError) as exc:
        raise InputError(f"bad body spec {text!r}: {exc}") from exc
    path = Path(text)
    if path.is_file():
        try:
            return bd.load_polygon(path)
        except (ValueError, GeometryError, OSError) as exc:
            raise InputError(f"cannot load polygon from {text}: {exc}") from exc
    raise InputError(f"unknown body {text!r}")


def parse_lattice(text: str) -> Lattice2:
    """``Z2`` or ``v1x,v1y,v2x,v2y`` (generator vectors, rational strings)."""
    if text.strip().upper() == "Z2":
        return Z2
    parts = [s for s in text.replace(" ", "").split(",") if s]
    if len(parts) != 4:
        raise InputError(f"lattice must be Z2 or four comma-separated rationals, got {text!r}")
    try:
        return Lattice2.from_generators(parts[:2], parts[2:])
    except GeometryError as exc:
        raise InputError(str(exc)) from exc


def parse_xi(values: list[str]) -> list[Fraction]:
    try:
        return [bd.as_fraction(v) for v in values]
    except GeometryError as exc:
        raise InputError(str(exc)) from exc


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _complex_json(z: complex) -> list[float]:
    return [z.real, z.imag]


# ---------------------------------------------------------------- reproduce


def _step(name: str, passed: bool, **measured) -> dict:
    return {"step": name, "passed": bool(passed), **measured}


def run_reproduce(args) -> int:
    out = Path(args.out or "reproduce_out")
    out.mkdir(parents=True, exist_ok=True)
    R = bd.make_rhombus_R()
    second = parse_body(args.second_body) if args.second_body else bd.make_hexagon_H()
    if not isinstance(second, bd.Polygon2):
        raise InputError("--second-body must be a polygon")
    steps = []

    # 1. canonical bodies
    ok = (
        bd.is_convex(R) and bd.is_convex(second)
        and bd.is_centrally_symmetric(R) and bd.is_centrally_symmetric(second)
        and bd.area(R) == 6
    )
    steps.append(_step(
        "bodies", ok,
        area_R=str(bd.area(R)), area_second=str(bd.area(second)),
        convex=[bd.is_convex(R), bd.is_convex(second)],
        centrally_symmetric=[bd.is_centrally_symmetric(R), bd.is_centrally_symmetric(second)],
    ))

    # 2. planar agreement on Z^2
    rep2 = lattice_agreement_report(R, second, args.range, args.tol, emit_points=args.emit_points)
    (out / "agreement_2d.json").write_text(_dump(rep2.summary()))
    if args.emit_points:
        with open(out / "points_2d.csv", "w") as fh:
            write_points_csv(rep2, fh)
    steps.append(_step("planar_lattice_agreement", rep2.violations == 0, **rep2.summary()))

    # 3. off-lattice separation
    half = (Fraction(1, 2), Fraction(0))
    fa, fb = ft(R, half).value, ft(second, half).value
    qa, qb = oracle_ft(R, half), oracle_ft(second, half)
    gap = abs(fa - fb)
    steps.append(_step(
        "off_lattice_separation", gap > 0.1,
        xi=["1/2", "0"], ft_R=_complex_json(fa), ft_second=_complex_json(fb), abs_diff=gap,
        oracle_abs_err=max(abs(fa - qa), abs(fb - qb)),
    ))

    # 4. the d = 4 products
    P = ProductBody([R, Ball(2, 1)])
    Q = ProductBody([second, Ball(2, 1)])
    rep4 = lattice_agreement_report(P, Q, args.range4, args.tol, emit_points=args.emit_points)
    (out / "agreement_4d.json").write_text(_dump(rep4.summary()))
    if args.emit_points:
        with open(out / "points_4d.csv", "w") as fh:
            write_points_csv(rep4, fh)
    xi4 = (Fraction(1, 2), 0, 0, 0)
    sep4 = abs(ft(P, xi4).value - ft(Q, xi4).value)
    steps.append(_step(
        "product_lattice_agreement", rep4.violations == 0 and sep4 > 0.1,
        off_lattice_abs_diff=sep4, **rep4.summary(),
    ))

    # 5. non-congruence
    verdict = bd.congruence_distinguisher(R, second)
    steps.append(_step("non_congruence", verdict == bd.DISTINCT, distinguisher=verdict))

    # 6. common tiling lattice
    L = Lattice2.from_generators(*CANDIDATE_LATTICE)
    tiling = {}
    tiles_ok = True
    for name, poly in (("R", R), ("second", second)):
        kt = k_tiling_check(poly, L, args.samples, args.seed, args.eps, k=1)
        sp = spectral_tiling_check(poly, L, args.spectral_range, args.tol)
        orth = exponential_orthogonality_check(poly, L, 100, args.seed, args.tol)
        tiling[name] = tiling_report(poly, L, kt, sp)
        tiling[name]["orthogonality_max_abs"] = orth.max_abs
        tiles_ok &= kt.passed and kt.k == 1 and sp.passed and orth.passed
        (out / f"tiling_{name}.json").write_text(_dump(tiling[name]))
    steps.append(_step("common_tiling_lattice", tiles_ok, lattice_generators=[list(map(str, v)) for v in L.generators]))

    failed = [s["step"] for s in steps if not s["passed"]]
    report = {
        "verdict": "counterexample reproduced" if not failed else "not reproduced",
        "failed_steps": failed,
        "steps": steps,
        "assumptions": [NON_MULTITILER_ASSUMPTION],
        "config": {
            "range_2d": args.range, "range_4d": args.range4, "tol": args.tol,
            "samples": args.samples, "seed": args.seed, "second_body": args.second_body or "H",
        },
    }
    (out / "verdict.json").write_text(_dump(report))
    if args.json:
        sys.stdout.write(_dump(report))
    else:
        for i, s in enumerate(steps, 1):
            print(f"[{'PASS' if s['passed'] else 'FAIL'}] step {i}: {s['step']}")
        print(report["verdict"])
    if failed:
        first = next(i for i, s in enumerate(steps, 1) if not s["passed"])
        print(f"first failing step: {first} ({steps[first - 1]['step']})", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# ---------------------------------------------------------------- ft / oracle


def run_ft(args) -> int:
    body = parse_body(args.body)
    xi = parse_xi(args.xi)
    try:
        val = ft(body, xi)
    except DimensionMismatch as exc:
        raise InputError(str(exc)) from exc
    result = {"xi": [str(c) for c in xi], "value": _complex_json(val.value), "branch": val.branch.value}
    if args.oracle:
        q = oracle_ft(body, xi, QuadratureSpec(order=args.order))
        result["oracle"] = _complex_json(q)
        result["oracle_abs_diff"] = abs(q - val.value)
    if args.json:
        sys.stdout.write(_dump(result))
    else:
        print(f"value  = {val.value.real:.15g} {val.value.imag:+.3g}i")
        print(f"branch = {val.branch.value}")
        if args.oracle:
            print(f"oracle = {result['oracle'][0]:.15g} {result['oracle'][1]:+.3g}i")
            print(f"|diff| = {result['oracle_abs_diff']:.3g}")
    return EXIT_OK


def run_oracle(args) -> int:
    body = parse_body(args.body)
    xi = parse_xi(args.xi)
    try:
        val = ft(body, xi).value
    except DimensionMismatch as exc:
        raise InputError(str(exc)) from exc
    spec = QuadratureSpec(order=args.order, mc_samples=args.samples, seed=args.seed)
    q = oracle_ft(body, xi, spec)
    est, se = mc_indicator_ft(body, xi, spec)
    result = {
        "xi": [str(c) for c in xi],
        "closed_form": _complex_json(val),
        "quadrature": _complex_json(q),
        "quadrature_abs_diff": abs(q - val),
        "monte_carlo": _complex_json(est),
        "monte_carlo_stderr": _complex_json(se),
        "mc_samples": args.samples,
        "seed": args.seed,
    }
    if args.json:
        sys.stdout.write(_dump(result))
    else:
        print(f"closed form : {val.real:.15g} {val.imag:+.3g}i")
        print(f"quadrature  : {q.real:.15g} {q.imag:+.3g}i  (|diff| {abs(q - val):.3g})")
        print(f"monte carlo : {est.real:.6g} {est.imag:+.6g}i  (se {se.real:.2g}, {se.imag:.2g})")
    return EXIT_OK


# ---------------------------------------------------------------- tile-check


def run_tile_check(args) -> int:
    body = parse_body(args.body)
    if not isinstance(body, bd.Polygon2):
        raise InputError("tile-check needs a polygon body")
    L = parse_lattice(args.lattice)
    kt = k_tiling_check(body, L, args.samples, args.seed, args.eps, k=args.k)
    sp = spectral_tiling_check(body, L, args.range, args.tol)
    report = tiling_report(body, L, kt, sp)
    report["dual_basis"] = [[str(v) for v in row] for row in dual_lattice(L).basis]
    if args.out:
        Path(args.out).write_text(_dump(report))
    if args.json:
        sys.stdout.write(_dump(report))
    else:
        print(f"cover sampling : {kt.verdict} (k={kt.k}, histogram={kt.histogram.counts}, "
              f"skipped={kt.histogram.skipped_near_boundary})")
        print(f"spectral       : {'pass' if sp.passed else 'fail'} (area matches covolume: "
              f"{sp.area_matches}, max |FT| {sp.max_abs:.3g})")
    if kt.verdict == "inconclusive":
        return EXIT_INCONCLUSIVE
    # the spectral criterion characterizes 1-tilings only
    ok = kt.passed and kt.k == args.k and (sp.passed if args.k == 1 else True)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------- interval-demo


def run_interval_demo(args) -> int:
    try:
        a, b = Interval1(args.h1), Interval1(args.h2)
    except GeometryError as exc:
        raise InputError(str(exc)) from exc
    fa, fb = ft(a, [0]).value.real, ft(b, [0]).value.real
    equal = abs(fa - fb) <= 1e-12
    # FT(0) is the length, so agreement at 0 forces equal half-lengths
    assert equal == (a.half_length == b.half_length)
    print(f"FT_1(0) = {fa:.15g}  FT_2(0) = {fb:.15g}")
    print("equal at 0" if equal else "differ at 0")
    return EXIT_OK


# ---------------------------------------------------------------- argument parsing


def _shared(p: argparse.ArgumentParser, *, range_default: int, samples_default: int) -> None:
    p.add_argument("--range", type=int, default=range_default, help="lattice sweep range N")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--samples", type=int, default=samples_default)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", default=None)
    p.add_argument("--emit-points", action="store_true")
    p.add_argument("--json", action="store_true", help="machine-readable output on stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="indicatorft", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reproduce", help="run the full counterexample pipeline")
    _shared(p, range_default=50, samples_default=10_000)
    p.add_argument("--range4", type=int, default=10, help="sweep range for the d=4 products")
    p.add_argument("--spectral-range", type=int, default=30)
    p.add_argument("--eps", type=float, default=1e-9)
    p.add_argument("--second-body", default=None, help="replace H by another polygon")
    p.set_defaults(func=run_reproduce)

    p = sub.add_parser("ft", help="evaluate one indicator transform")
    _shared(p, range_default=1, samples_default=10_000)
    p.add_argument("--body", required=True)
    p.add_argument("--xi", nargs="+", required=True)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--order", type=int, default=None)
    p.set_defaults(func=run_ft)

    p = sub.add_parser("tile-check", help="cover-count and spectral tiling checks")
    _shared(p, range_default=30, samples_default=10_000)
    p.add_argument("--body", required=True)
    p.add_argument("--lattice", required=True)
    p.add_argument("--eps", type=float, default=1e-9)
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=run_tile_check)

    p = sub.add_parser("oracle", help="closed form vs quadrature vs Monte Carlo")
    _shared(p, range_default=1, samples_default=1_000_000)
    p.add_argument("--body", required=True)
    p.add_argument("--xi", nargs="+", required=True)
    p.add_argument("--order", type=int, default=None)
    p.set_defaults(func=run_oracle)

    p = sub.add_parser("interval-demo", help="d=1: interval transforms at the origin")
    p.add_argument("h1")
    p.add_argument("h2")
    p.set_defaults(func=run_interval_demo)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "range", 1) < 1 or getattr(args, "tol", 1.0) <= 0:
        print("error: --range must be >= 1 and --tol > 0", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
