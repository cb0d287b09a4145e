"""Command-line front end.

Subcommands: constants, coeffs, verify, mass, bounds, gw, compare, envelope.
Output is CSV (17 significant digits, round-trip safe) or JSON; numbers with
|log10| > 300 are emitted as strings in JSON to protect consumers.  Output
is deterministic for a fixed invocation.  Exit codes: 0 success, 1 domain or
range error, 2 I/O or usage error.  ZETA_TOOLKIT_THREADS caps row-level
parallelism (default 1; rows are emitted in input order either way).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import explicit_formula as ef
from . import extremal, interp, zero_sums
from .errors import ZetaToolkitError
from .extremal import ApproxParams
from .special import log_deriv, solve_lambda0


def _parse_range(text: str) -> list[float]:
    """'lo:hi:step' inclusive grid, a comma list, or a single value."""
    if "," in text:
        return [float(x) for x in text.split(",") if x]
    if ":" not in text:
        return [float(text)]
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected lo:hi:step or value, got {text!r}")
    lo, hi, step = (float(x) for x in parts)
    if step <= 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    n = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [lo + i * step for i in range(n)]


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return f"{x:.17g}"
    return str(x)


def _json_safe(x):
    if isinstance(x, float):
        if math.isfinite(x) and x != 0 and abs(math.log10(abs(x))) > 300:
            return f"{x:.17g}"
        if not math.isfinite(x):
            return f"{x}"
        return x
    return x


def _emit(rows: list[dict], meta: dict, fmt: str, out) -> None:
    if fmt == "json":
        doc = {"meta": {k: _json_safe(v) for k, v in meta.items()},
               "rows": [{k: _json_safe(v) for k, v in r.items()} for r in rows]}
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    for k, v in meta.items():
        out.write(f"# {k}={_fmt(v)}\n")
    cols = list(rows[0].keys()) if rows else []
    out.write(",".join(cols) + "\n")
    for r in rows:
        out.write(",".join(_fmt(r[c]) for c in cols) + "\n")


def _map_rows(fn, items):
    cap = os.environ.get("ZETA_TOOLKIT_THREADS")
    workers = max(1, int(cap)) if cap else 1
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items))   # map preserves order


def _coeff_row(a: float, delta: float) -> dict:
    p = ApproxParams(a=a, delta=delta)
    mc = extremal.minorant_coeffs(p)
    uc = extremal.majorant_coeffs(p)
    return {"a": a, "delta": delta, "lambda": p.lam, "branch": uc.branch.value,
            "A": mc.A, "B": mc.B, "C": uc.C, "D": uc.D, "E": uc.E}


def _cmd_coeffs(args, out) -> int:
    rows = _map_rows(lambda ad: _coeff_row(*ad),
                     [(a, d) for a in args.a for d in args.delta])
    _emit(rows, {"command": "coeffs"}, args.format, out)
    return 0


def _cmd_constants(args, out) -> int:
    lam0 = solve_lambda0()

    def row(ad):
        a, d = ad
        r = _coeff_row(a, d)
        p = ApproxParams(a=a, delta=d)
        r["minorant_mass"] = extremal.minorant_mass(p)
        r["majorant_mass"] = extremal.majorant_mass(p)
        return r

    rows = _map_rows(row, [(a, d) for a in args.a for d in args.delta])
    _emit(rows, {"command": "constants", "lambda0": lam0}, args.format, out)
    return 0


def _cmd_verify(args, out) -> int:
    def row(ad):
        a, d = ad
        p = ApproxParams(a=a, delta=d)
        rep = extremal.verify_extremal(p, args.kind, window=args.window,
                                       num_points=args.points)
        return {"kind": args.kind, "a": a, "delta": d, "lambda": p.lam,
                "window": args.window or 20.0 / a, "points": args.points,
                "max_violation": rep.max_violation, "argmax": rep.argmax,
                "max_violation_raw": rep.max_violation_raw,
                "pass": rep.max_violation <= args.tol}

    rows = _map_rows(row, [(a, d) for a in args.a for d in args.delta])
    _emit(rows, {"command": "verify", "tol": args.tol}, args.format, out)
    return 0 if all(r["pass"] for r in rows) else 1


def _cmd_mass(args, out) -> int:
    def row(item):
        a, d, kind = item
        p = ApproxParams(a=a, delta=d)
        closed = (extremal.minorant_mass(p) if kind == "minorant"
                  else extremal.majorant_mass(p))
        quadv, cert = extremal.mass_quadrature(p, kind, tol=args.tol)
        return {"kind": kind, "a": a, "delta": d, "lambda": p.lam,
                "closed_form": closed, "quadrature": quadv,
                "abs_error": abs(closed - quadv), "certificate": cert}

    kinds = [args.kind] if args.kind else ["minorant", "majorant"]
    rows = _map_rows(row, [(a, d, k) for a in args.a for d in args.delta for k in kinds])
    _emit(rows, {"command": "mass"}, args.format, out)
    return 0


def _cmd_bounds(args, out) -> int:
    def row(st):
        sigma, t = st
        r = {"sigma": sigma, "t": t,
             "b_sigma": interp.b_sigma(sigma),
             "c_sigma": interp.c_sigma(sigma),
             "realpart_coeff": interp.realpart_coeff(sigma)}
        b1 = interp.theorem1_bound(sigma, t, c=args.c, strict=False)
        b2 = interp.theorem2_bound(sigma, t, c=args.c, strict=False)
        t3u = ef.theorem3_upper(sigma, t, c=args.c, strict=False)
        t3l = ef.theorem3_lower(sigma, t, c=args.c, strict=False)
        r.update({"range_ok": b1.range_ok,
                  "thm1_main": b1.main_value, "thm1_error_shape": b1.error_shape_value,
                  "thm2_main": b2.main_value, "thm2_error_shape": b2.error_shape_value,
                  "thm3_range_ok": t3u.range_ok,
                  "thm3_upper_main": t3u.main_value,
                  "thm3_lower_main": t3l.main_value,
                  "thm3_error_shape": t3u.error_shape_value})
        if args.compare_empirical:
            try:
                ld = abs(log_deriv(complex(sigma, t)))
                r["log_deriv_abs"] = ld
                r["empirical_ratio"] = ld / r["thm1_main"]
            except ZetaToolkitError:
                r["log_deriv_abs"] = math.nan
                r["empirical_ratio"] = math.nan
        return r

    items = [(s, t) for s in args.sigma for t in args.t]
    rows = _map_rows(row, items)
    _emit(rows, {"command": "bounds", "c": args.c,
                 "compare_empirical": bool(args.compare_empirical)}, args.format, out)
    return 0


def _gw_bundle(kind: str, a: float, delta: float):
    p = ApproxParams(a=a, delta=delta)
    return ef.minorant_bundle(p) if kind == "minorant" else ef.majorant_bundle(p)


def _cmd_gw(args, out) -> int:
    def row(item):
        kind, a, d, t = item
        h = _gw_bundle(kind, a, d)
        br = ef.gw_rhs(h, t, tol=args.tol)
        return {"kind": kind, "a": a, "delta": d, "t": t,
                "archimedean": br.archimedean, "pole": br.pole, "log_pi": br.log_pi,
                "prime_sum": br.prime_sum, "total": br.total,
                "certificate": br.certificate}

    kinds = [args.kind] if args.kind else ["minorant", "majorant"]
    rows = _map_rows(row, [(k, a, d, t) for k in kinds for a in args.a
                           for d in args.delta for t in args.t])
    _emit(rows, {"command": "gw"}, args.format, out)
    return 0


def _cmd_compare(args, out) -> int:
    zeros = zero_sums.parse_zeros(args.zeros)
    rows = []
    for t in args.t:
        for a in args.a:
            for d in args.delta:
                for kind in ([args.kind] if args.kind else ["minorant", "majorant"]):
                    h = _gw_bundle(kind, a, d)
                    lhs, tail = zero_sums.gw_lhs(h, t, zeros)   # CoverageError if out of range
                    rhs = ef.gw_rhs(h, t, tol=args.tol)
                    tolerance = tail + rhs.certificate
                    rows.append({"kind": kind, "a": a, "delta": d, "t": t,
                                 "gw_lhs": lhs, "lhs_tail": tail,
                                 "gw_rhs_total": rhs.total,
                                 "rhs_certificate": rhs.certificate,
                                 "abs_diff": abs(lhs - rhs.total),
                                 "within_certificates": abs(lhs - rhs.total) <= tolerance})
    meta = {"command": "compare", "zeros": args.zeros,
            "zeros_count": zeros.count, "zeros_height": zeros.height,
            "tail_model": "density (1/2pi) log((x+2)/2pi) + 2 (conservative)"}
    _emit(rows, meta, args.format, out)
    return 0 if all(r["within_certificates"] for r in rows) else 1


def _cmd_envelope(args, out) -> int:
    def row(st):
        sigma, t = st
        env = interp.zeta_envelopes(sigma)
        a2c, b2c = interp.second_deriv_coeffs(sigma)
        nu, asym = interp.optimal_parameters(env, t)
        bound = interp.derivative_bound(env, t)
        ratio = bound / interp.ell(0, sigma, t)
        target = interp.c_sigma(sigma) / (sigma * (1 - sigma))
        return {"sigma": sigma, "t": t, "alpha2_coeff": a2c, "beta2_coeff": b2c,
                "alpha0_coeff": interp.log_modulus_coeff(sigma), "L": env.L,
                "nu": nu, "A": asym, "bound_over_ell0": ratio,
                "c_sigma_over_s1ms": target,
                "consistency_residual": abs(ratio - target)}

    rows = _map_rows(row, [(s, t) for s in args.sigma for t in args.t])
    _emit(rows, {"command": "envelope"}, args.format, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="zeta-toolkit",
        description="Extremal bandlimited approximations and explicit-formula "
                    "bounds for the zeta log-derivative")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, sigma=False, t=False, a=False, delta=False, zeros=False, kind=None):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--tol", type=float, default=1e-8)
        p.add_argument("--c", type=float, default=0.01)
        if sigma:
            p.add_argument("--sigma", type=_parse_range, required=True,
                           help="value or lo:hi:step")
        if t:
            p.add_argument("--t", type=_parse_range, required=True)
        if a:
            p.add_argument("--a", type=_parse_range, required=True)
        if delta:
            p.add_argument("--delta", type=_parse_range, required=True)
        if zeros:
            p.add_argument("--zeros", required=True, help="path to a zero table")
        if kind is not None:
            p.add_argument("--kind", choices=("minorant", "majorant"),
                           required=kind == "required")

    p = sub.add_parser("constants", help="lambda0, coefficients and masses")
    common(p, a=True, delta=True)
    p.set_defaults(func=_cmd_constants)

    p = sub.add_parser("coeffs", help="minorant/majorant coefficients")
    common(p, a=True, delta=True)
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("verify", help="grid check of the one-sided inequalities")
    common(p, a=True, delta=True, kind="required")
    p.add_argument("--window", type=float, default=None)
    p.add_argument("--points", type=int, default=100001)
    p.set_defaults(func=_cmd_verify, tol=1e-12)

    p = sub.add_parser("mass", help="closed-form masses vs quadrature")
    common(p, a=True, delta=True, kind="optional")
    p.set_defaults(func=_cmd_mass)

    p = sub.add_parser("bounds", help="theorem constants and main values")
    common(p, sigma=True, t=True)
    p.add_argument("--compare-empirical", action="store_true",
                   help="record |zeta'/zeta| / main value (not asserted)")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("gw", help="explicit-formula right-hand side")
    common(p, a=True, delta=True, t=True, kind="optional")
    p.set_defaults(func=_cmd_gw)

    p = sub.add_parser("compare", help="zero-table sum vs explicit-formula rhs")
    common(p, a=True, delta=True, t=True, zeros=True, kind="optional")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("envelope", help="interpolation envelopes and consistency")
    common(p, sigma=True, t=True)
    p.set_defaults(func=_cmd_envelope)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    out = sys.stdout
    try:
        return args.func(args, out)
    except ZetaToolkitError as exc:
        if args.format == "json":
            out.write(json.dumps({"error": {"type": type(exc).__name__,
                                            "message": str(exc)}}) + "\n")
        else:
            sys.stderr.write(f"error ({type(exc).__name__}): {exc}\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"i/o error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
