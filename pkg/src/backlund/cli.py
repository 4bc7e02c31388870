"""Command-line surface: evaluation, counting, window verification and
contour sample dumps.

Exit codes: 0 success, 1 numeric failure (machine-readable JSON on
stderr), 2 verification finished but some windows were unverifiable,
64 usage error.  Reports are deterministic: fixed field order, floats at
15 significant digits, no timestamps.
"""

from __future__ import annotations

import argparse
import math
import os
import random
import sys
from dataclasses import dataclass, field

from .complexfn import EvalParams
from .contour import rect_boundary, trace_arg_samples, window_bracket_path, winding_number, write_samples_csv
from .errors import BacklundError
from .locator import verify_range
from .serialize import dumps_json, fmt_float
from .windows import WindowSpec, count_zeros_to, select_window_params, window_count
from .zeta import theta_asymptotic, theta_exact, xi, zeta

__all__ = ["RunConfig", "run", "main"]

USAGE_EXIT = 64


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the contract here is 64.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)


@dataclass
class RunConfig:
    """One validated invocation: a single command, its numeric arguments,
    an optional output path and the report format."""

    command: str
    args: dict = field(default_factory=dict)
    out_path: str | None = None
    format: str = "json"
    params: EvalParams = field(default_factory=EvalParams)


def _build_parser() -> _Parser:
    parser = _Parser(prog="backlund", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zeta", help="evaluate zeta(sigma + it)")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--t", type=float, required=True)

    p = sub.add_parser("theta", help="Riemann-Siegel theta at t")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--mode", choices=("exact", "asymptotic", "both"), default="exact")

    p = sub.add_parser("xi", help="evaluate the completed xi(sigma + it)")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--t", type=float, required=True)

    p = sub.add_parser("count", help="zeros in the strip up to height t")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--epsilon", type=float, default=0.1)

    p = sub.add_parser("window", help="count and bound-check one height window")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--delta", type=float, default=None)
    p.add_argument("--epsilon", type=float, default=None)

    p = sub.add_parser("verify", help="scan and verify a height range window by window")
    p.add_argument("--t-min", type=float, required=True)
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--step", type=float, default=0.1)
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("winding-demo", help="argument-principle demo on a random rational function")
    p.add_argument("--zeros", type=int, required=True)
    p.add_argument("--poles", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("dump-contour", help="CSV samples of zeta along a window bracket contour")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--out", required=True)
    return parser


def _parse(argv) -> RunConfig:
    parser = _build_parser()
    ns = parser.parse_args(argv)

    env_eps = os.environ.get("BACKLUND_EPS")
    if env_eps is not None:
        try:
            params = EvalParams(target_eps=float(env_eps))
        except ValueError:
            parser.error(f"BACKLUND_EPS={env_eps!r} is not a valid error target")
    else:
        params = EvalParams()

    args = {k: v for k, v in vars(ns).items() if k not in ("command", "out", "format")}
    for key, value in args.items():
        if isinstance(value, float) and not math.isfinite(value):
            parser.error(f"--{key.replace('_', '-')} must be finite")

    # Domain checks that are usage errors, not numeric failures.
    cmd = ns.command
    if cmd in ("theta", "count") and args["t"] <= 0:
        parser.error("--t must be positive")
    if cmd == "count" and args["t"] <= 2:
        parser.error("--t must exceed 2 for counting")
    if cmd == "window" and args["t"] <= 3:
        parser.error("--t must exceed 3")
    if cmd == "verify" and not (3 < args["t_min"] < args["t_max"]):
        parser.error("need 3 < --t-min < --t-max")
    if cmd == "verify" and not (0 < args["step"] <= 0.25):
        parser.error("--step must lie in (0, 0.25]")
    if cmd == "winding-demo" and not (0 <= args["zeros"] <= 12 and 0 <= args["poles"] <= 12):
        parser.error("--zeros and --poles must lie in 0..12")
    if cmd == "dump-contour" and not (args["delta"] > 0 and args["epsilon"] > 0 and args["t"] - args["delta"] > 1):
        parser.error("need delta > 0, epsilon > 0 and t - delta > 1")

    return RunConfig(
        command=cmd,
        args=args,
        out_path=getattr(ns, "out", None),
        format=getattr(ns, "format", "json"),
        params=params,
    )


def _cmd_zeta(cfg: RunConfig) -> dict:
    r = zeta(complex(cfg.args["sigma"], cfg.args["t"]), cfg.params)
    return {
        "command": "zeta",
        "sigma": cfg.args["sigma"],
        "t": cfg.args["t"],
        "re": r.value.real,
        "im": r.value.imag,
        "est_abs_err": r.est_abs_err,
    }


def _cmd_xi(cfg: RunConfig) -> dict:
    v = xi(complex(cfg.args["sigma"], cfg.args["t"]), cfg.params)
    return {
        "command": "xi",
        "sigma": cfg.args["sigma"],
        "t": cfg.args["t"],
        "re": v.real,
        "im": v.imag,
    }


def _cmd_theta(cfg: RunConfig, out) -> None:
    t, mode = cfg.args["t"], cfg.args["mode"]
    lines = []
    if mode in ("exact", "both"):
        lines.append(f"exact {fmt_float(theta_exact(t))}")
    if mode in ("asymptotic", "both"):
        lines.append(f"asymptotic {fmt_float(theta_asymptotic(t))}")
    if mode == "both":
        lines.append(f"difference {fmt_float(theta_exact(t) - theta_asymptotic(t))}")
    print("\n".join(lines), file=out)


def _cmd_count(cfg: RunConfig) -> dict:
    n = count_zeros_to(cfg.args["t"], cfg.args["epsilon"], cfg.params)
    return {"command": "count", "t": cfg.args["t"], "epsilon": cfg.args["epsilon"], "count": n}


def _cmd_window(cfg: RunConfig) -> dict:
    t = cfg.args["t"]
    delta, epsilon = cfg.args["delta"], cfg.args["epsilon"]
    if delta is None and epsilon is None:
        spec = select_window_params(t, cfg.params)
    else:
        spec = WindowSpec(t_center=t, delta=delta if delta is not None else 0.5,
                          epsilon=epsilon if epsilon is not None else 0.1)
    report = window_count(spec, cfg.params)
    return {"command": "window", **report.to_jsonable()}


def _cmd_verify(cfg: RunConfig, out) -> int:
    report = verify_range(cfg.args["t_min"], cfg.args["t_max"], cfg.args["step"], cfg.params)
    if cfg.format == "json":
        print(dumps_json({"command": "verify", **report.to_jsonable()}), file=out)
    else:
        s = report.summary
        print(f"range [{fmt_float(report.t_min)}, {fmt_float(report.t_max)}]", file=out)
        for z in report.zeros:
            state = "verified" if z.window_verified else "unverified"
            print(f"zero {fmt_float(z.refined_t)} {state}", file=out)
        for w in report.windows:
            print(
                f"window {fmt_float(w.t_center)} count={w.window_count} "
                f"sign_changes={w.sign_changes_c11}/{w.sign_changes_c12} "
                f"bound={'ok' if w.bound_satisfied else 'uncertified'}",
                file=out,
            )
        for u in report.unverifiable:
            print(f"unverifiable {fmt_float(u['t_center'])} {u['error']}", file=out)
        print(
            f"summary zeros={s['total_zeros']} windows={s['total_windows']} "
            f"unverifiable={s['unverifiable_windows']} discrepancies={s['discrepancy_windows']}",
            file=out,
        )
    return 2 if report.unverifiable else 0


def _cmd_winding_demo(cfg: RunConfig) -> dict:
    n, m, seed = cfg.args["zeros"], cfg.args["poles"], cfg.args["seed"]
    rng = random.Random(seed)
    # Rectangle kept left of sigma = 2.4 and away from the pole guard.
    rect = rect_boundary(-2.5, 2.4, -2.2, 2.2)
    margin = 0.3

    def inside_point():
        return complex(rng.uniform(-2.5 + margin, 2.4 - margin), rng.uniform(-2.2 + margin, 2.2 - margin))

    zeros_at = [inside_point() for _ in range(n)]
    poles_at = [inside_point() for _ in range(m)]

    def f(z):
        num = 1.0 + 0.0j
        for a in zeros_at:
            num *= z - a
        den = 1.0 + 0.0j
        for b in poles_at:
            den *= z - b
        return num / den

    w = winding_number(rect, f, cfg.params)
    report = {
        "command": "winding-demo",
        "seed": seed,
        "zeros": n,
        "poles": m,
        "expected": n - m,
        "winding": w,
        "match": w == n - m,
    }
    if not report["match"]:
        raise BacklundError(f"winding {w} does not match zeros-minus-poles {n - m}")
    return report


def _cmd_dump_contour(cfg: RunConfig) -> dict:
    t, delta, epsilon = cfg.args["t"], cfg.args["delta"], cfg.args["epsilon"]
    path = window_bracket_path(epsilon, t - delta, t + delta)
    result, rows = trace_arg_samples(path, lambda s: zeta(s, cfg.params).value, cfg.params)
    with open(cfg.out_path, "w", encoding="utf-8") as fh:
        n = write_samples_csv(rows, fh)
    return {
        "command": "dump-contour",
        "t": t,
        "delta": delta,
        "epsilon": epsilon,
        "out": cfg.out_path,
        "rows": n,
        "arg_change": result.arg_change,
    }


def run(config: RunConfig, out=None) -> int:
    """Execute one validated invocation; returns the process exit code."""
    out = out if out is not None else sys.stdout
    try:
        if config.command == "theta":
            _cmd_theta(config, out)
            return 0
        if config.command == "verify":
            return _cmd_verify(config, out)
        dispatch = {
            "zeta": _cmd_zeta,
            "xi": _cmd_xi,
            "count": _cmd_count,
            "window": _cmd_window,
            "winding-demo": _cmd_winding_demo,
            "dump-contour": _cmd_dump_contour,
        }
        print(dumps_json(dispatch[config.command](config)), file=out)
        return 0
    except (BacklundError, ValueError, OSError) as exc:
        print(
            dumps_json({"error": type(exc).__name__, "message": str(exc)}),
            file=sys.stderr,
        )
        return 1


def main(argv=None) -> int:
    config = _parse(sys.argv[1:] if argv is None else argv)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
