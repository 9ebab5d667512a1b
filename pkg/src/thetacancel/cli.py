"""Command-line front end: expansions, verification runs and JSON reports."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

from .charforms import HypothesisError, Q_KINDS, check_hypothesis, q_form, q_form_series_top
from .qseries import DEFAULT_ORDER
from .report import VerificationReport, entry
from .theta import eta_cubed, jacobi_identity_check, modular_pair, theta_constant
from .theta_numeric import DEFAULT_SAMPLES, DEFAULT_V, numeric_transformation_suite

COMMANDS = ("expand", "verify-even", "verify-twisted", "verify-odd", "verify-corollary",
            "check-numeric", "all")
ORDER_ENV = "THETACANCEL_ORDER"

EVEN_CASES = [(5, 0), (5, 1), (6, 0), (6, 1), (6, 2)]
TWISTED_CASES = [(5, 0), (5, 1), (6, 0), (6, 1)]
ODD_CASES = [(4, 1), (5, 0), (6, 1)]


@dataclass
class RunConfig:
    command: str
    d: int | None = None
    n: int | None = None
    order: int = DEFAULT_ORDER
    tol: float = 1e-9
    json: bool = False
    out: str | None = None
    tau: tuple | None = None
    v: complex = DEFAULT_V
    cid: str | None = None
    obj: str | None = None
    jobs: int = 1
    verbose: bool = False


class UsageError(Exception):
    pass


def default_order() -> int:
    raw = os.environ.get(ORDER_ENV)
    if raw is None:
        return DEFAULT_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{ORDER_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise UsageError(f"{ORDER_ENV} must be non-negative")
    return value


def _complex(text: str) -> complex:
    try:
        re_, im = (float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 're,im', got {text!r}") from None
    return complex(re_, im)


# expand

def expand_object(name: str, d: int | None, n: int | None, order: int) -> dict:
    """q-expansion of a named object as exact JSON."""
    from .cs_kernels import cs_form
    low = name.lower()
    scalar = {
        "eta3": lambda: eta_cubed(order),
        "theta1": lambda: theta_constant("theta1", order),
        "theta2": lambda: theta_constant("theta2", order),
        "theta3": lambda: theta_constant("theta3", order),
    }
    for lvl in (1, 2, 3):
        scalar[f"delta{lvl}"] = lambda lvl=lvl: modular_pair(lvl, order).delta
        scalar[f"epsilon{lvl}"] = lambda lvl=lvl: modular_pair(lvl, order).epsilon
    if low in scalar:
        series = scalar[low]()
        return {"object": low, "order": order, "series": series.to_json()}
    needs = None
    if name in Q_KINDS or name in ("P1", "P2", "P1p", "P2p"):
        needs = "Q"
    elif name in ("CSL", "CSW", "CSWp"):
        needs = "CS"
    if needs is None:
        known = sorted(list(scalar) + list(Q_KINDS) + ["P1", "P2", "P1p", "P2p", "CSL", "CSW", "CSWp"])
        raise UsageError(f"unknown object {name!r}; known: {', '.join(known)}")
    if d is None or n is None:
        raise UsageError(f"object {name} needs --d and --n")
    if needs == "Q":
        which = name.replace("P", "Q")
        series = q_form(which, d, n, order=order)
        if name.startswith("P"):
            series = q_form_series_top(series)
    else:
        series = cs_form(name[2:], d, n, order=order)
    return {"object": name, "d": d, "n": n, "order": order, "series": series.to_json()}


# verification

def _jacobi(order: int):
    res = jacobi_identity_check(max(order, 8))
    return entry(res["check_id"], res["identity"], res["params"], res["status"] == "pass",
                 res.get("details", []))


def _numeric(cfg: RunConfig) -> list:
    samples = [cfg.tau] if cfg.tau is not None else list(DEFAULT_SAMPLES)
    return numeric_transformation_suite(samples, cfg.tol, cfg.v)


def _jobs(cfg: RunConfig) -> list:
    from .modular_verify import COROLLARIES, verify_corollary, verify_odd, verify_theorem
    o = cfg.order
    if cfg.command == "verify-even":
        return [lambda: verify_theorem("even", cfg.d, cfg.n, o)[0]]
    if cfg.command == "verify-twisted":
        return [lambda: verify_theorem("twisted", cfg.d, cfg.n, o)[0]]
    if cfg.command == "verify-odd":
        return [lambda: verify_odd(cfg.d, cfg.n, o)]
    if cfg.command == "verify-corollary":
        return [lambda: verify_corollary(cfg.cid, o)]
    if cfg.command == "check-numeric":
        return [lambda: _numeric(cfg)]
    jobs = [lambda: [_jacobi(o)], lambda: _numeric(cfg)]
    jobs += [lambda c=c: verify_theorem("even", *c, o)[0] for c in EVEN_CASES]
    jobs += [lambda c=c: verify_theorem("twisted", *c, o)[0] for c in TWISTED_CASES]
    jobs += [lambda c=c: verify_odd(*c, o) for c in ODD_CASES]
    jobs += [lambda cid=cid: verify_corollary(cid, o) for cid in sorted(COROLLARIES)]
    return jobs


def _validate(cfg: RunConfig):
    if cfg.command in ("verify-even", "verify-twisted", "verify-odd"):
        if cfg.d is None or cfg.n is None:
            raise UsageError(f"{cfg.command} needs --d and --n")
        which = {"verify-even": "even", "verify-twisted": "twisted", "verify-odd": "odd"}[cfg.command]
        try:
            check_hypothesis(which, cfg.d, cfg.n)
        except HypothesisError as exc:
            raise UsageError(f"hypothesis violated: {exc}") from None
    if cfg.command == "verify-corollary":
        from .modular_verify import COROLLARIES
        if cfg.cid not in COROLLARIES:
            raise UsageError(f"unknown corollary id {cfg.cid!r}; known: {', '.join(sorted(COROLLARIES))}")
    if cfg.order < 0:
        raise UsageError("order must be non-negative")
    if cfg.tau is not None and cfg.tau.imag <= 0:
        raise UsageError("tau must lie in the upper half plane")


def run(cfg: RunConfig) -> tuple[int, VerificationReport | dict]:
    """Execute one command; exit status 0 iff no entry failed."""
    _validate(cfg)
    if cfg.command == "expand":
        if cfg.obj is None:
            raise UsageError("expand needs --object")
        return 0, expand_object(cfg.obj, cfg.d, cfg.n, cfg.order)
    report = VerificationReport(_config_dict(cfg))
    jobs = _jobs(cfg)
    if cfg.jobs > 1:
        with ThreadPoolExecutor(cfg.jobs) as pool:
            for result in pool.map(lambda f: f(), jobs):
                report.add(result)
    else:
        for job in jobs:
            report.add(job())
    return (0 if report.ok else 1), report


def run_all(order: int = DEFAULT_ORDER, jobs: int = 1) -> VerificationReport:
    return run(RunConfig("all", order=order, jobs=jobs))[1]


def _config_dict(cfg: RunConfig) -> dict:
    out = {k: v for k, v in asdict(cfg).items() if k not in ("json", "out", "jobs", "verbose")}
    out["tau"] = None if cfg.tau is None else [cfg.tau.real, cfg.tau.imag]
    out["v"] = [cfg.v.real, cfg.v.imag]
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="thetacancel",
                                description="Exact verification of twisted anomaly cancellation formulas.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--d", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--order", type=int, default=None,
                   help=f"truncation order in half-powers of q (default 8, or ${ORDER_ENV})")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.add_argument("--tau", type=_complex, help="'re,im' sample point for check-numeric")
    p.add_argument("--v", type=_complex, default=DEFAULT_V, help="'re,im' elliptic argument")
    p.add_argument("--id", dest="cid", help="corollary id for verify-corollary")
    p.add_argument("--object", dest="obj", help="object name for expand")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--verbose", "-v", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        order = args.order if args.order is not None else default_order()
        cfg = RunConfig(args.command, args.d, args.n, order, args.tol, args.json, args.out, args.tau,
                        args.v, args.cid, args.obj, max(1, args.jobs), args.verbose)
        code, result = run(cfg)
    except (UsageError, HypothesisError) as exc:
        parser.print_usage(sys.stderr)
        print(f"thetacancel: error: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, VerificationReport):
        text = result.dumps() if cfg.json else result.human(cfg.verbose)
        if cfg.out:
            with open(cfg.out, "w") as fh:
                fh.write(result.dumps() + "\n")
    else:
        text = json.dumps(result, indent=2, sort_keys=True)
        if cfg.out:
            with open(cfg.out, "w") as fh:
                fh.write(text + "\n")
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
