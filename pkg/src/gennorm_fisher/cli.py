"""Command-line surface: pdf tables, Fisher estimates, moments, estimation,
and the verification batteries.

Tables default to CSV (header row, full-precision floats via repr); single
records default to JSON with the schema

    {command, inputs{}, outputs{}, metadata{seed, tolerances, version}}

Exit codes: 0 success, 1 verification or numerical failure, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__
from .distribution import (
    GenNormParams,
    MomentSpec,
    exact_moment,
    sample,
)
from .distribution import _log_pdf_arr  # CLI renders the same vectorized density the quadrature sees
from .estimation import (
    DegenerateDataError,
    ExperimentConfig,
    mle_theta,
    run_crlb_experiment,
)
from .fisher import (
    METHODS,
    _score_arr,
    expected_score_quad,
    fisher_closed_form,
    fisher_mc_score_variance,
    fisher_quad_neg_hessian,
    fisher_quad_score_variance,
)
from .quadrature import QuadratureError
from .special_functions import RationalArg, gamma, gamma_rational

DEFAULT_SEED = 20260819
_METHOD_ORDER = ("closed_form", "quad_score_variance", "quad_neg_hessian", "mc_score_variance")


@dataclass
class OutputRecord:
    """Machine-readable result wrapper; serializes losslessly (repr floats)."""

    command: str
    inputs: dict
    outputs: dict
    metadata: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)


def _fmt(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _csv(columns: list[str], rows: list[tuple]) -> str:
    lines = [",".join(columns)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _table(args, command: str, inputs: dict, columns: list[str], rows: list[tuple], metadata: dict) -> None:
    if args.format == "csv":
        _emit(_csv(columns, rows), args.output)
    else:
        record = OutputRecord(
            command=command,
            inputs=inputs,
            outputs={"columns": columns, "rows": [list(r) for r in rows]},
            metadata=metadata,
        )
        _emit(record.to_json(), args.output)


def _metadata(seed=None, tolerances=None) -> dict:
    return {"seed": seed, "tolerances": tolerances or {}, "version": __version__}


# ---------------------------------------------------------------- pdf

def _cmd_pdf(args) -> int:
    params = GenNormParams(theta=args.theta, beta=args.beta)
    if args.count < 1:
        raise ValueError(f"--count must be >= 1, got {args.count}")
    if args.count == 1:
        if args.min != args.max:
            raise ValueError("--count 1 requires --min equal to --max")
        grid = np.array([args.min])
    else:
        if not args.min < args.max:
            raise ValueError("--min must be strictly below --max for --count >= 2")
        grid = np.linspace(args.min, args.max, args.count)
    log_density = _log_pdf_arr(params, grid)
    rows = [
        (float(x), float(math.exp(lp)), float(lp))
        for x, lp in zip(grid, log_density)
    ]
    inputs = {"theta": params.theta, "beta": params.beta,
              "min": args.min, "max": args.max, "count": args.count}
    _table(args, "pdf", inputs, ["x", "pdf", "log_pdf"], rows, _metadata())
    return 0


# ---------------------------------------------------------------- fisher

def _parse_methods(spec: str, beta: float) -> list[str]:
    if spec == "all":
        methods = [m for m in _METHOD_ORDER]
        even = float(beta).is_integer() and int(beta) % 2 == 0
        if not even:
            methods.remove("closed_form")  # only defined for even integer shapes
        return methods
    methods = [m.strip() for m in spec.split(",") if m.strip()]
    if not methods:
        raise ValueError("--methods must name at least one method")
    unknown = sorted(set(methods) - METHODS)
    if unknown:
        raise ValueError(f"unknown methods {unknown}; choose from {sorted(METHODS)}")
    return [m for m in _METHOD_ORDER if m in methods]


def _cmd_fisher(args) -> int:
    params = GenNormParams(theta=args.theta, beta=args.beta)
    methods = _parse_methods(args.methods, params.beta)
    rows: list[tuple] = []
    for method in methods:
        if method == "closed_form":
            est = fisher_closed_form(params)  # ValueError for non-even shapes -> exit 2
        elif method == "quad_score_variance":
            est = fisher_quad_score_variance(params, tol=args.tol)
        elif method == "quad_neg_hessian":
            est = fisher_quad_neg_hessian(params, tol=args.tol)
        else:
            est = fisher_mc_score_variance(params, n=args.n, seed=args.seed)
        rows.append((est.method, est.value, est.error_estimate))
    inputs = {"theta": params.theta, "beta": params.beta, "methods": methods,
              "tol": args.tol, "n": args.n}
    _table(args, "fisher", inputs, ["method", "value", "error_estimate"], rows,
           _metadata(seed=args.seed, tolerances={"tol": args.tol}))
    return 0


# ---------------------------------------------------------------- moments

def _cmd_moments(args) -> int:
    params = GenNormParams(theta=args.theta, beta=args.beta)
    orders = []
    for part in args.k.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            k = int(part)
        except ValueError:
            raise ValueError(f"--k entries must be integers, got {part!r}") from None
        orders.append(k)
    if not orders:
        raise ValueError("--k must list at least one moment order")
    rows = [(k, exact_moment(MomentSpec(k=k, params=params))) for k in orders]
    inputs = {"theta": params.theta, "beta": params.beta, "k": orders}
    _table(args, "moments", inputs, ["k", "value"], rows, _metadata())
    return 0


# ---------------------------------------------------------------- estimate

def _read_samples(path: str) -> np.ndarray:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ValueError(f"cannot read sample file {path!r}: {exc}") from None
    values = []
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text:
            continue  # blank lines ignored
        try:
            values.append(float(text))
        except ValueError:
            raise ValueError(f"{path}:{lineno}: not a number: {text!r}") from None
    if not values:
        raise ValueError(f"sample file {path!r} contains no numbers")
    return np.asarray(values, dtype=np.float64)


def _cmd_estimate(args) -> int:
    if (args.input is None) == (not args.simulate):
        raise ValueError("provide exactly one of --input FILE or --simulate")
    if args.simulate:
        params = GenNormParams(theta=args.theta, beta=args.beta)
        draws = sample(params, args.n, args.seed)
        source = {"generator": {"theta": params.theta, "beta": params.beta,
                                "n": args.n, "seed": args.seed}}
    else:
        draws = _read_samples(args.input)
        source = {"file": args.input}
    theta_hat = mle_theta(draws, args.beta)
    fitted = GenNormParams(theta=theta_hat, beta=args.beta)
    residual = float(_score_arr(fitted, draws).sum())
    outputs = {"theta_hat": theta_hat, "score_residual": residual,
               "n_samples": int(draws.size)}
    inputs = {"beta": args.beta, **source}
    if args.format == "csv":
        _emit(_csv(list(outputs), [tuple(outputs.values())]), args.output)
    else:
        record = OutputRecord("estimate", inputs, outputs,
                              _metadata(seed=args.seed if args.simulate else None))
        _emit(record.to_json(), args.output)
    return 0


# ---------------------------------------------------------------- verify

class _CheckPrinter:
    def __init__(self):
        self.failures = 0
        self.count = 0

    def check(self, name: str, ok: bool, observed, expected, tol: str) -> None:
        self.count += 1
        if not ok:
            self.failures += 1
        status = "PASS" if ok else "FAIL"
        print(f"{status} {name} observed={_fmt(observed)} expected={_fmt(expected)} tol={tol}")

    def finish(self, suite: str) -> int:
        passed = self.count - self.failures
        print(f"{suite}: {passed}/{self.count} checks passed")
        return 0 if self.failures == 0 else 1


def _verify_lemma2(printer: _CheckPrinter) -> None:
    for n in range(1, 7):
        for p in range(1, 7):
            direct = gamma(n + 1.0 / p)
            via_identity = gamma_rational(RationalArg(n=n, p=p))
            rel = abs(via_identity - direct) / direct
            printer.check(f"lemma2[n={n},p={p}]", rel <= 1e-12, via_identity, direct, "rel 1e-12")


_GRID_BETAS = (2, 4, 6, 8)
_GRID_THETAS = (0.5, 1.0, 2.0)


def _verify_theorem1(printer: _CheckPrinter, tol: float, n: int, seed: int) -> None:
    cell = 0
    for beta in _GRID_BETAS:
        for theta in _GRID_THETAS:
            params = GenNormParams(theta=theta, beta=float(beta))
            closed = fisher_closed_form(params).value
            sv = fisher_quad_score_variance(params, tol=tol).value
            nh = fisher_quad_neg_hessian(params, tol=tol).value
            mc = fisher_mc_score_variance(params, n=n, seed=seed + cell)
            tag = f"theorem1[beta={beta},theta={theta}]"
            printer.check(f"{tag} score-variance", abs(sv - closed) / closed <= 1e-7,
                          sv, closed, "rel 1e-7")
            printer.check(f"{tag} neg-hessian", abs(nh - closed) / closed <= 1e-7,
                          nh, closed, "rel 1e-7")
            printer.check(f"{tag} monte-carlo", abs(mc.value - closed) <= 4 * mc.error_estimate,
                          mc.value, closed, "4 standard errors")
            cell += 1


def _verify_equivalence(printer: _CheckPrinter, tol: float) -> None:
    for beta in _GRID_BETAS:
        for theta in _GRID_THETAS:
            params = GenNormParams(theta=theta, beta=float(beta))
            sv = fisher_quad_score_variance(params, tol=tol).value
            nh = fisher_quad_neg_hessian(params, tol=tol).value
            mean_score = expected_score_quad(params).value
            tag = f"equivalence[beta={beta},theta={theta}]"
            printer.check(f"{tag} routes", abs(nh - sv) <= 2e-8 * sv, nh, sv, "abs 2e-8*value")
            printer.check(f"{tag} zero-mean-score", abs(mean_score) <= 1e-9,
                          mean_score, 0.0, "abs 1e-9")


def _verify_crlb(printer: _CheckPrinter, beta: float, theta: float, n: int,
                 trials: int, seed: int) -> None:
    config = ExperimentConfig(beta=int(beta), theta_true=theta, n=n, trials=trials, seed=seed)
    report = run_crlb_experiment(config)
    tag = f"crlb[beta={config.beta},theta={config.theta_true}]"
    printer.check(f"{tag} efficiency", 0.9 <= report.efficiency <= 1.1,
                  report.efficiency, 1.0, "band [0.9, 1.1]")
    printer.check(f"{tag} failed-trials", report.failed_trials == 0,
                  report.failed_trials, 0, "exact")


def _cmd_verify(args) -> int:
    printer = _CheckPrinter()
    if args.suite == "lemma2":
        _verify_lemma2(printer)
    elif args.suite == "theorem1":
        n = args.n if args.n is not None else 1_000_000
        _verify_theorem1(printer, tol=args.tol, n=n, seed=args.seed)
    elif args.suite == "equivalence":
        _verify_equivalence(printer, tol=args.tol)
    else:
        n = args.n if args.n is not None else 10_000
        _verify_crlb(printer, beta=args.beta, theta=args.theta, n=n,
                     trials=args.trials, seed=args.seed)
    return printer.finish(args.suite)


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gennorm-fisher",
        description="Generalized normal distribution tools: density tables, "
                    "Fisher information, moments, estimation, verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, seed_default=0, fmt_default="csv"):
        p.add_argument("--theta", type=float, default=1.0, help="scale parameter (default 1)")
        p.add_argument("--beta", type=float, default=2.0, help="shape parameter (default 2)")
        p.add_argument("--seed", type=int, default=seed_default,
                       help=f"RNG seed (default {seed_default})")
        p.add_argument("--format", choices=("csv", "json"), default=fmt_default,
                       help=f"output format (default {fmt_default})")
        p.add_argument("--output", default=None, help="write to file instead of stdout")

    p_pdf = sub.add_parser("pdf", help="density table over an x grid")
    add_common(p_pdf)
    p_pdf.add_argument("--min", type=float, required=True, help="grid start")
    p_pdf.add_argument("--max", type=float, required=True, help="grid end")
    p_pdf.add_argument("--count", type=int, required=True,
                       help="grid points; 1 allowed when min == max")
    p_pdf.set_defaults(func=_cmd_pdf)

    p_fisher = sub.add_parser("fisher", help="Fisher information estimates")
    add_common(p_fisher)
    p_fisher.add_argument("--methods", default="all",
                          help="comma list from closed_form, quad_score_variance, "
                               "quad_neg_hessian, mc_score_variance; 'all' selects "
                               "every method valid for the given beta (default all)")
    p_fisher.add_argument("--tol", type=float, default=1e-9,
                          help="relative quadrature tolerance (default 1e-9)")
    p_fisher.add_argument("--n", type=int, default=1_000_000,
                          help="Monte Carlo sample count (default 1e6)")
    p_fisher.set_defaults(func=_cmd_fisher)

    p_moments = sub.add_parser("moments", help="exact moments E[X^k]")
    add_common(p_moments)
    p_moments.add_argument("--k", required=True, help="comma list of moment orders")
    p_moments.set_defaults(func=_cmd_moments)

    p_est = sub.add_parser("estimate", help="maximum-likelihood scale estimate")
    add_common(p_est, fmt_default="json")
    p_est.add_argument("--input", default=None,
                       help="sample file: one number per line, blank lines ignored")
    p_est.add_argument("--simulate", action="store_true",
                       help="draw samples from (theta, beta) instead of reading a file")
    p_est.add_argument("--n", type=int, default=1_000_000,
                       help="sample count for --simulate (default 1e6)")
    p_est.set_defaults(func=_cmd_estimate)

    p_verify = sub.add_parser("verify", help="run a verification battery")
    add_common(p_verify, seed_default=DEFAULT_SEED)
    p_verify.add_argument("suite", choices=("lemma2", "theorem1", "equivalence", "crlb"))
    p_verify.add_argument("--tol", type=float, default=1e-9,
                          help="relative quadrature tolerance (default 1e-9)")
    p_verify.add_argument("--n", type=int, default=None,
                          help="Monte Carlo draws (theorem1, default 1e6) or per-trial "
                               "samples (crlb, default 1e4)")
    p_verify.add_argument("--trials", type=int, default=1000,
                          help="crlb trials (default 1000)")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors, 0 for --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OverflowError) as exc:  # domain, input, degenerate data
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QuadratureError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
