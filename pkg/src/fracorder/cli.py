"""Command-line verification harness.

Subcommands::

    verify-lemma  --n-max N --t T1,T2,... [--tol X]
    verify-binom  --n-max N [--tol X]
    verify-main   --function exp|sin|geom|poly:c0,c1,... [--t ...] [--series-k K] [--tol X]
    residues      --n N
    plot-data     --kind integrand|partial_sums|convergence --out FILE [--n --t ...]

Global flags (before or after the subcommand): ``--panel-order``,
``--max-periods``, ``--accel-terms``, ``--abs-tol``, ``--json OUT`` and
``--config FILE``.  Flags override the TOML config file, which overrides the
built-in defaults.

Exit status: 0 all checks passed, 1 a check failed, 2 usage or config error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
import time
from dataclasses import fields
from typing import Any, Callable, Optional, Sequence

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from . import catalog, residue
from .errors import DomainError
from .orderquad import (
    OrderIntegralResult,
    QuadratureConfig,
    accelerated_partial_sums,
    binom_integral,
    integrate_order,
    lemma_integral,
    lemma_integrand,
    main_identity_eval,
    period_sums,
    tail_bound,
)
from .report import Case, VerificationReport
from .specfun import pochhammer, sinpi

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

DEFAULT_TOL = 1e-6
SINC_ABS_TOL = 1e-8
DEFAULT_SERIES_K = 20
DEFAULT_LEMMA_T = (0.25, 0.5, 1.0, 2.0)


class ConfigError(ValueError):
    pass


def _timed(fn: Callable[[], OrderIntegralResult]) -> tuple[OrderIntegralResult, int]:
    start = time.perf_counter()
    result = fn()
    return result, int(round(1000 * (time.perf_counter() - start)))


def cmd_verify_lemma(
    n_max: int, t_list: Sequence[float], tol: float = DEFAULT_TOL, cfg: Optional[QuadratureConfig] = None
) -> VerificationReport:
    """One case per (n, t): lemma_integral against (2t)**(n-1)."""
    cfg = cfg or QuadratureConfig()
    if n_max < 1:
        raise ConfigError("--n-max must be >= 1")
    if not t_list or any(not t > 0 for t in t_list):
        raise ConfigError("every t must be positive")
    report = VerificationReport()
    for n in range(1, n_max + 1):
        for t in t_list:
            expected = (2.0 * t) ** (n - 1)
            result, ms = _timed(lambda: lemma_integral(n, t, cfg))
            if expected == 1.0:
                params = {"n": n, "t": t, "tol_policy": "abs"}
                case_tol = SINC_ABS_TOL
            else:
                params = {"n": n, "t": t, "tol_policy": "rel"}
                case_tol = tol
            params["converged"] = result.converged
            report.add(Case("lemma", params, expected, result.value, case_tol, result.periods_used, ms))
    return report


def cmd_verify_binom(
    n_max: int, tol: float = DEFAULT_TOL, cfg: Optional[QuadratureConfig] = None
) -> VerificationReport:
    """One case per n: binom_integral against 2**n."""
    cfg = cfg or QuadratureConfig()
    if n_max < 1:
        raise ConfigError("--n-max must be >= 1")
    report = VerificationReport()
    for n in range(1, n_max + 1):
        result, ms = _timed(lambda: binom_integral(n, cfg))
        params = {"n": n, "tol_policy": "rel", "converged": result.converged}
        report.add(Case("binom", params, float(2**n), result.value, tol, result.periods_used, ms))
    return report


def cmd_verify_main(
    function_id: str,
    t_list: Optional[Sequence[float]] = None,
    series_k: int = DEFAULT_SERIES_K,
    tol: float = DEFAULT_TOL,
    cfg: Optional[QuadratureConfig] = None,
) -> VerificationReport:
    """Main identity against a direct evaluation of f(t), one case per t."""
    cfg = cfg or QuadratureConfig()
    try:
        fn = catalog.lookup(function_id, series_k)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    if t_list is None:
        t_list = catalog.default_points(fn.radius)
    report = VerificationReport()
    for t in t_list:
        params: dict[str, Any] = {
            "function": fn.name,
            "t": t,
            "series_k": fn.series.order,
            "tol_policy": "rel+remainder",
        }
        try:
            expected = fn.direct(t)
            result, ms = _timed(lambda: main_identity_eval(fn.series, t, cfg))
        except (DomainError, ZeroDivisionError) as exc:
            params["error"] = str(exc)
            expected = math.nan
            report.add(Case("main", params, expected, None, tol))
            continue
        params["series_remainder"] = result.series_remainder
        params["quad_err"] = result.err_estimate - result.series_remainder
        report.add(Case("main", params, expected, result.value, tol, result.periods_used, ms))
    return report


def _raw_rational(n: int) -> Callable[[float], float]:
    return lambda a: sinpi(a) / (a * pochhammer(1.0 - a, n))


def cmd_residues(n: int, cfg: Optional[QuadratureConfig] = None, tol: float = 1e-8) -> VerificationReport:
    """Exact residues, their sum and the quadrature cross-check for one n."""
    cfg = cfg or QuadratureConfig()
    if n < 1:
        raise ConfigError("--n must be >= 1")
    report = VerificationReport()
    n_fact = math.factorial(n)
    for term in residue.residue_terms(n):
        closed = residue.Rational(math.comb(n, term.pole), n_fact)
        params = {
            "n": n,
            "j": term.pole,
            "residue": str(term.value),
            "closed_form": str(closed),
            "exact_match": term.value == closed,
            "tol_policy": "exact",
        }
        report.add(Case("residue", params, float(closed), float(term.value), 0.0))
    total = residue.closed_form_coeff(n)
    closed_total = residue.Rational(2**n, n_fact)
    params = {
        "n": n,
        "sum": str(total),
        "closed_form": str(closed_total),
        "exact_match": total == closed_total,
        "tol_policy": "exact",
    }
    report.add(Case("residue_sum", params, float(closed_total), float(total), 0.0))
    expected = residue.indented_integral_value(n)
    result, ms = _timed(lambda: integrate_order(_raw_rational(n), n + 1, cfg))
    params = {"n": n, "pi_coeff": str(total), "tol_policy": "rel", "converged": result.converged}
    report.add(Case("indented_integral", params, expected, result.value, tol, result.periods_used, ms))
    return report


def _alpha_grid(lo: float, hi: float, step: float) -> list[float]:
    if not step > 0 or hi < lo:
        raise ConfigError("need alpha-max >= alpha-min and step > 0")
    count = int(round((hi - lo) / step)) + 1
    return [round(lo + i * step, 12) + 0.0 for i in range(count)]


def cmd_plotdata(kind: str, params: dict[str, Any], out_path: str, cfg: Optional[QuadratureConfig] = None) -> int:
    """Write CSV samples for external plotting; returns the number of data rows."""
    cfg = cfg or QuadratureConfig()
    n = int(params.get("n", 1))
    t = float(params.get("t", 1.0))
    if n < 1 or not t > 0:
        raise ConfigError("plot-data needs n >= 1 and t > 0")
    g = lambda a: lemma_integrand(n, t, a)  # noqa: E731
    if kind == "integrand":
        grid = _alpha_grid(
            float(params.get("alpha_min", -10.0)),
            float(params.get("alpha_max", 10.0)),
            float(params.get("step", 0.01)),
        )
        header = ["alpha", "integrand"]
        rows = [[a, g(a)] for a in grid]
    elif kind == "partial_sums":
        periods = int(params.get("periods", 100))
        terms = period_sums(g, 0, periods, cfg)
        accel = accelerated_partial_sums(terms, cfg.accel_terms)
        header = ["periods", "raw_partial_sum", "accelerated"]
        rows = []
        running = 0.0
        for p, (term, acc) in enumerate(zip(terms, accel), start=1):
            running += term
            rows.append([p, running, acc])
    elif kind == "convergence":
        periods = int(params.get("periods", 256))
        exact = (2.0 * t) ** (n - 1)
        terms = period_sums(g, 0, periods, cfg)
        header = ["periods", "abs_error", "tail_bound"]
        rows = []
        running = 0.0
        for p, term in enumerate(terms, start=1):
            running += term
            rows.append([p, abs(running - exact), tail_bound(g, n, p)])
    else:
        raise ConfigError(f"unknown plot kind {kind!r}")
    with open(out_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows([[repr(x) if isinstance(x, float) else x for x in row] for row in rows])
    return len(rows)


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _global_flags(parser: argparse.ArgumentParser) -> None:
    sup = argparse.SUPPRESS
    parser.add_argument("--panel-order", type=int, default=sup, help="Gauss-Legendre nodes per unit panel")
    parser.add_argument("--max-periods", type=int, default=sup)
    parser.add_argument("--accel-terms", type=int, default=sup)
    parser.add_argument("--abs-tol", type=float, default=sup)
    parser.add_argument("--json", dest="json_out", default=sup, metavar="OUT", help="write the report here")
    parser.add_argument("--config", default=sup, metavar="FILE", help="TOML config file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fracorder", description=__doc__.split("\n\n")[0])
    _global_flags(parser)
    sub = parser.add_subparsers(dest="command", required=True)
    sup = argparse.SUPPRESS

    p = sub.add_parser("verify-lemma", help="check the order-integral of t^a/G(1+a) D^a t^(n-1)")
    _global_flags(p)
    p.add_argument("--n-max", type=int, default=sup)
    p.add_argument("--t", type=_float_list, default=sup)
    p.add_argument("--tol", type=float, default=sup)

    p = sub.add_parser("verify-binom", help="check the order-integral of C(n, a)")
    _global_flags(p)
    p.add_argument("--n-max", type=int, default=sup)
    p.add_argument("--tol", type=float, default=sup)

    p = sub.add_parser("verify-main", help="check the identity for a power series f")
    _global_flags(p)
    p.add_argument("--function", default=sup)
    p.add_argument("--t", type=_float_list, default=sup)
    p.add_argument("--series-k", type=int, default=sup)
    p.add_argument("--tol", type=float, default=sup)

    p = sub.add_parser("residues", help="exact residues and the indented integral")
    _global_flags(p)
    p.add_argument("--n", type=int, default=sup)

    p = sub.add_parser("plot-data", help="write CSV samples for plotting")
    _global_flags(p)
    p.add_argument("--kind", choices=("integrand", "partial_sums", "convergence"), required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--n", type=int, default=sup)
    p.add_argument("--t", type=float, default=sup)
    p.add_argument("--alpha-min", type=float, default=sup)
    p.add_argument("--alpha-max", type=float, default=sup)
    p.add_argument("--step", type=float, default=sup)
    p.add_argument("--periods", type=int, default=sup)
    return parser


def load_config(path: str) -> dict[str, Any]:
    """Flatten a TOML file; a ``[quadrature]`` table is merged into the top level."""
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"invalid TOML in {path}: {exc}") from exc
    flat = {k: v for k, v in data.items() if not isinstance(v, dict)}
    for table in data.values():
        if isinstance(table, dict):
            flat.update(table)
    return {k.replace("-", "_"): v for k, v in flat.items()}


_BUILTIN = {
    "n_max": 8,
    "t": list(DEFAULT_LEMMA_T),
    "tol": DEFAULT_TOL,
    "series_k": DEFAULT_SERIES_K,
    "function": "exp",
    "n": 1,
}


def resolve_settings(args: argparse.Namespace) -> dict[str, Any]:
    given = vars(args)
    configured = load_config(given["config"]) if "config" in given else {}
    settings: dict[str, Any] = dict(_BUILTIN)
    if given.get("command") == "verify-main":
        # default points depend on the function's radius
        settings["t"] = None
    settings.update(configured)
    settings.update({k: v for k, v in given.items() if k != "config"})
    return settings


def make_config(settings: dict[str, Any]) -> QuadratureConfig:
    names = {f.name for f in fields(QuadratureConfig)}
    kwargs = {k: settings[k] for k in names if k in settings}
    try:
        return QuadratureConfig(**kwargs)
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc


def _t_values(value: Any) -> Optional[list[float]]:
    if value is None:
        return None
    if isinstance(value, (int, float)):
        return [float(value)]
    if isinstance(value, str):
        return _float_list(value)
    return [float(x) for x in value]


def run(settings: dict[str, Any]) -> VerificationReport:
    cfg = make_config(settings)
    command = settings["command"]
    if command == "verify-lemma":
        return cmd_verify_lemma(int(settings["n_max"]), _t_values(settings["t"]), float(settings["tol"]), cfg)
    if command == "verify-binom":
        return cmd_verify_binom(int(settings["n_max"]), float(settings["tol"]), cfg)
    if command == "verify-main":
        return cmd_verify_main(
            str(settings["function"]),
            _t_values(settings["t"]),
            int(settings["series_k"]),
            float(settings["tol"]),
            cfg,
        )
    if command == "residues":
        return cmd_residues(int(settings["n"]), cfg)
    raise ConfigError(f"unknown command {command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = resolve_settings(args)
        if settings["command"] == "plot-data":
            cfg = make_config(settings)
            params = {k: settings[k] for k in ("n", "t", "alpha_min", "alpha_max", "step", "periods") if k in settings}
            if isinstance(params.get("t"), list):
                params["t"] = params["t"][0]
            try:
                rows = cmd_plotdata(settings["kind"], params, settings["out"], cfg)
            except OSError as exc:
                print(f"fracorder: cannot write {settings['out']}: {exc}", file=sys.stderr)
                return EXIT_IO
            print(f"wrote {rows} rows to {settings['out']}", file=sys.stderr)
            return EXIT_OK
        report = run(settings)
    except (ConfigError, argparse.ArgumentTypeError, DomainError) as exc:
        parser.print_usage(sys.stderr)
        print(f"fracorder: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = report.to_json()
    out = settings.get("json_out")
    if out:
        try:
            with open(out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"fracorder: cannot write {out}: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(text)
    summary = report.summary
    print(f"{summary['passed']}/{summary['total']} checks passed", file=sys.stderr)
    return EXIT_OK if report.all_passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
