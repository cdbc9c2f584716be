"""Command-line interface: evaluate, verify and emit deterministic tables.

Exit codes: 0 success, 1 a verification check failed (the table is still
emitted), 2 invalid arguments, 3 numerical non-convergence (the message on
stderr names the abscissa; nothing is written to the output).
"""

import argparse
import csv
import hashlib
import io
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__
from . import levy_khintchine as lk
from . import stable
from . import tails
from . import verify as verify_mod
from .errors import ConvergenceError, DomainError
from .quadrature import DEFAULT_CONFIG, QuadratureConfig

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NONCONVERGENCE = 0, 1, 2, 3

COLUMNS = {
    "cf": ("t", "re", "im", "modulus"),
    "pdf": ("x", "value"),
    "cdf": ("x", "value"),
    "levy-density": ("x", "value"),
    "verify": ("suite", "check", "residual", "tolerance", "status"),
    "tail-balance": ("x", "k_over_h", "c_prime"),
    "lk-check": ("t", "num_re", "num_im", "closed_re", "closed_im", "residual", "status"),
}

_COLUMN_HELP = "\n".join(f"  {name:13s} {', '.join(cols)}" for name, cols in COLUMNS.items())

LK_TOLERANCE = 1e-6


class UsageError(Exception):
    """Invalid command-line input (exit code 2)."""


class NonConvergence(Exception):
    """Numerical failure at a specific abscissa (exit code 3)."""


def build_id():
    """Version plus a digest of the package sources, stable for a given build."""
    digest = hashlib.sha256()
    for path in sorted(Path(__file__).parent.glob("*.py")):
        digest.update(path.name.encode())
        digest.update(path.read_bytes())
    return f"{__version__}+{digest.hexdigest()[:12]}"


# ---------------------------------------------------------------------------
# argument parsing


def _grid(text):
    try:
        start, stop, count = text.split(",")
        start, stop, count = float(start), float(stop), int(count)
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must be start,stop,count; got {text!r}") from None
    if not (math.isfinite(start) and math.isfinite(stop)):
        raise argparse.ArgumentTypeError("grid bounds must be finite")
    if count < 1:
        raise argparse.ArgumentTypeError("grid count must be >= 1")
    if not start < stop:
        raise argparse.ArgumentTypeError("grid needs start < stop")
    return start, stop, count


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not value > 0 or not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return value


def _float_list(text):
    try:
        values = [float(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None
    return values


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _add_output(p):
    p.add_argument("--format", choices=("csv", "json"), default="csv", help="output format (default csv)")
    p.add_argument("--output_path", "--output-path", dest="output_path", default=None,
                   help="write to this file instead of stdout")
    q = p.add_argument_group("quadrature overrides")
    q.add_argument("--abs-tol", type=_positive_float, default=DEFAULT_CONFIG.abs_tol)
    q.add_argument("--rel-tol", type=_positive_float, default=DEFAULT_CONFIG.rel_tol)
    q.add_argument("--inner-tol", type=_positive_float, default=DEFAULT_CONFIG.inner_tol)
    q.add_argument("--max-segments", type=int, default=DEFAULT_CONFIG.max_segments)
    q.add_argument("--accel-depth", type=int, default=DEFAULT_CONFIG.accel_depth)


def _add_params(p, alpha_required=True):
    p.add_argument("--alpha", type=float, required=alpha_required, help="stability index in (0, 2]")
    p.add_argument("--c", type=float, default=1.0, help="scale (default 1)")
    p.add_argument("--beta", type=float, default=0.0, help="skewness in [-1, 1] (default 0)")
    p.add_argument("--mu", type=float, default=0.0, help="location (default 0)")


def build_parser():
    parser = _Parser(
        prog="stablelaw",
        description="Stable laws: evaluation, identity verification and tail balance.",
        epilog="CSV columns (a header row is always written):\n" + _COLUMN_HELP
        + "\n\nJSON output is {\"metadata\": {...}, \"rows\": [{column: value}, ...]}."
        + "\nExit codes: 0 ok, 1 failed check, 2 usage error, 3 non-convergence.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ev = sub.add_parser("eval", help="evaluate cf, pdf, cdf or the Levy density on a grid",
                        epilog="Columns:\n" + _COLUMN_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    ev.add_argument("quantity", choices=("cf", "pdf", "cdf", "levy-density"))
    _add_params(ev)
    ev.add_argument("--grid", type=_grid, required=True, help="start,stop,count (t for cf, x otherwise)")
    _add_output(ev)

    ve = sub.add_parser("verify", help="run identity suites and report residuals")
    ve.add_argument("--suite", choices=tuple(verify_mod.SUITES) + ("all",), default="all")
    _add_output(ve)

    tb = sub.add_parser("tail-balance", help="tail balance of a two-sided Pareto law")
    tb.add_argument("--p", type=float, required=True, help="right-tail weight")
    tb.add_argument("--q", type=float, required=True, help="left-tail weight")
    tb.add_argument("--k", type=float, required=True, help="tail index in (0, 2), k != 1")
    tb.add_argument("--probe", type=_float_list, default=[1e2, 1e3, 1e4],
                    help="increasing probe abscissae (default 100,1000,10000)")
    tb.add_argument("--center", action="store_true", help="subtract the mean when 1 < k < 2")
    _add_output(tb)

    lc = sub.add_parser("lk-check", help="Levy-Khintchine integral against the closed-form exponent")
    _add_params(lc)
    lc.add_argument("--grid", type=_grid, required=True, help="start,stop,count for t")
    _add_output(lc)
    return parser


def _prejoin(argv):
    """Glue ``--grid``/``--probe`` to their value so negative starts parse."""
    out = list(argv)
    for i in range(len(out) - 1):
        if out[i] in ("--grid", "--probe") and out[i + 1] is not None:
            out[i] = f"{out[i]}={out[i + 1]}"
            out[i + 1] = None
    return [a for a in out if a is not None]


def _config(args):
    try:
        return QuadratureConfig(
            abs_tol=args.abs_tol, rel_tol=args.rel_tol, max_segments=args.max_segments,
            accel_depth=args.accel_depth, inner_tol=args.inner_tol,
        )
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _params(args):
    try:
        return stable.StableParams(args.alpha, args.c, args.beta, args.mu)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _abscissae(grid):
    start, stop, count = grid
    if count == 1:
        return [start]
    return [float(v) for v in np.linspace(start, stop, count)]


def _each(points, name, fn):
    rows = []
    for v in points:
        try:
            rows.append(fn(v))
        except ConvergenceError as exc:
            raise NonConvergence(f"no convergence at {name}={v!r}: {exc}") from None
    return rows


# ---------------------------------------------------------------------------
# commands


def _eval(args, config):
    params = _params(args)
    pts = _abscissae(args.grid)
    q = args.quantity
    if q == "cf":
        def row(t):
            z = complex(stable.cf(params, t))
            return [t, z.real, z.imag, abs(z)]
        return _each(pts, "t", row), True
    if q == "levy-density":
        if params.alpha == 2.0:
            raise UsageError("the Levy density is not defined for alpha = 2 (Gaussian)")
        return _each(pts, "x", lambda x: [x, float(stable.levy_density(params.alpha, params.c, params.beta, x))]), True
    fn = stable.pdf if q == "pdf" else stable.cdf
    return _each(pts, "x", lambda x: [x, float(fn(params, x, config))]), True


def _verify(args, config):
    try:
        checks = verify_mod.run_suite(args.suite, config)
    except ConvergenceError as exc:
        raise NonConvergence(f"no convergence in suite {args.suite!r}: {exc}") from None
    rows = [[c.suite, c.name, float(c.residual), float(c.tolerance), "PASS" if c.passed else "FAIL"]
            for c in checks]
    return rows, all(c.passed for c in checks)


def _tail_balance(args, config):
    try:
        dist = tails.two_sided_pareto(args.p, args.q, args.k)
        est = tails.tail_balance(dist, args.k, args.probe, config, center=args.center)
    except (DomainError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    except ConvergenceError as exc:
        raise NonConvergence(f"no convergence on probe {args.probe!r}: {exc}") from None
    cps = dict(est.diagnostics["c_prime_series"])
    rows = [[x, r, cps[x]] for x, r in est.ratio_series]
    rows.append(["limit", est.diagnostics["raw_beta"], est.diagnostics["c_prime_estimate"]])
    return rows, bool(est.converged and est.diagnostics["c_prime_consistent"])


def _lk_check(args, config):
    params = _params(args)
    if params.alpha == 2.0:
        raise UsageError("the Levy-Khintchine check needs alpha < 2")

    def row(t):
        num = lk.lk_exponent_numeric(params.alpha, params.c, params.beta, t, config)
        ref = stable.log_cf_centered(params.alpha, params.c, params.beta, t)
        res = abs(num - ref) / (1.0 + abs(ref))
        return [t, num.real, num.imag, ref.real, ref.imag, res, "PASS" if res <= LK_TOLERANCE else "FAIL"]

    rows = _each(_abscissae(args.grid), "t", row)
    return rows, all(r[-1] == "PASS" for r in rows)


# ---------------------------------------------------------------------------
# output


def _cell(v):
    if isinstance(v, float):
        return repr(v)
    return str(v)


def render(columns, rows, fmt, metadata):
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for r in rows:
            writer.writerow([_cell(v) for v in r])
        return buf.getvalue()
    payload = {"metadata": metadata, "rows": [dict(zip(columns, r)) for r in rows]}
    return json.dumps(payload, indent=2) + "\n"


def _metadata(args, config):
    params = {}
    for key in ("quantity", "alpha", "c", "beta", "mu", "suite", "p", "q", "k", "probe", "center"):
        if hasattr(args, key):
            params[key] = getattr(args, key)
    if hasattr(args, "grid"):
        params["grid"] = list(args.grid)
    return {
        "command": args.command,
        "params": params,
        "tolerances": {
            "abs_tol": config.abs_tol, "rel_tol": config.rel_tol, "inner_tol": config.inner_tol,
            "max_segments": config.max_segments, "accel_depth": config.accel_depth,
        },
        "build": build_id(),
    }


_COMMANDS = {"eval": _eval, "verify": _verify, "tail-balance": _tail_balance, "lk-check": _lk_check}


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_prejoin(argv))
        config = _config(args)
        rows, ok = _COMMANDS[args.command](args, config)
    except UsageError as exc:
        msg = str(exc)
        print(msg if msg.startswith("stablelaw") else f"stablelaw: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except NonConvergence as exc:
        print(f"stablelaw: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except DomainError as exc:
        print(f"stablelaw: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    key = args.quantity if args.command == "eval" else args.command
    text = render(COLUMNS[key], rows, args.format, _metadata(args, config))
    if args.output_path:
        Path(args.output_path).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
