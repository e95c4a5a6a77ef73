"""Command-line front end: figure reproduction, sweeps and oracle audits.

Usage:
    cavityent fig1|fig2|fig3|fig4|fig5|fig6|sweep|oracle-check
        [--config PATH] [--out PATH] [--format csv|json] [--seed U64]
        [--omega F] [--lambda F] [--epsilon F] [--n-initial U32]
        [--t-max-scaled F] [--points U32] ...

Settings resolve as: built-in defaults < config file (key = value lines)
< command-line flags.  Exit codes: 0 success, 1 usage error, 2 numerical
tolerance breach, 3 Fock cutoff ceiling.

Config keys mirror the long flag names with underscores, e.g.
`lambda = 0.05`, `t_max_scaled = 2.0`, `pairs = 0.001,0.1;0.1,0.1`.
"""

import argparse
import sys

from . import figures, serialize
from .fock import ConvergenceError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_TOLERANCE = 2
EXIT_CUTOFF = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def parse_config_file(path):
    """Flat key = value settings; '#' starts a comment, blank lines ignored."""
    settings = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, value = line.split("=", 1)
            settings[key.strip()] = value.strip()
    return settings


def parse_pairs(text):
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        lam, eps = chunk.split(",")
        pairs.append((float(lam), float(eps)))
    return tuple(pairs)


def parse_floats(text):
    return tuple(float(v) for v in text.replace(";", ",").split(",") if v.strip())


def parse_ints(text):
    return tuple(int(v) for v in text.replace(";", ",").split(",") if v.strip())


_CONVERT = {
    "omega": float, "lambda": float, "epsilon": float, "n_initial": int,
    "t_max_scaled": float, "points": int, "seed": int, "trials": int,
    "segments": int, "mean_epsilon": float, "eps_max": float, "eps_points": int,
    "window_scaled": float, "pairs": parse_pairs, "lambdas": parse_floats,
    "n_values": parse_ints, "spread": str, "format": str, "out": str,
    "draws": int, "convergence_tol": float,
}


def _resolve(args):
    """Merge defaults, config file and flags into one settings dict."""
    settings = {}
    if args.config:
        for key, raw in parse_config_file(args.config).items():
            if key not in _CONVERT:
                raise ValueError(f"unknown config key {key!r}")
            settings[key] = _CONVERT[key](raw)
    for key in _CONVERT:
        flag = getattr(args, key.replace("-", "_"), None) if key != "lambda" else args.lam
        if flag is not None:
            settings[key] = flag
    return settings


def _add_common(p):
    p.add_argument("--config", help="key = value settings file")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--format", choices=("csv", "json"), help="output format (default csv)")
    p.add_argument("--seed", type=int, help="master seed for randomized subcommands")
    p.add_argument("--omega", type=float)
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--n-initial", dest="n_initial", type=int)
    p.add_argument("--t-max-scaled", dest="t_max_scaled", type=float)
    p.add_argument("--points", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--segments", type=int)
    p.add_argument("--mean-epsilon", dest="mean_epsilon", type=float)
    p.add_argument("--eps-max", dest="eps_max", type=float)
    p.add_argument("--eps-points", dest="eps_points", type=int)
    p.add_argument("--window-scaled", dest="window_scaled", type=float)
    p.add_argument("--pairs", type=parse_pairs, help="semicolon-separated lambda,epsilon pairs")
    p.add_argument("--lambdas", type=parse_floats)
    p.add_argument("--n-values", dest="n_values", type=parse_ints)
    p.add_argument("--spread", choices=("variance", "std"))
    p.add_argument("--draws", type=int)
    p.add_argument("--convergence-tol", dest="convergence_tol", type=float)


def _pick(settings, mapping):
    return {dst: settings[src] for src, dst in mapping.items() if src in settings}


def _run_figure(name, settings):
    common = {"omega": "omega", "n_initial": "n_initial"}
    if name == "fig1":
        kw = _pick(settings, {"omega": "omega", "lambda": "lam",
                              "t_max_scaled": "t_max_scaled", "points": "points",
                              "n_values": "n_values"})
        return figures.fig1(**kw)
    if name == "fig2":
        kw = _pick(settings, {**common, "lambda": "lam",
                              "t_max_scaled": "t_max_scaled", "points": "points"})
        return figures.fig2(**kw)
    if name in ("fig3", "fig4"):
        kw = _pick(settings, {**common, "pairs": "pairs",
                              "t_max_scaled": "t_max_scaled", "points": "points"})
        return (figures.fig3 if name == "fig3" else figures.fig4)(**kw)
    if name == "fig5":
        kw = _pick(settings, {**common, "lambdas": "lambdas", "eps_max": "eps_max",
                              "eps_points": "eps_points", "points": "points",
                              "window_scaled": "window_scaled"})
        return figures.fig5(**kw)
    if name == "sweep":
        if "lambda" not in settings:
            raise ValueError("sweep requires --lambda")
        kw = _pick(settings, {**common, "eps_max": "eps_max", "eps_points": "eps_points",
                              "points": "points", "window_scaled": "window_scaled"})
        return figures.sweep(settings["lambda"], **kw)
    if name == "fig6":
        kw = _pick(settings, {**common, "lambdas": "lambdas",
                              "mean_epsilon": "mean_epsilon", "trials": "n_trials",
                              "segments": "n_segments", "t_max_scaled": "total_scaled_time",
                              "seed": "master_seed", "spread": "spread"})
        return figures.fig6(**kw)
    raise ValueError(f"unknown subcommand {name!r}")


def main(argv=None):
    parser = _Parser(prog="cavityent",
                     description="coupled-cavity entanglement dynamics toolkit")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in ("fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "sweep", "oracle-check"):
        _add_common(sub.add_parser(name))
    args = parser.parse_args(argv)

    try:
        settings = _resolve(args)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE

    fmt = settings.get("format", "csv")
    out = settings.get("out")
    try:
        if args.subcommand == "oracle-check":
            kw = _pick(settings, {"omega": "omega", "n_initial": "n_initial",
                                  "seed": "seed", "draws": "n_random_draws",
                                  "convergence_tol": "convergence_tol"})
            report, ok = figures.oracle_check(**kw)
            serialize.write_report(report, out)
            return EXIT_OK if ok else EXIT_TOLERANCE
        columns, meta = _run_figure(args.subcommand, settings)
        serialize.write_table(columns, meta, out, fmt)
        return EXIT_OK
    except ConvergenceError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CUTOFF
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
