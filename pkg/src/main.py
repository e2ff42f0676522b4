#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
ZicGdof command line
Regions, sum-GDoF series, comparisons, corner points, verification sweeps,
the rank oracle, Monte Carlo validation and plots.
"""

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import List, Optional

# Make "src" importable when run as a script
parent_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if parent_dir not in sys.path:
    sys.path.insert(0, parent_dir)

from src import __version__
from src.core.achievability import corner_points
from src.core.comparison import (
    CSIT_KINDS,
    compare_regions,
    divergence_intervals,
    is_v_shaped,
    region_for,
    sum_gdof_series,
)
from src.core.config_manager import ConfigManager
from src.core.errors import (
    InvalidConfigError,
    NonCanonicalConfigError,
    UsageError,
    VerificationFailure,
    ZicGdofError,
)
from src.core.logging_config import configure_logging
from src.core.types import AntennaConfig, FTermSpec
from src.services.monte_carlo_service import MIN_SAMPLES, MonteCarloService, RateTerm
from src.services.verification_service import VerificationService
from src.utils.serialization import (
    corners_to_dict,
    fraction_default,
    parse_alpha_grid,
    parse_rational,
    region_to_csv,
    region_to_json,
    series_to_csv,
    series_to_dict,
    slope_points_to_csv,
)
from src.utils.svg_plot import region_plot, series_plot

logger = logging.getLogger("ZicGdof.Main")

COMMANDS = ("region", "sum", "compare", "corners", "verify", "oracle", "validate", "plot")
FORMATS = ("json", "csv", "svg")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2


@dataclass
class RunSpec:
    """One parsed command line"""

    command: str
    config: Optional[AntennaConfig] = None
    alphas: List = field(default_factory=list)
    csit: List[str] = field(default_factory=lambda: ["delayed"])
    output: Optional[str] = None
    format: str = "json"
    seed: Optional[int] = None
    options: dict = field(default_factory=dict)

    @property
    def alpha(self):
        if len(self.alphas) != 1:
            raise UsageError(f"--alpha: command '{self.command}' needs exactly one alpha")
        return self.alphas[0]


class CliParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting with status 2"""

    def error(self, message):
        raise UsageError(message)


def _config_arg(text):
    try:
        return AntennaConfig.parse(text)
    except InvalidConfigError as e:
        raise argparse.ArgumentTypeError(str(e))


def _rational_arg(text):
    try:
        value = parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {text}")
    return value


def _grid_arg(text):
    try:
        return parse_alpha_grid(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _csit_arg(text):
    kinds = [k.strip() for k in text.split(",") if k.strip()]
    unknown = [k for k in kinds if k not in CSIT_KINDS]
    if not kinds or unknown:
        raise argparse.ArgumentTypeError(f"expected a comma separated subset of {', '.join(CSIT_KINDS)}, got {text!r}")
    return kinds


def _ladder_arg(text):
    try:
        ladder = [float(parse_rational(x)) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))
    if len(ladder) < 4 or any(b <= a for a, b in zip(ladder, ladder[1:])):
        raise argparse.ArgumentTypeError(f"needs at least 4 strictly increasing values, got {text!r}")
    return ladder


def _samples_arg(text):
    try:
        samples = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if samples < MIN_SAMPLES:
        raise argparse.ArgumentTypeError(f"must be at least {MIN_SAMPLES}, got {samples}")
    return samples


def _fterm_arg(text):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 5:
        raise argparse.ArgumentTypeError("expected u,a1,u1,a2,u2")
    try:
        return FTermSpec(int(parts[0]), parse_rational(parts[1]), int(parts[2]), parse_rational(parts[3]), int(parts[4]))
    except (ValueError, InvalidConfigError) as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser():
    parser = CliParser(prog="zicgdof", description="GDoF toolkit for the MIMO Z interference channel with delayed CSIT")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--log-file", default=None, help="rotating log file")
    parser.add_argument("--settings", default=None, help="configuration file (default ~/.zicgdof/config.json)")
    sub = parser.add_subparsers(dest="command", parser_class=CliParser)

    def common(p, grid=False, single=False):
        p.add_argument("--config", type=_config_arg, help="antenna counts M1,M2,N1,N2")
        if single:
            p.add_argument("--alpha", type=_rational_arg, help="interference exponent, num/den or decimal")
        if grid:
            p.add_argument("--alpha-grid", type=_grid_arg, help="start:stop:step or a comma separated list")
        p.add_argument("--output", "-o", default=None, help="output file (stdout if omitted)")

    p = sub.add_parser("region", help="GDoF region for one alpha")
    common(p, single=True)
    p.add_argument("--csit", type=_csit_arg, default=["delayed"])
    p.add_argument("--format", choices=FORMATS, default="json")

    p = sub.add_parser("sum", help="sum-GDoF series over alpha")
    common(p, grid=True)
    p.add_argument("--csit", type=_csit_arg, default=["delayed", "perfect"])
    p.add_argument("--format", choices=FORMATS, default="json")

    p = sub.add_parser("compare", help="delayed, perfect and DoF regions with verdicts")
    common(p, single=True)
    p.add_argument("--format", choices=("json", "svg"), default="json")

    p = sub.add_parser("corners", help="corner points and power allocations")
    common(p, single=True)

    p = sub.add_parser("verify", help="inner bound = outer bound sweep")
    p.add_argument("--max-antennas", type=int, default=None)
    p.add_argument("--alpha-grid", type=_grid_arg, default=None)
    p.add_argument("--jsonl", default=None, help="write one JSON record per case")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--include-non-canonical", action="store_true")
    p.add_argument("--output", "-o", default=None)

    p = sub.add_parser("oracle", help="brute-force oracles")
    p.add_argument("kind", choices=("rank",))
    p.add_argument("--max-antennas", type=int, default=None)
    p.add_argument("--max-m2", type=int, default=None)
    p.add_argument("--alpha-grid", type=_grid_arg, default=None)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--output", "-o", default=None)

    p = sub.add_parser("validate", help="Monte Carlo pre-log slope of a rate term")
    common(p, single=True)
    p.add_argument("--a2", type=_rational_arg, default=0)
    p.add_argument("--term", default=None, help=", ".join(t.value for t in RateTerm))
    p.add_argument("--fterm", type=_fterm_arg, default=None, help="u,a1,u1,a2,u2 instead of a named term")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=_samples_arg, default=None, help=f"channel draws per ladder point, at least {MIN_SAMPLES}")
    p.add_argument("--ladder", type=_ladder_arg, default=None, help="comma separated log2(rho) values")
    p.add_argument("--fit-points", type=int, default=None)
    p.add_argument("--method", choices=("qr", "cholesky"), default=None)
    p.add_argument("--crn", action="store_true", help="reuse the same channel draws at every ladder point")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("plot", help="SVG of regions over an alpha grid or of sum-GDoF series")
    common(p, grid=True)
    p.add_argument("--kind", choices=("regions", "sum"), default="regions")
    p.add_argument("--csit", type=_csit_arg, default=["delayed"])
    p.add_argument("--title", default=None)

    return parser


def build_run_spec(args):
    """Turn parsed arguments into a RunSpec"""
    if not args.command:
        raise UsageError("a command is required: " + ", ".join(COMMANDS))
    alphas = []
    if getattr(args, "alpha", None) is not None:
        alphas = [args.alpha]
    elif getattr(args, "alpha_grid", None) is not None:
        alphas = list(args.alpha_grid)
    options = {k: v for k, v in vars(args).items()
               if k not in ("command", "config", "alpha", "alpha_grid", "csit", "output", "format", "seed")}
    return RunSpec(
        command=args.command,
        config=getattr(args, "config", None),
        alphas=alphas,
        csit=getattr(args, "csit", None) or ["delayed"],
        output=getattr(args, "output", None),
        format=getattr(args, "format", None) or ("svg" if args.command == "plot" else "json"),
        seed=getattr(args, "seed", None),
        options=options,
    )


def _require_config(spec):
    if spec.config is None:
        raise UsageError(f"--config: command '{spec.command}' needs M1,M2,N1,N2")
    return spec.config


def _write(text, spec, config_manager):
    path = config_manager.resolve_output_path(spec.output)
    if path:
        directory = os.path.dirname(os.path.abspath(path))
        os.makedirs(directory, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        logger.info(f"Wrote {spec.command} output to {path}")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dumps(data):
    return json.dumps(data, indent=2, default=fraction_default)


def _grid(spec, config_manager, section):
    if spec.alphas:
        return spec.alphas
    return parse_alpha_grid(config_manager.get_value(section, "alpha_grid", "0:3:1/10"))


def _plot_size(config_manager):
    return {
        "width": config_manager.get_value("plot", "width", 480),
        "height": config_manager.get_value("plot", "height", 480),
        "margin": config_manager.get_value("plot", "margin", 56),
    }


def _run_region(spec, config_manager):
    cfg = _require_config(spec)
    if len(spec.csit) != 1:
        raise UsageError("--csit: region takes a single CSIT kind")
    region = region_for(cfg, spec.alpha, spec.csit[0])
    if spec.format == "json":
        _write(region_to_json(region, cfg, spec.alpha), spec, config_manager)
    elif spec.format == "csv":
        _write(region_to_csv(region), spec, config_manager)
    else:
        plot = region_plot([(f"{spec.csit[0]} α={spec.alpha}", region)], title=f"{cfg}", **_plot_size(config_manager))
        _write(plot.render(), spec, config_manager)
    return EXIT_OK


def _run_sum(spec, config_manager):
    cfg = _require_config(spec)
    rows = sum_gdof_series(cfg, _grid(spec, config_manager, "sweep"), spec.csit)
    if spec.format == "json":
        data = series_to_dict(cfg, rows)
        data["v_shaped"] = {kind: is_v_shaped(rows, kind) for kind in spec.csit}
        if len(spec.csit) >= 2:
            data["divergence"] = [[str(a), str(b)] for a, b in divergence_intervals(rows, spec.csit[0], spec.csit[1])]
        _write(_dumps(data), spec, config_manager)
    elif spec.format == "csv":
        _write(series_to_csv(rows), spec, config_manager)
    else:
        plot = series_plot(rows, spec.csit, title=f"{cfg}", width=_plot_size(config_manager)["width"])
        _write(plot.render(), spec, config_manager)
    return EXIT_OK


def _run_compare(spec, config_manager):
    cfg = _require_config(spec)
    verdict = compare_regions(cfg, spec.alpha)
    data = {"config": list(cfg.as_tuple()), "alpha": str(verdict.alpha), **verdict.to_dict()}
    if spec.format == "svg":
        layers = [(name, verdict.regions[name]) for name in ("delayed", "perfect", "dof")]
        plot = region_plot(layers, title=f"{cfg} α={verdict.alpha}", **_plot_size(config_manager))
        _write(plot.render(), spec, config_manager)
        if spec.output:
            sys.stdout.write(_dumps(data) + "\n")
    else:
        _write(_dumps(data), spec, config_manager)
    return EXIT_OK


def _run_corners(spec, config_manager):
    cfg = _require_config(spec)
    _write(_dumps(corners_to_dict(cfg, spec.alpha, corner_points(cfg, spec.alpha))), spec, config_manager)
    return EXIT_OK


def _run_verify(spec, config_manager):
    service = VerificationService(config_manager, workers=spec.options.get("workers"))
    max_antennas = spec.options.get("max_antennas") or config_manager.get_value("sweep", "max_antennas", 6)
    summary = service.verify(
        max_antennas,
        _grid(spec, config_manager, "sweep"),
        jsonl_path=config_manager.resolve_output_path(spec.options.get("jsonl")),
        include_non_canonical=spec.options.get("include_non_canonical", False),
    )
    _write(_dumps(summary), spec, config_manager)
    return EXIT_VERIFICATION if summary["failures"] else EXIT_OK


def _run_oracle(spec, config_manager):
    service = VerificationService(config_manager, workers=spec.options.get("workers"))
    max_antennas = spec.options.get("max_antennas") or config_manager.get_value("oracle", "max_antennas", 6)
    max_m2 = spec.options.get("max_m2") or config_manager.get_value("oracle", "max_m2", max_antennas)
    summary = service.rank_oracle(max_antennas, _grid(spec, config_manager, "oracle"), max_m2=max_m2)
    _write(_dumps(summary), spec, config_manager)
    return EXIT_VERIFICATION if summary["failures"] else EXIT_OK


def _run_validate(spec, config_manager):
    opts = spec.options
    service = MonteCarloService(
        config_manager,
        seed=spec.seed,
        ladder=opts.get("ladder"),
        samples_per_point=opts.get("samples"),
        fit_points=opts.get("fit_points"),
        method=opts.get("method"),
        workers=opts.get("workers"),
    )
    if opts.get("fterm") is not None:
        estimate = service.estimate_fterm_slope(opts["fterm"], common_random_numbers=opts.get("crn", False))
    else:
        cfg = _require_config(spec)
        if not opts.get("term"):
            raise UsageError("--term: validate needs a rate term or --fterm")
        try:
            term = RateTerm.parse(opts["term"])
        except ValueError as e:
            raise UsageError(f"--term: {str(e)}")
        estimate = service.estimate_slope(cfg, term, spec.alpha, opts.get("a2") or 0,
                                           common_random_numbers=opts.get("crn", False))
    if spec.format == "csv":
        _write(slope_points_to_csv(estimate), spec, config_manager)
    else:
        _write(_dumps(estimate.to_dict()), spec, config_manager)
    if not estimate.within_tolerance():
        logger.error(f"Slope {estimate.slope:.4f} misses prediction {float(estimate.prediction):.4f} "
                     f"by more than {estimate.tolerance:.4f}")
        return EXIT_VERIFICATION
    return EXIT_OK


def _run_plot(spec, config_manager):
    cfg = _require_config(spec)
    alphas = _grid(spec, config_manager, "sweep")
    size = _plot_size(config_manager)
    if spec.options.get("kind") == "sum":
        rows = sum_gdof_series(cfg, alphas, spec.csit)
        plot = series_plot(rows, spec.csit, title=spec.options.get("title") or f"{cfg}", width=size["width"])
    else:
        layers = []
        for alpha in alphas:
            for kind in spec.csit:
                layers.append((f"{kind} α={alpha}", region_for(cfg, alpha, kind)))
        plot = region_plot(layers, title=spec.options.get("title") or f"{cfg}", **size)
    _write(plot.render(), spec, config_manager)
    return EXIT_OK


HANDLERS = {
    "region": _run_region,
    "sum": _run_sum,
    "compare": _run_compare,
    "corners": _run_corners,
    "verify": _run_verify,
    "oracle": _run_oracle,
    "validate": _run_validate,
    "plot": _run_plot,
}


def run(spec, config_manager=None):
    """Execute a RunSpec

    Returns:
        int: 0 on success, 2 on verification failure, 1 on usage error
    """
    config_manager = config_manager or ConfigManager()
    try:
        return HANDLERS[spec.command](spec, config_manager)
    except VerificationFailure as e:
        logger.error(f"Verification failed: {str(e)}")
        sys.stdout.write(_dumps(e.record) + "\n")
        return EXIT_VERIFICATION
    except (UsageError, InvalidConfigError, NonCanonicalConfigError, ValueError) as e:
        logger.error(str(e))
        sys.stderr.write(f"zicgdof {spec.command}: {str(e)}\n")
        return EXIT_USAGE
    except ZicGdofError as e:
        logger.error(f"{spec.command} failed: {str(e)}")
        sys.stderr.write(f"zicgdof {spec.command}: {str(e)}\n")
        return EXIT_USAGE


def main(argv=None):
    """Entry point of the zicgdof command"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        spec = build_run_spec(args)
    except UsageError as e:
        sys.stderr.write(f"zicgdof: {str(e)}\n")
        return EXIT_USAGE

    config_manager = ConfigManager(args.settings)
    configure_logging(
        args.log_level or config_manager.get_value("general", "log_level", "INFO"),
        args.log_file or config_manager.get_value("general", "log_file", "") or None,
    )

    def exception_handler(exc_type, exc_value, exc_traceback):
        logging.getLogger().critical("Unhandled exception", exc_info=(exc_type, exc_value, exc_traceback))
        sys.__excepthook__(exc_type, exc_value, exc_traceback)

    sys.excepthook = exception_handler
    return run(spec, config_manager)


if __name__ == "__main__":
    sys.exit(main())
