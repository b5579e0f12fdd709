"""
Command-line front end for vpflab
"""

import argparse
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import pydantic

from vpflab.core.errors import (
    ConfigurationError,
    OutputError,
    ValidationError,
    VpfLabError,
)
from vpflab.core.sweep_runner import SweepRunner, run_sweep
from vpflab.models.cli_config import CliConfig, OutputFormat, Subcommand
from vpflab.models.pipeline_options import SkipReconstruction
from vpflab.models.stat_map import StatMap
from vpflab.services.selftest_service import SelfTestService
from vpflab.utils.logger import Logger
from vpflab.utils.stat_map_writer import format_csv, format_json, write_output

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_OUTPUT = 3
EXIT_PIPELINE = 4

# Options that are flags rather than CliConfig fields
_NON_FIELD_OPTIONS = {"config"}


def build_parser() -> argparse.ArgumentParser:
    """Argument parser; options default to SUPPRESS so only given flags override the file"""
    parser = argparse.ArgumentParser(
        prog="vpflab",
        description="Synthetic double-compression experiments on the MPEG-2 deadzone quantizer",
        argument_default=argparse.SUPPRESS,
    )
    parser.add_argument("subcommand", choices=[s.value for s in Subcommand])
    parser.add_argument("--config", help="flat key = value file, keys named like the flags")

    grid = parser.add_argument_group("grid")
    grid.add_argument("--q1", help="q1 values, a..b or a comma list")
    grid.add_argument("--q2", help="q2 values, a..b or a comma list")
    grid.add_argument("--alpha-i", dest="alpha_i", help="intra deadzone factors, e.g. 1,5/4,2")
    grid.add_argument("--alpha-p", dest="alpha_p", help="inter deadzone factor")
    grid.add_argument("--count", help="samples per cell")
    grid.add_argument("--seed", help="base seed")
    grid.add_argument("--kind", help="signmap centroid: intra or inter")
    grid.add_argument("--which", help="corrmap pair: I1_vs_P2 or P1_vs_P2")

    model = parser.add_argument_group("model")
    model.add_argument("--sigma-x2", dest="sigma_x2")
    model.add_argument("--rho")
    model.add_argument("--sigma-r2", dest="sigma_r2")
    model.add_argument("--rho-p", dest="rho_p")
    model.add_argument("--sigma-nu2", dest="sigma_nu2")
    model.add_argument("--coupled-modes", dest="coupled_modes", action="store_true")
    model.add_argument(
        "--second-pass-pred-source",
        dest="second_pass_pred_source",
        choices=["first_recon", "second_recon"],
    )
    model.add_argument(
        "--skip-reconstruction",
        dest="skip_reconstruction",
        choices=[s.value for s in SkipReconstruction],
    )

    run = parser.add_argument_group("run")
    run.add_argument("-o", "--output", help="output path, - for stdout")
    run.add_argument("--format", choices=[f.value for f in OutputFormat])
    run.add_argument("--threads", help="concurrent cells (default VPFLAB_THREADS or CPU count)")
    run.add_argument("--log-level", dest="log_level")
    return parser


def read_config_file(path: str) -> Dict[str, str]:
    """
    Read a flat ``key = value`` file

    Blank lines and lines starting with ``#`` are ignored. Dashes in keys are read as underscores.

    Raises:
        ConfigurationError: If the file is unreadable, a line is malformed or a key is unknown
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigurationError(f"Cannot read config file: {e}", config_key="config") from e

    allowed = set(CliConfig.model_fields) - {"subcommand"}
    values: Dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigurationError(
                f"Malformed line {number} in {path}: {raw!r}", details={"line": number}
            )
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in allowed:
            raise ConfigurationError(f"Unknown config key: {key}", config_key=key)
        values[key] = value
    return values


def parse_config(argv: Sequence[str], config_file: Optional[str] = None) -> CliConfig:
    """
    Parse flags and an optional config file into a CliConfig

    Flags override config-file keys.

    Raises:
        ValidationError: On malformed or out-of-range values
        ConfigurationError: On config-file problems
    """
    namespace = vars(build_parser().parse_args(list(argv)))
    config_file = namespace.get("config", config_file)

    merged: Dict[str, Any] = read_config_file(config_file) if config_file else {}
    merged.update({k: v for k, v in namespace.items() if k not in _NON_FIELD_OPTIONS})

    try:
        return CliConfig(**merged)
    except pydantic.ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first.get("loc", ())) or None
        raise ValidationError(
            f"Invalid value for {field}: {first.get('msg')}", field=field, value=first.get("input")
        ) from e


def execute(cfg: CliConfig, logger: Optional[Logger] = None) -> int:
    """
    Run a parsed configuration and write its output

    Returns:
        Exit code

    Raises:
        OutputError: If the output cannot be written
        VpfLabError: On pipeline failures
    """
    logger = logger or Logger("vpflab", cfg.log_level)

    if cfg.subcommand == Subcommand.SELFTEST:
        report = SelfTestService(seed=cfg.seed, logger=logger).run()
        lines = [f"checks: {report.checks_run}", f"errors: {report.get_error_count()}"]
        lines += [f"warning: {w}" for w in report.warnings]
        lines += [f"error: {e}" for e in report.errors]
        lines.append("PASS" if report.is_valid else "FAIL")
        write_output("\n".join(lines) + "\n", cfg.output)
        return EXIT_OK if report.is_valid else EXIT_PIPELINE

    runner = SweepRunner(cfg.to_sweep_config(), logger=logger)
    maps = _dispatch(runner, cfg)

    if cfg.format == OutputFormat.JSON:
        text = format_json(maps, cfg.metadata())
    else:
        text = format_csv(maps, cfg.metadata())
    write_output(text, cfg.output)
    logger.info("Output written", path=cfg.output, maps=len(maps))
    return EXIT_OK


def _dispatch(runner: SweepRunner, cfg: CliConfig) -> List[StatMap]:
    if cfg.subcommand == Subcommand.CURVES:
        return run_sweep(runner, "variance_curves")
    if cfg.subcommand == Subcommand.CORR:
        return run_sweep(runner, "corr_vs_q1")
    if cfg.subcommand == Subcommand.CORRMAP:
        return run_sweep(runner, "corr_map", which=cfg.which)
    if cfg.subcommand == Subcommand.VPFMAP:
        return run_sweep(runner, "vpf_map")
    if cfg.subcommand == Subcommand.SIGNMAP:
        return runner.sign_map(cfg.kind)
    return run_sweep(runner, "analytic_curves")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    CLI entry point

    Exit codes: 0 success, 2 invalid configuration, 3 output failure, 4 pipeline failure or a
    failed self test.
    """
    logger = Logger("vpflab", "WARNING")
    args = sys.argv[1:] if argv is None else argv

    try:
        cfg = parse_config(args)
    except (ValidationError, ConfigurationError) as e:
        logger.error(str(e))
        return EXIT_INVALID

    logger.set_level(cfg.log_level)
    try:
        return execute(cfg, logger)
    except (ValidationError, ConfigurationError) as e:
        logger.error(str(e))
        return EXIT_INVALID
    except OutputError as e:
        logger.error(str(e))
        return EXIT_OUTPUT
    except VpfLabError as e:
        logger.error(str(e))
        return EXIT_PIPELINE


def main_entry() -> None:
    """Console-script wrapper that exits with the status of main()"""
    raise SystemExit(main())
