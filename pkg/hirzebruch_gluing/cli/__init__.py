"""
Hirzebruch Gluing CLI
=====================
Command-line front end: parameter ingestion, JSON reports, SVG cone/wall
figures and the seeded self-check runner.

Exit codes: 0 ok, 1 self-check failure, 2 validation error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from pydantic import BaseModel, ValidationError

from ..config import settings
from ..errors import InvariantError
from ..ktheory import parse_named_object
from .commands import COMMANDS
from .schemas import Command, GluingParamsIn, OutputFormat, RunConfig, SelfcheckSummary, SweepSpec, parse_chern

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_SELFCHECK_FAILED = 1
EXIT_VALIDATION = 2

_HELP = {
    Command.CHARGE: "glued central charge of an object or Chern vector",
    Command.WALL: "wall membership and divisorial boundary position",
    Command.CLASSIFY: "moduli classification of skyscraper sheaves",
    Command.PLOT: "SVG figure of the divisorial cone and the wall",
    Command.SELFCHECK: "run the seeded invariant suites",
}


def _parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", dest="config_path", type=Path, help="GluingParams JSON file")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.JSON.value)
    common.add_argument("--out", dest="out_path", type=Path)
    common.add_argument("--seed", type=int)
    common.add_argument("--sweep", help="<param>=<from>:<to>:<steps>")

    parser = argparse.ArgumentParser(
        prog="hirzebruch-gluing",
        description="Exact glued stability data on Hirzebruch surfaces.",
    )
    subcommands = parser.add_subparsers(dest="command", required=True)
    for command in Command:
        sub = subcommands.add_parser(command.value, parents=[common], help=_HELP[command])
        if command is Command.CHARGE:
            target = sub.add_mutually_exclusive_group()
            target.add_argument("--object", help="NamedObject JSON or O_x, O_f, O_f(-C0)[1]")
            target.add_argument("--chern", help="r,a,b,ch2 or a JSON object with keys r, a, b, ch2")
    return parser.parse_args(argv)


def _load_params(path: Path | None) -> GluingParamsIn | None:
    if path is None:
        return None
    try:
        data = json.loads(path.read_text())
    except OSError as exc:
        raise InvariantError("RunConfig.config", f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InvariantError("RunConfig.config", f"{path} is not valid JSON: {exc.msg}") from None
    return GluingParamsIn.model_validate(data)


def _load_target(args: argparse.Namespace):
    if getattr(args, "chern", None):
        return parse_chern(args.chern)
    text = getattr(args, "object", None)
    if not text:
        return None
    if text.lstrip().startswith("{"):
        try:
            return parse_named_object(json.loads(text))
        except json.JSONDecodeError as exc:
            raise InvariantError("NamedObject", f"not valid JSON: {exc.msg}") from None
    return parse_named_object(text)


def build_run_config(args: argparse.Namespace) -> RunConfig:
    command = Command(args.command)
    fmt = OutputFormat(args.format)
    if fmt is OutputFormat.SVG and command is not Command.PLOT:
        raise InvariantError("RunConfig.format", f"svg output is only produced by plot, not {command.value}")
    if args.seed is not None and not 0 <= args.seed < 2**64:
        raise InvariantError("RunConfig.seed", f"seed must be an unsigned 64-bit integer, got {args.seed}")
    return RunConfig(
        command=command,
        params=_load_params(args.config_path),
        sweep=SweepSpec.parse(args.sweep) if args.sweep else None,
        output=args.out_path,
        format=fmt,
        seed=args.seed,
        target=_load_target(args),
    )


def render(payload, fmt: OutputFormat) -> str:
    if isinstance(payload, str):
        return payload
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    if fmt is OutputFormat.PRETTY:
        return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _validation_error_json(exc: ValidationError) -> dict:
    first = exc.errors()[0]
    location = ".".join(str(part) for part in first["loc"])
    invariant = f"{exc.title}.{location}" if location else exc.title
    return {"status": "error", "invariant": invariant, "message": first["msg"]}


def _emit_error(error: dict):
    sys.stderr.write(json.dumps(error, sort_keys=True) + "\n")


def main(argv: list[str] | None = None) -> int:
    args = _parse_args(argv)
    logging.basicConfig(level=settings.log_level, format="%(levelname)s: %(message)s")

    try:
        config = build_run_config(args)
        payload = COMMANDS[config.command.value](config)
    except InvariantError as exc:
        logger.debug("Validation failed: %s", exc)
        _emit_error(exc.to_json())
        return EXIT_VALIDATION
    except ValidationError as exc:
        logger.debug("Validation failed: %s", exc)
        _emit_error(_validation_error_json(exc))
        return EXIT_VALIDATION

    text = render(payload, config.format)
    if config.output is not None:
        try:
            config.output.write_text(text + "\n")
        except OSError as exc:
            error = InvariantError("RunConfig.output", f"cannot write {config.output}: {exc.strerror}")
            logger.debug("Validation failed: %s", error)
            _emit_error(error.to_json())
            return EXIT_VALIDATION
    else:
        sys.stdout.write(text + "\n")

    if isinstance(payload, SelfcheckSummary) and not payload.passed:
        logger.error("Self-check failed: %s", ", ".join(payload.failing))
        return EXIT_SELFCHECK_FAILED
    return EXIT_OK


__all__ = ["main", "build_run_config", "render"]
