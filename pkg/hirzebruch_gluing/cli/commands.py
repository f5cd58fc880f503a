"""
Subcommand Handlers
===================
Each handler takes a validated RunConfig and returns a JSON-ready payload
(SVG text for ``plot``). Exact values are emitted as ``"p/q"`` strings next
to their float approximations; only the exact fields are authoritative.
"""
from __future__ import annotations

import copy
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any, Callable

from ..arith import format_rational, phase_approx
from ..config import settings
from ..divisorial import wall_boundary_report
from ..errors import InvariantError
from ..gluing import GluingParams, perversity, wall_value, z_glued
from ..ktheory import ChernVector, chern_of
from ..moduli import classify
from .plot import render_cone_svg
from .schemas import ChargeReport, GluingParamsIn, RunConfig, SelfcheckSummary, SweepRecord
from .selfcheck import run_selfcheck

logger = logging.getLogger(__name__)

_GAUSSIAN_PARTS = {"re": 0, "im": 1}


def _params(config: RunConfig) -> GluingParams:
    if config.params is None:
        raise InvariantError("RunConfig.params", f"'{config.command.value}' needs --config")
    return config.params.to_params()


# ============================================================================
# SINGLE-POINT RECORDS
# ============================================================================

def charge_record(params: dict, target) -> dict:
    g = GluingParamsIn.model_validate(params).to_params()
    v = target if isinstance(target, ChernVector) else chern_of(g.surface, target)
    z = z_glued(g, v)
    report = perversity(g)
    return ChargeReport(
        Z=z.to_json(),
        Z_float=[float(z.re), float(z.im)],
        phase_float=phase_approx(z) if z.in_half_plane() else None,
        per=report.per_sign.value,
        per_value=report.per_value,
        wall_value=format_rational(wall_value(g)),
        chern=v.to_json(),
    ).model_dump(mode="json")


def wall_record(params: dict, target=None) -> dict:
    g = GluingParamsIn.model_validate(params).to_params()
    return wall_boundary_report(g).to_json()


def classify_record(params: dict, target=None) -> dict:
    g = GluingParamsIn.model_validate(params).to_params()
    return classify(g).to_json()


# ============================================================================
# SWEEPS
# ============================================================================

def with_value(params: dict, path: str, value: Fraction) -> dict:
    """Copy of ``params`` with the dotted ``path`` set to ``value``."""
    data = copy.deepcopy(params)
    node: Any = data
    segments = path.split(".")
    for position, segment in enumerate(segments):
        last = position == len(segments) - 1
        if isinstance(node, list):
            key = _GAUSSIAN_PARTS.get(segment, segment)
            try:
                key = int(key)
                node[key]
            except (ValueError, IndexError):
                raise InvariantError("RunConfig.sweep", f"no entry {segment!r} in path {path!r}") from None
        elif isinstance(node, dict) and node.get(segment) is not None:
            key = segment
        else:
            raise InvariantError("RunConfig.sweep", f"unknown parameter path {path!r}")
        if last:
            node[key] = int(value) if value.denominator == 1 else format_rational(value)
        else:
            node = node[key]
    return data


def _evaluate(config: RunConfig, record: Callable[[dict, Any], dict]) -> dict | list[dict]:
    _params(config)
    base = config.params.model_dump(mode="json")
    if config.sweep is None:
        return record(base, config.target)

    grid = config.sweep.grid()
    jobs = [with_value(base, config.sweep.path, value) for value in grid]
    for job in jobs:
        GluingParamsIn.model_validate(job).to_params()
    logger.debug("Sweeping %s over %d grid points", config.sweep.path, len(jobs))
    if settings.sweep_workers > 1:
        with ProcessPoolExecutor(max_workers=settings.sweep_workers) as pool:
            results = list(pool.map(record, jobs, itertools.repeat(config.target)))
    else:
        results = [record(job, config.target) for job in jobs]
    return [
        SweepRecord(path=config.sweep.path, value=format_rational(value), result=result).model_dump(mode="json")
        for value, result in zip(grid, results)
    ]


# ============================================================================
# COMMANDS
# ============================================================================

def cmd_charge(config: RunConfig) -> dict | list[dict]:
    if config.target is None:
        raise InvariantError("RunConfig.target", "charge needs --object or --chern")
    return _evaluate(config, charge_record)


def cmd_wall(config: RunConfig) -> dict | list[dict]:
    return _evaluate(config, wall_record)


def cmd_classify(config: RunConfig) -> dict | list[dict]:
    return _evaluate(config, classify_record)


def cmd_plot(config: RunConfig) -> str:
    if config.sweep is not None:
        raise InvariantError("RunConfig.sweep", "plot renders a single parameter set")
    g = _params(config)
    return render_cone_svg(g, wall_boundary_report(g))


def cmd_selfcheck(config: RunConfig) -> SelfcheckSummary:
    return run_selfcheck(config.seed)


COMMANDS = {
    "charge": cmd_charge,
    "wall": cmd_wall,
    "classify": cmd_classify,
    "plot": cmd_plot,
    "selfcheck": cmd_selfcheck,
}
