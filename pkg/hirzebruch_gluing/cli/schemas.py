from __future__ import annotations

import json
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Union

from pydantic import BaseModel, ConfigDict, Field

from ..arith import Matrix2, as_rational
from ..config import DEFAULT_SHIFTS
from ..errors import InvariantError
from ..gluing import GluingParams
from ..ktheory import ChernVector

RationalField = Union[int, str]
GaussianField = tuple[RationalField, RationalField]


class GluingParamsIn(BaseModel):
    """Wire form of GluingParams; rationals travel as ``"p/q"`` strings."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    e: int
    m: int
    k: int = 0
    k_prime: int | None = None
    zeta: list[GaussianField] | None = None
    zeta_prime: list[GaussianField] | None = None
    M: list[list[RationalField]] | None = None
    shifts: tuple[int, int] = DEFAULT_SHIFTS

    def to_params(self) -> GluingParams:
        return GluingParams.of_type(
            self.e,
            self.m,
            k=self.k,
            zeta=self.zeta,
            k_prime=self.k_prime,
            zeta_prime=self.zeta_prime,
            shifts=self.shifts,
            matrix=None if self.M is None else Matrix2.from_json(self.M),
        )

    @classmethod
    def from_params(cls, g: GluingParams) -> GluingParamsIn:
        data: dict[str, Any] = {"e": g.surface.e, "m": g.m, "shifts": g.shifts}
        if g.m == 1:
            quiver, rest = g.comp2, None
        elif g.m in (2, 3):
            quiver, rest = g.comp1, (g.comp2 if g.m == 3 else None)
        else:
            quiver = rest = None
        if quiver is not None:
            data["k"] = quiver.k
            data["zeta"] = [tuple(quiver.zeta0.to_json()), tuple(quiver.zeta1.to_json())]
        if rest is not None:
            data["k_prime"] = rest.k
            data["zeta_prime"] = [tuple(rest.zeta0.to_json()), tuple(rest.zeta1.to_json())]
        if g.matrix is not None:
            data["M"] = g.matrix.to_json()
        return cls.model_validate(data)


class OutputFormat(str, Enum):
    JSON = "json"
    PRETTY = "pretty"
    SVG = "svg"


class Command(str, Enum):
    CHARGE = "charge"
    WALL = "wall"
    CLASSIFY = "classify"
    PLOT = "plot"
    SELFCHECK = "selfcheck"


class SweepSpec(BaseModel):
    path: str
    start: str
    stop: str
    steps: int = Field(ge=1)

    @classmethod
    def parse(cls, text: str) -> SweepSpec:
        """Parse ``<param>=<from>:<to>:<steps>``."""
        path, sep, grid = text.partition("=")
        parts = grid.split(":")
        if not sep or not path or len(parts) != 3:
            raise InvariantError("RunConfig.sweep", f"expected <param>=<from>:<to>:<steps>, got {text!r}")
        start, stop, steps = parts
        for bound in (start, stop):
            as_rational(bound)
        try:
            count = int(steps)
        except ValueError:
            raise InvariantError("RunConfig.sweep", f"steps must be an integer, got {steps!r}") from None
        if count < 1:
            raise InvariantError("RunConfig.sweep", f"steps must be >= 1, got {count}")
        return cls(path=path, start=start, stop=stop, steps=count)

    def grid(self) -> list[Fraction]:
        start, stop = as_rational(self.start), as_rational(self.stop)
        return [start + (stop - start) * Fraction(i, self.steps) for i in range(self.steps + 1)]


class RunConfig(BaseModel):
    command: Command
    params: GluingParamsIn | None = None
    sweep: SweepSpec | None = None
    output: Path | None = None
    format: OutputFormat = OutputFormat.JSON
    seed: int | None = None
    target: Any = None


class ChargeReport(BaseModel):
    Z: list[str]
    Z_float: list[float]
    phase_float: float | None
    per: str
    per_value: float
    wall_value: str
    chern: dict[str, str]


class SweepRecord(BaseModel):
    path: str
    value: str
    result: dict[str, Any]


class SuiteResult(BaseModel):
    name: str
    passed: bool
    checked: int
    failures: list[str] = []


class SelfcheckSummary(BaseModel):
    seed: int
    passed: bool
    suites: list[SuiteResult]

    @property
    def failing(self) -> list[str]:
        return [suite.name for suite in self.suites if not suite.passed]


def parse_chern(text: str) -> ChernVector:
    """Read ``r,a,b,ch2`` or the ``{"r", "a", "b", "ch2"}`` object a charge report prints."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvariantError("ChernVector", f"invalid JSON: {exc.msg}") from None
        return ChernVector.from_json(data)
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise InvariantError("ChernVector", f"expected r,a,b,ch2, got {text!r}")
    return ChernVector(*(as_rational(p) for p in parts))
