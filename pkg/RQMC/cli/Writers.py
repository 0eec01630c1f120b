"""
Deterministic renderers. Every float goes through "%.12e"; JSON floats are rounded
through the same format, so parsing an emitted document and emitting it again gives
identical text.
"""

import json
from typing import Any, Iterable, Optional, Sequence

from pydantic import BaseModel, Field

from RQMC.core.PhysicalParams import PhysicalParams
from RQMC.core.UnitSystem import UnitSystem
from RQMC.correspondence.CorrespondenceReport import CorrespondenceReport

FLOAT_FORMAT = "%.12e"


def format_float(value: float) -> str:
    return FLOAT_FORMAT % value


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Header row, comma separated, LF line endings."""
    lines = [",".join(header)]
    lines.extend(",".join(_cell(value) for value in row) for row in rows)
    return "\n".join(lines) + "\n"


def round_floats(payload: Any) -> Any:
    if isinstance(payload, bool) or payload is None:
        return payload
    if isinstance(payload, float):
        return float(format_float(payload))
    if isinstance(payload, dict):
        return {key: round_floats(value) for key, value in payload.items()}
    if isinstance(payload, (list, tuple)):
        return [round_floats(value) for value in payload]
    return payload


def json_text(payload: Any) -> str:
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    return json.dumps(round_floats(payload), indent=2) + "\n"


class UnitsBlock(BaseModel):
    mode: str
    mass: float
    omega: float
    length: float
    hbar: float
    c: float

    @classmethod
    def of(cls, units: UnitSystem, params: PhysicalParams) -> "UnitsBlock":
        return cls(mode=str(units.mode), **params.model_dump())


class ReportRow(BaseModel):
    n: int
    distance: float
    residual: Optional[float] = None
    S: Optional[float] = None


class WindowBlock(BaseModel):
    kind: str
    scale: float
    width: Optional[float] = None
    widths: list[float] = Field(default_factory=list, description="Width used at each n")


class ReportDocument(BaseModel):
    """
    Stable JSON schema of a convergence report.
    """

    system: str
    branch: str
    target: str
    units: UnitsBlock
    entries: list[ReportRow]
    exponent: Optional[float] = None
    exponent_stderr: Optional[float] = None
    monotone: bool
    window_policy: WindowBlock
    version: str

    @classmethod
    def of(
        cls, report: CorrespondenceReport, units: UnitSystem, version: str
    ) -> "ReportDocument":
        return cls(
            system=str(report.system),
            branch=str(report.branch),
            target=str(report.target),
            units=UnitsBlock.of(units, report.params),
            entries=[
                ReportRow(n=e.n, distance=e.distance, residual=e.residual, S=e.S)
                for e in report.entries
            ],
            exponent=report.exponent,
            exponent_stderr=report.exponent_stderr,
            monotone=report.monotone,
            window_policy=WindowBlock(
                **report.window_policy.describe(),
                widths=[e.window for e in report.entries],
            ),
            version=version,
        )
