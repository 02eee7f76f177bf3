# src/tightness_mcp/models.py
"""Report and value models shared by the engine, the tools and the CLI."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Annotated, Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, BeforeValidator, ConfigDict, PlainSerializer

from .engine import MuConvention
from .linalg import format_rational, parse_rational


def _to_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    return Fraction(value)


Rational = Annotated[
    Fraction,
    BeforeValidator(_to_fraction),
    PlainSerializer(format_rational, return_type=str),
]


class Report(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class BettiVector(Report):
    """β_0..β_d (or β̃_0..β̃_d when reduced) over one field."""

    values: Tuple[int, ...]
    reduced: bool = False
    field: str

    def at(self, i: int) -> int:
        return self.values[i] if 0 <= i < len(self.values) else 0

    def __len__(self) -> int:
        return len(self.values)


class SigmaVector(Report):
    values: Tuple[Rational, ...]
    field: str

    def at(self, i: int) -> Fraction:
        """σ_i, zero outside 0..d."""
        return self.values[i] if 0 <= i < len(self.values) else Fraction(0)


class MuVector(Report):
    values: Tuple[Rational, ...]
    field: str
    convention: MuConvention = MuConvention.CORRECTED

    def at(self, i: int) -> Fraction:
        return self.values[i] if 0 <= i < len(self.values) else Fraction(0)


class ManifoldStatus(str, Enum):
    CLOSED = "closed-homology-manifold"
    WITH_BOUNDARY = "homology-manifold-with-boundary"
    BALL = "homology-ball"
    SPHERE = "homology-sphere"
    NOT_MANIFOLD = "not-homology-manifold"

    @property
    def is_closed(self) -> bool:
        return self in (ManifoldStatus.CLOSED, ManifoldStatus.SPHERE)

    @property
    def has_boundary(self) -> bool:
        return self in (ManifoldStatus.WITH_BOUNDARY, ManifoldStatus.BALL)


class StackedReport(Report):
    k: int
    dimension: int
    holds: bool
    offending_face: Optional[Tuple[int, ...]] = None
    boundary_matches: Optional[bool] = None


class Witness(Report):
    vertices: Tuple[int, ...]
    degree: int


class TightnessReport(Report):
    tight: bool
    method: str
    field: str
    connected: bool
    beta: BettiVector
    mu: Optional[MuVector] = None
    witness: Optional[Witness] = None
    deciders_agree: Optional[bool] = None

    @property
    def verdict(self) -> str:
        return "tight" if self.tight else "not-tight"


class MorseRow(Report):
    ell: int
    mu: Rational
    beta: int
    mu_alternating: Rational
    beta_alternating: Rational
    equality_a: bool
    equality_c: bool
    injective: Optional[bool] = None
    injective_below: Optional[bool] = None


class MorseReport(Report):
    field: str
    rows: Tuple[MorseRow, ...]
    injectivity_checked: bool


class ConjectureReport(Report):
    k: int
    m: int
    field: str
    dimension_ok: bool
    neighbourly_ok: bool
    sphere_ok: bool
    sigma: Rational
    formula: Rational
    raw_formula: Rational
    matches_formula: bool
    matches_raw: bool
    mu_k: Optional[Rational] = None
    mu_formula: Optional[Rational] = None
    matches_mu_formula: Optional[bool] = None


class GeneratorSpec(Report):
    """Family name plus parameters; identical specs build identical complexes."""

    family: str
    params: Dict[str, Any] = {}
    seed: Optional[int] = None
    rng: Optional[str] = None


class BatteryCheck(Report):
    name: str
    passed: bool
    detail: str = ""


class BatteryReport(Report):
    field: str
    checks: List[BatteryCheck]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)
