# src/tightness_mcp/battery.py
"""Property battery: identities and inequalities every complex must satisfy."""

from __future__ import annotations

import logging
from typing import Callable, List, Optional, Tuple

from .complex import (
    MAX_VERTEX_LABEL,
    SimplicialComplex,
    cone,
    connected_components,
    euler_characteristic,
    neighbourliness,
)
from .engine import InvariantViolation, MuConvention, TopologyEngine, default_engine
from .homology import betti_vector, boundary_squared_vanishes, reduced_betti
from .invariants import manifold_status, mu_vector
from .linalg import FieldSpec
from .models import BatteryCheck, BatteryReport, BettiVector, MuVector
from .tightness import morse_report

logger = logging.getLogger(__name__)

Outcome = Tuple[bool, str]


class _Context:
    def __init__(self, X: SimplicialComplex, field: FieldSpec, engine: TopologyEngine):
        self.X = X
        self.field = field
        self.engine = engine
        self.beta: BettiVector = betti_vector(X, field, engine=engine)
        self.mu: MuVector = mu_vector(X, field, engine, MuConvention.CORRECTED)

    def mu_equals_beta(self, i: int) -> bool:
        return self.mu.at(i) == self.beta.at(i)


def _euler_relation(ctx: _Context) -> Outcome:
    chi = euler_characteristic(ctx.X)
    alternating = sum((-1) ** i * b for i, b in enumerate(ctx.beta.values))
    return chi == alternating, f"chi={chi}, alternating Betti sum={alternating}"


def _boundary_squared(ctx: _Context) -> Outcome:
    return boundary_squared_vanishes(ctx.X, ctx.field), ""


def _morse_inequalities(ctx: _Context) -> Outcome:
    try:
        report = morse_report(ctx.X, ctx.field, ctx.engine)
    except InvariantViolation as exc:
        return False, str(exc)
    equal = [row.ell for row in report.rows if row.equality_c]
    detail = f"mu=beta at degrees {equal}"
    if report.injectivity_checked:
        detail += "; equality cases match injectivity"
    return True, detail


def _mu_duality(ctx: _Context) -> Outcome:
    X = ctx.X
    if X.num_vertices > ctx.engine.config.manifold_limit:
        return True, "skipped: above manifold limit"
    if not manifold_status(X, ctx.field, ctx.engine).is_closed:
        return True, "skipped: not a closed homology manifold"
    values = ctx.mu.values
    return values == tuple(reversed(values)), f"mu={[str(v) for v in values]}"


def _middle_degree(ctx: _Context) -> Outcome:
    d = ctx.X.dim
    for k in range(1, d):
        if ctx.mu_equals_beta(k - 1) and ctx.mu_equals_beta(k + 1) and not ctx.mu_equals_beta(k):
            return False, f"mu=beta at {k - 1} and {k + 1} but not at {k}"
    return True, ""


def _cone_annihilation(ctx: _Context) -> Outcome:
    X = ctx.X
    apex = max(X.vertices, default=-1) + 1
    if apex > MAX_VERTEX_LABEL:
        return True, "skipped: no free label for the apex"
    coned = cone(X, apex)
    betti = reduced_betti(coned, coned.vertex_mask, ctx.field, ctx.engine)
    return not any(betti), f"reduced Betti of the cone {list(betti)}"


def _neighbourly_low_degrees(ctx: _Context) -> Outcome:
    if ctx.X.is_empty:
        return True, "skipped: empty complex"
    k = neighbourliness(ctx.X) - 1
    if k < 1:
        return True, "skipped: not 2-neighbourly"
    if not (ctx.mu.at(0) == 1 == ctx.beta.at(0)):
        return False, f"mu_0={ctx.mu.at(0)}, beta_0={ctx.beta.at(0)}"
    for i in range(1, k):
        if not (ctx.mu.at(i) == 0 == ctx.beta.at(i)):
            return False, f"degree {i}: mu={ctx.mu.at(i)}, beta={ctx.beta.at(i)}"
    return True, f"{k + 1}-neighbourly"


def _tight_is_neighbourly(ctx: _Context) -> Outcome:
    X = ctx.X
    tight = connected_components(X) == 1 and all(ctx.mu_equals_beta(i) for i in range(X.dim + 1))
    if not tight or X.num_vertices < 2:
        return True, "skipped: not tight" if not tight else "skipped: single vertex"
    t = neighbourliness(X)
    return t >= 2, f"tight and {t}-neighbourly"


CHECKS: List[Tuple[str, Callable[[_Context], Outcome]]] = [
    ("euler-relation", _euler_relation),
    ("boundary-squared-zero", _boundary_squared),
    ("morse-inequalities", _morse_inequalities),
    ("mu-duality", _mu_duality),
    ("middle-degree-equality", _middle_degree),
    ("cone-annihilation", _cone_annihilation),
    ("neighbourly-low-degrees", _neighbourly_low_degrees),
    ("tight-implies-2-neighbourly", _tight_is_neighbourly),
]


def run_battery(
    X: SimplicialComplex,
    field: Optional[FieldSpec] = None,
    engine: Optional[TopologyEngine] = None,
) -> BatteryReport:
    """Run every check and collect the outcomes; failures are logged as errors."""
    engine = engine or default_engine()
    field = engine.resolve_field(field)
    ctx = _Context(X, field, engine)
    checks = []
    for name, check in CHECKS:
        passed, detail = check(ctx)
        if not passed:
            logger.error("property %s failed on %r: %s", name, X, detail)
        checks.append(BatteryCheck(name=name, passed=passed, detail=detail))
    return BatteryReport(field=field.name, checks=checks)
