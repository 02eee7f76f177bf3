# src/tightness_mcp/tightness.py
"""Tightness deciders, Morse-type inequality tables and Conjecture B exploration."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from .complex import SimplicialComplex, connected_components, mask_of, neighbourliness
from .engine import InvariantViolation, MuConvention, TopologyEngine, default_engine
from .homology import InclusionOracle, betti_vector
from .invariants import binomial, manifold_status, mu_vector, sigma_vector, submasks
from .linalg import FieldSpec
from .models import (
    ConjectureReport,
    ManifoldStatus,
    MorseReport,
    MorseRow,
    TightnessReport,
    Witness,
)

logger = logging.getLogger(__name__)


def lexicographic_subsets(vertices: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    """Nonempty subsets of sorted vertices in lexicographic order ((0,) < (0, 1) < (1,))."""
    def extend(prefix: Tuple[int, ...], start: int) -> Iterator[Tuple[int, ...]]:
        for j in range(start, len(vertices)):
            subset = prefix + (vertices[j],)
            yield subset
            yield from extend(subset, j + 1)

    yield from extend((), 0)


def tight_by_mu(
    X: SimplicialComplex,
    field: Optional[FieldSpec] = None,
    engine: Optional[TopologyEngine] = None,
    convention: Optional[MuConvention] = None,
) -> TightnessReport:
    """Tight iff connected and μ_i = β_i for 0 ≤ i ≤ dim."""
    engine = engine or default_engine()
    field = engine.resolve_field(field)
    beta = betti_vector(X, field, engine=engine)
    mu = mu_vector(X, field, engine, convention)
    connected = connected_components(X) == 1
    tight = connected and all(mu.at(i) == beta.at(i) for i in range(X.dim + 1))
    return TightnessReport(
        tight=tight, method="mu", field=field.name, connected=connected, beta=beta, mu=mu
    )


def find_witness(
    X: SimplicialComplex,
    field: FieldSpec,
    engine: TopologyEngine,
) -> Optional[Witness]:
    """Lexicographically first (A, i) with H_i(X[A]) → H_i(X) not injective."""
    oracle = InclusionOracle(X, field, engine)
    for subset in lexicographic_subsets(X.vertices):
        mask = mask_of(subset)
        for i in range(X.dim + 1):
            if not oracle.injective(mask, i):
                return Witness(vertices=subset, degree=i)
    return None


def tight_by_definition(
    X: SimplicialComplex,
    field: Optional[FieldSpec] = None,
    engine: Optional[TopologyEngine] = None,
) -> TightnessReport:
    """Tight iff connected and every induced subcomplex injects in homology."""
    engine = engine or default_engine()
    field = engine.resolve_field(field)
    engine.check_sweep("direct tightness", X.num_vertices, engine.config.direct_limit)
    logger.info("direct tightness sweep over %s subsets", (1 << X.num_vertices) - 1)
    beta = betti_vector(X, field, engine=engine)
    connected = connected_components(X) == 1
    witness = find_witness(X, field, engine)
    logger.info("direct tightness sweep done: witness %s", witness)
    return TightnessReport(
        tight=connected and witness is None,
        method="direct",
        field=field.name,
        connected=connected,
        beta=beta,
        witness=witness,
    )


def tight_by_both(
    X: SimplicialComplex,
    field: Optional[FieldSpec] = None,
    engine: Optional[TopologyEngine] = None,
    convention: Optional[MuConvention] = None,
) -> TightnessReport:
    """Run both deciders; under the corrected convention they must agree."""
    engine = engine or default_engine()
    convention = MuConvention(convention or engine.config.mu_convention)
    by_mu = tight_by_mu(X, field, engine, convention)
    direct = tight_by_definition(X, field, engine)
    agree = by_mu.tight == direct.tight
    if not agree and convention is MuConvention.CORRECTED:
        raise InvariantViolation(
            f"mu decider says {by_mu.verdict}, direct decider says {direct.verdict}"
        )
    return by_mu.model_copy(
        update={"method": "both", "witness": direct.witness, "deciders_agree": agree}
    )


def injectivity_profile(
    X: SimplicialComplex,
    field: FieldSpec,
    engine: TopologyEngine,
) -> List[bool]:
    """For each degree i, whether H_i(X[A]) → H_i(X) is injective for every A."""
    oracle = InclusionOracle(X, field, engine)
    masks = list(submasks(X.vertex_mask))
    return [all(oracle.injective(mask, i) for mask in masks) for i in range(X.dim + 1)]


def morse_report(
    X: SimplicialComplex,
    field: Optional[FieldSpec] = None,
    engine: Optional[TopologyEngine] = None,
) -> MorseReport:
    """Both Morse-type inequalities per degree, with their equality cases cross-checked
    against injectivity when the complex is small enough for the direct sweep."""
    engine = engine or default_engine()
    field = engine.resolve_field(field)
    mu = mu_vector(X, field, engine, MuConvention.CORRECTED)
    beta = betti_vector(X, field, engine=engine)
    checked = X.num_vertices <= engine.config.direct_limit
    injective = injectivity_profile(X, field, engine) if checked else None

    rows = []
    mu_alt, beta_alt = Fraction(0), 0
    for ell in range(X.dim + 1):
        mu_alt = mu.at(ell) - mu_alt
        beta_alt = beta.at(ell) - beta_alt
        if mu_alt < beta_alt or mu.at(ell) < beta.at(ell):
            raise InvariantViolation(
                f"Morse inequality fails at degree {ell}: mu={mu.values} beta={beta.values}"
            )
        equality_a = mu_alt == beta_alt
        equality_c = mu.at(ell) == beta.at(ell)
        row = MorseRow(
            ell=ell,
            mu=mu.at(ell),
            beta=beta.at(ell),
            mu_alternating=mu_alt,
            beta_alternating=beta_alt,
            equality_a=equality_a,
            equality_c=equality_c,
        )
        if injective is not None:
            below = injective[ell - 1] if ell >= 1 else True
            if equality_a != injective[ell] or equality_c != (injective[ell] and below):
                raise InvariantViolation(
                    f"Equality flags at degree {ell} disagree with injectivity {injective}"
                )
            row = row.model_copy(update={"injective": injective[ell], "injective_below": below})
        rows.append(row)
    return MorseReport(field=field.name, rows=tuple(rows), injectivity_checked=checked)


def conjecture_b_compare(
    S: SimplicialComplex,
    k: int,
    field: Optional[FieldSpec] = None,
    engine: Optional[TopologyEngine] = None,
) -> ConjectureReport:
    """Compare σ_{k−1}(S) with binom(m−k−2, k+1)/binom(2k+3, k+1), m = f_0(S).

    The raw variant subtracts δ_{k,1}. For a closed (2k+1)-manifold the report also
    compares μ_k with binom(m−k−3, k+1)/binom(2k+3, k+1). Nothing is asserted.
    """
    engine = engine or default_engine()
    field = engine.resolve_field(field)
    m = S.num_vertices
    status = manifold_status(S, field, engine)
    denominator = binomial(2 * k + 3, k + 1)
    formula = Fraction(binomial(m - k - 2, k + 1), denominator)
    raw_formula = formula - (1 if k == 1 else 0)
    sigma = sigma_vector(S, field, engine).at(k - 1)

    extra = {}
    if S.dim == 2 * k + 1 and status.is_closed:
        mu_k = mu_vector(S, field, engine, MuConvention.CORRECTED).at(k)
        mu_formula = Fraction(binomial(m - k - 3, k + 1), denominator)
        extra = {"mu_k": mu_k, "mu_formula": mu_formula, "matches_mu_formula": mu_k == mu_formula}

    return ConjectureReport(
        k=k,
        m=m,
        field=field.name,
        dimension_ok=S.dim == 2 * k,
        neighbourly_ok=not S.is_empty and neighbourliness(S) >= k,
        sphere_ok=status is ManifoldStatus.SPHERE,
        sigma=sigma,
        formula=formula,
        raw_formula=raw_formula,
        matches_formula=sigma == formula,
        matches_raw=sigma == raw_formula,
        **extra,
    )
