# src/tightness_mcp/invariants.py
"""Sigma- and mu-vectors, stackedness, and homology-manifold recognition.

The mu-vector numerator defaults to ``σ_{i−1}(lk x)`` for i ≥ 1. The printed
variant ``δ_{i1} + σ_{i−1}(lk x)`` belongs to a sigma convention that lowers
σ_0 by one, and is only available as ``MuConvention.RAW`` for comparison.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import comb
from typing import Iterator, Optional, Tuple

from .complex import (
    SimplicialComplex,
    boundary_complex,
    component_vertex_sets,
    induced_subcomplex,
    interior_faces,
    link,
)
from .engine import (
    ComplexInputError,
    MuConvention,
    PreconditionError,
    TopologyEngine,
    default_engine,
)
from .homology import betti_vector, reduced_betti
from .linalg import FieldSpec
from .models import ManifoldStatus, MuVector, SigmaVector, StackedReport

logger = logging.getLogger(__name__)


def submasks(full: int) -> Iterator[int]:
    """Every subset of the bit set full, the empty set last."""
    sub = full
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & full


def sigma_vector(
    X: SimplicialComplex,
    field: Optional[FieldSpec] = None,
    engine: Optional[TopologyEngine] = None,
) -> SigmaVector:
    """σ_i = Σ_{A ⊆ V} β̃_i(X[A]) / binom(f_0, #A), for 0 ≤ i ≤ dim X."""
    engine = engine or default_engine()
    field = engine.resolve_field(field)
    n, d = X.num_vertices, X.dim
    engine.check_sweep("sigma vector", n)
    if d < 0:
        return SigmaVector(values=(), field=field.name)

    logger.info("sigma sweep over %s subsets of %s vertices", 1 << n, n)
    values = _sigma_values(X, field, engine)
    logger.info("sigma sweep done: %s", [str(v) for v in values])
    logger.debug("memo %s", engine.memo.stats())
    return SigmaVector(values=values, field=field.name)


def _sigma_values(X: SimplicialComplex, field: FieldSpec, engine: TopologyEngine) -> Tuple[Fraction, ...]:
    n, d = X.num_vertices, X.dim
    if d < 0:
        return ()
    # totals[i][s]: Σ β̃_i(X[A]) over subsets A of size s
    totals = [[0] * (n + 1) for _ in range(d + 1)]
    for mask in submasks(X.vertex_mask):
        size = mask.bit_count()
        for i, value in enumerate(reduced_betti(X, mask, field, engine)):
            if value:
                totals[i][size] += value
    return tuple(
        sum((Fraction(row[s], comb(n, s)) for s in range(n + 1) if row[s]), Fraction(0))
        for row in totals
    )


def mu_vector(
    X: SimplicialComplex,
    field: Optional[FieldSpec] = None,
    engine: Optional[TopologyEngine] = None,
    convention: Optional[MuConvention] = None,
) -> MuVector:
    """μ_0 = Σ_x 1/(1+f_0(lk x)); μ_i = Σ_x σ_{i−1}(lk x)/(1+f_0(lk x)) for i ≥ 1."""
    engine = engine or default_engine()
    field = engine.resolve_field(field)
    convention = MuConvention(convention or engine.config.mu_convention)
    d = X.dim
    link_limit = engine.config.sigma_limit - 1
    logger.info("mu sweep over the links of %s vertices (%s)", X.num_vertices, convention.value)
    values = [Fraction(0)] * (d + 1)
    for x in X.vertices:
        lk = link(X, [x])
        engine.check_sweep(f"link of vertex {x}", lk.num_vertices, link_limit)
        weight = Fraction(1, 1 + lk.num_vertices)
        values[0] += weight
        if d < 1:
            continue
        sigma = _sigma_values(lk, field, engine)
        for i in range(1, d + 1):
            numerator = sigma[i - 1] if i - 1 < len(sigma) else Fraction(0)
            if convention is MuConvention.RAW and i == 1:
                numerator += 1
            values[i] += numerator * weight
        logger.debug("vertex %s: link has %s vertices, sigma %s", x, lk.num_vertices, [str(v) for v in sigma])
    logger.info("mu sweep done: %s", [str(v) for v in values])
    return MuVector(values=tuple(values), field=field.name, convention=convention)


def is_stacked_with_boundary(delta: SimplicialComplex, k: int) -> StackedReport:
    """Skel_{dim−1−k}(Δ) = Skel_{dim−1−k}(∂Δ), reporting the first interior face otherwise."""
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    boundary = boundary_complex(delta)
    if boundary.is_empty:
        raise PreconditionError(
            "Complex has empty boundary; check a closed complex with a witness ball (stacked-pair)"
        )
    top = delta.dim - 1 - k
    face = next(iter(interior_faces(delta, boundary)), None)
    if face is not None and len(face) - 1 <= top:
        return StackedReport(k=k, dimension=delta.dim, holds=False, offending_face=face)
    return StackedReport(k=k, dimension=delta.dim, holds=True)


def verify_stacked_pair(
    B: SimplicialComplex,
    k: int,
    expected_boundary: Optional[SimplicialComplex] = None,
) -> StackedReport:
    """Stackedness of B and, when given, ∂B equal to expected_boundary as labeled complexes."""
    if not B.is_pure:
        raise ComplexInputError("Stacked ball must be pure")
    report = is_stacked_with_boundary(B, k)
    if expected_boundary is None:
        return report
    matches = boundary_complex(B) == expected_boundary
    return report.model_copy(update={"boundary_matches": matches})


def _link_kind(L: SimplicialComplex, m: int, field: FieldSpec, engine: TopologyEngine) -> Optional[str]:
    """'sphere' for a homology m-sphere pattern, 'acyclic' for an acyclic m-complex, else None."""
    if L.is_empty:
        return "sphere" if m == -1 else None
    if L.dim != m or not L.is_pure:
        return None
    betti = reduced_betti(L, L.vertex_mask, field, engine)
    if not any(betti):
        return "acyclic"
    if betti[m] == 1 and not any(betti[:m]):
        return "sphere"
    return None


def _is_sphere_pattern(X: SimplicialComplex, field: FieldSpec, engine: TopologyEngine) -> bool:
    betti = reduced_betti(X, X.vertex_mask, field, engine)
    return bool(betti) and betti[-1] == 1 and not any(betti[:-1])


def manifold_status(
    X: SimplicialComplex,
    field: Optional[FieldSpec] = None,
    engine: Optional[TopologyEngine] = None,
) -> ManifoldStatus:
    """Classify X by the homology of the links of all its nonempty faces."""
    engine = engine or default_engine()
    field = engine.resolve_field(field)
    engine.check_sweep("manifold recognition", X.num_vertices, engine.config.manifold_limit)
    if X.is_empty or not X.is_pure:
        return ManifoldStatus.NOT_MANIFOLD

    D = X.dim
    boundary_faces = set()
    for layer in X.faces:
        for face in layer:
            kind = _link_kind(link(X, face), D - len(face), field, engine)
            if kind is None:
                logger.debug("face %s has a link that is neither sphere nor acyclic", face)
                return ManifoldStatus.NOT_MANIFOLD
            if kind == "acyclic":
                boundary_faces.add(face)

    if not boundary_faces:
        return ManifoldStatus.SPHERE if _is_sphere_pattern(X, field, engine) else ManifoldStatus.CLOSED

    boundary = boundary_complex(X)
    if boundary.face_set != boundary_faces:
        return ManifoldStatus.NOT_MANIFOLD
    boundary_status = manifold_status(boundary, field, engine)
    if not boundary_status.is_closed:
        return ManifoldStatus.NOT_MANIFOLD
    acyclic = not any(reduced_betti(X, X.vertex_mask, field, engine))
    if acyclic and boundary_status is ManifoldStatus.SPHERE:
        return ManifoldStatus.BALL
    return ManifoldStatus.WITH_BOUNDARY


def is_orientable(
    M: SimplicialComplex,
    field: Optional[FieldSpec] = None,
    engine: Optional[TopologyEngine] = None,
) -> bool:
    """β_d(M; F) = 1 on every component of a closed homology d-manifold."""
    engine = engine or default_engine()
    field = engine.resolve_field(field)
    if not manifold_status(M, field, engine).is_closed:
        raise PreconditionError("Orientability is defined here for closed homology manifolds only")
    if field.characteristic == 2:
        return True
    verdicts = {
        betti_vector(induced_subcomplex(M, comp), field, engine=engine).at(M.dim) == 1
        for comp in component_vertex_sets(M)
    }
    if len(verdicts) != 1:
        raise PreconditionError("Components disagree on orientability")
    return verdicts.pop()


def poincare_duality_holds(
    M: SimplicialComplex,
    field: Optional[FieldSpec] = None,
    engine: Optional[TopologyEngine] = None,
) -> bool:
    """β_{d−i} = β_i for all i."""
    betti = betti_vector(M, field, engine=engine).values
    return betti == tuple(reversed(betti))


def binomial(n: int, k: int) -> int:
    """binom(n, k), zero when n < k or n < 0."""
    if k < 0 or n < k or n < 0:
        return 0
    return comb(n, k)
