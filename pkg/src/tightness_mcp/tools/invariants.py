# src/tightness_mcp/tools/invariants.py
"""Sigma/mu-vector and stackedness tools."""

from typing import Any, Dict, List, Optional

from .. import invariants
from ..engine import TopologyEngine
from .structure import facets_to_complex


class InvariantsApi:
    """Tools for the subset-sweep invariants of a complex."""

    async def sigma_vector(
        self,
        engine: TopologyEngine,
        facets: List[List[int]],
        field: Optional[str] = None,
    ) -> Dict[str, Any]:
        """σ_i: binomially weighted sums of reduced Betti numbers of induced subcomplexes."""
        sigma = invariants.sigma_vector(facets_to_complex(facets), field, engine)
        return {"success": True, **sigma.model_dump(mode="json")}

    async def mu_vector(
        self,
        engine: TopologyEngine,
        facets: List[List[int]],
        field: Optional[str] = None,
        convention: Optional[str] = None,
    ) -> Dict[str, Any]:
        """μ_i: vertex-link weighted sigma-vectors; convention is corrected or raw."""
        mu = invariants.mu_vector(facets_to_complex(facets), field, engine, convention)
        return {"success": True, **mu.model_dump(mode="json")}

    async def stackedness(
        self,
        engine: TopologyEngine,
        facets: List[List[int]],
        k: int,
    ) -> Dict[str, Any]:
        """Whether a manifold with boundary is k-stacked (skeleta agree with the boundary's)."""
        report = invariants.is_stacked_with_boundary(facets_to_complex(facets), k)
        return {"success": True, **report.model_dump(mode="json")}

    async def stacked_pair(
        self,
        engine: TopologyEngine,
        ball_facets: List[List[int]],
        k: int,
        sphere_facets: Optional[List[List[int]]] = None,
    ) -> Dict[str, Any]:
        """Check a witness ball for k-stackedness and, optionally, its boundary against a sphere."""
        sphere = facets_to_complex(sphere_facets) if sphere_facets is not None else None
        report = invariants.verify_stacked_pair(facets_to_complex(ball_facets), k, sphere)
        return {"success": True, **report.model_dump(mode="json")}
