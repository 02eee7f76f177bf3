# src/tightness_mcp/tools/homology.py
"""Homology tools: Betti numbers, inclusion maps, manifold recognition."""

from typing import Any, Dict, List, Optional

from .. import homology, invariants
from ..engine import TopologyEngine
from .structure import facets_to_complex


class HomologyApi:
    """Tools for field-coefficient homology of simplicial complexes."""

    async def betti_numbers(
        self,
        engine: TopologyEngine,
        facets: List[List[int]],
        field: Optional[str] = None,
        reduced: bool = False,
    ) -> Dict[str, Any]:
        """Betti numbers β_0..β_d (or reduced) over q, f2, f3 or fp:<p>."""
        betti = homology.betti_vector(facets_to_complex(facets), field, reduced, engine)
        return {"success": True, **betti.model_dump(mode="json")}

    async def inclusion_injective(
        self,
        engine: TopologyEngine,
        facets: List[List[int]],
        vertices: List[int],
        degree: int,
        field: Optional[str] = None,
    ) -> Dict[str, Any]:
        """Whether H_i of the induced subcomplex maps injectively into H_i of the complex."""
        X = facets_to_complex(facets)
        resolved = engine.resolve_field(field)
        injective = homology.inclusion_injective(X, vertices, degree, resolved, engine)
        return {
            "success": True,
            "vertices": sorted(set(vertices)),
            "degree": degree,
            "field": resolved.name,
            "injective": injective,
        }

    async def manifold_status(
        self,
        engine: TopologyEngine,
        facets: List[List[int]],
        field: Optional[str] = None,
    ) -> Dict[str, Any]:
        """Classify as homology sphere, ball, closed manifold, manifold with boundary, or none."""
        resolved = engine.resolve_field(field)
        status = invariants.manifold_status(facets_to_complex(facets), resolved, engine)
        return {
            "success": True,
            "field": resolved.name,
            "status": status.value,
            "closed": status.is_closed,
            "has_boundary": status.has_boundary,
        }

    async def orientability(
        self,
        engine: TopologyEngine,
        facets: List[List[int]],
        field: Optional[str] = None,
    ) -> Dict[str, Any]:
        """Orientability and Poincaré duality of a closed homology manifold."""
        X = facets_to_complex(facets)
        resolved = engine.resolve_field(field)
        return {
            "success": True,
            "field": resolved.name,
            "orientable": invariants.is_orientable(X, resolved, engine),
            "poincare_duality": invariants.poincare_duality_holds(X, resolved, engine),
        }
