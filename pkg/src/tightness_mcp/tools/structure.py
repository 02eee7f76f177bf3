# src/tightness_mcp/tools/structure.py
"""Combinatorial structure tools for simplicial complexes."""

from typing import Any, Dict, List

from .. import complex as cx
from ..engine import TopologyEngine


def facets_to_complex(facets: List[List[int]]) -> cx.SimplicialComplex:
    """Close a facet list given as nested lists of vertex labels."""
    return cx.from_facets(facets)


def complex_to_facets(X: cx.SimplicialComplex) -> List[List[int]]:
    return [list(f) for f in X.facets]


class ComplexApi:
    """Tools for building and inspecting simplicial complexes."""

    async def describe_complex(
        self,
        engine: TopologyEngine,
        facets: List[List[int]],
    ) -> Dict[str, Any]:
        """Dimension, f-vector, purity, connectivity, neighbourliness and boundary."""
        X = facets_to_complex(facets)
        result: Dict[str, Any] = {
            "success": True,
            "dim": X.dim,
            "f_vector": list(cx.f_vector(X)),
            "euler_characteristic": cx.euler_characteristic(X),
            "pure": X.is_pure,
            "components": cx.connected_components(X),
            "neighbourliness": cx.neighbourliness(X) if not X.is_empty else 0,
            "facets": complex_to_facets(X),
        }
        if X.is_pure and X.dim >= 1:
            result["boundary_facets"] = complex_to_facets(cx.boundary_complex(X))
        return result

    async def induced_subcomplex(
        self,
        engine: TopologyEngine,
        facets: List[List[int]],
        vertices: List[int],
    ) -> Dict[str, Any]:
        """The faces of the complex contained in the given vertex subset."""
        X = facets_to_complex(facets)
        induced = cx.induced_subcomplex(X, vertices)
        return {
            "success": True,
            "vertices": sorted(set(vertices)),
            "facets": complex_to_facets(induced),
            "f_vector": list(cx.f_vector(induced)),
        }

    async def vertex_link(
        self,
        engine: TopologyEngine,
        facets: List[List[int]],
        face: List[int],
    ) -> Dict[str, Any]:
        """Link of a nonempty face."""
        X = facets_to_complex(facets)
        lk = cx.link(X, face)
        return {
            "success": True,
            "face": sorted(face),
            "facets": complex_to_facets(lk),
            "f_vector": list(cx.f_vector(lk)),
        }

    async def skeleton(
        self,
        engine: TopologyEngine,
        facets: List[List[int]],
        k: int,
    ) -> Dict[str, Any]:
        """Faces of dimension at most k."""
        skel = cx.skeleton(facets_to_complex(facets), k)
        return {"success": True, "k": k, "facets": complex_to_facets(skel)}

    async def boundary_complex(
        self,
        engine: TopologyEngine,
        facets: List[List[int]],
    ) -> Dict[str, Any]:
        """Closure of the ridges lying in exactly one facet of a pure complex."""
        boundary = cx.boundary_complex(facets_to_complex(facets))
        return {
            "success": True,
            "facets": complex_to_facets(boundary),
            "empty": boundary.is_empty,
        }
