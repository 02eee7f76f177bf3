# src/tightness_mcp/tools/generators.py
"""Generator tool for the example families."""

from typing import Any, Dict, Optional

from .. import generators
from ..engine import TopologyEngine
from .structure import complex_to_facets


class GeneratorApi:
    """Tools for building example complexes."""

    async def generate_complex(
        self,
        engine: TopologyEngine,
        family: str,
        params: Optional[Dict[str, Any]] = None,
        seed: Optional[int] = None,
    ) -> Dict[str, Any]:
        """Build simplex, boundary-simplex, handle, handle-boundary, stacked-ball, join-ball,
        cyclic, random or csaszar; seeded families fall back to the engine seed."""
        seed = engine.config.seed if seed is None else seed
        X, spec = generators.generate(family, params or {}, seed)
        return {
            "success": True,
            "generator": spec.model_dump(mode="json"),
            "facets": complex_to_facets(X),
            "num_vertices": X.num_vertices,
            "dim": X.dim,
        }
