# src/tightness_mcp/tools/tightness.py
"""Tightness, Morse-type inequality and Conjecture B tools."""

from typing import Any, Dict, List, Optional

from .. import tightness
from ..engine import PreconditionError, TopologyEngine
from .structure import facets_to_complex


class TightnessApi:
    """Tools for deciding and explaining tightness."""

    async def tightness(
        self,
        engine: TopologyEngine,
        facets: List[List[int]],
        method: str = "mu",
        field: Optional[str] = None,
    ) -> Dict[str, Any]:
        """Decide tightness with the mu-vector, the definition, or both."""
        X = facets_to_complex(facets)
        if method == "mu":
            report = tightness.tight_by_mu(X, field, engine)
        elif method == "direct":
            report = tightness.tight_by_definition(X, field, engine)
        elif method == "both":
            report = tightness.tight_by_both(X, field, engine)
        else:
            raise PreconditionError(f"Unknown method {method!r}; use mu, direct or both")
        return {"success": True, "verdict": report.verdict, **report.model_dump(mode="json")}

    async def morse_inequalities(
        self,
        engine: TopologyEngine,
        facets: List[List[int]],
        field: Optional[str] = None,
    ) -> Dict[str, Any]:
        """Per-degree Morse-type inequalities between μ and β with their equality cases."""
        report = tightness.morse_report(facets_to_complex(facets), field, engine)
        return {"success": True, **report.model_dump(mode="json")}

    async def conjecture_b(
        self,
        engine: TopologyEngine,
        facets: List[List[int]],
        k: int,
        field: Optional[str] = None,
    ) -> Dict[str, Any]:
        """Compare σ_{k−1} with the conjectured closed formula (reported, not asserted)."""
        report = tightness.conjecture_b_compare(facets_to_complex(facets), k, field, engine)
        return {"success": True, **report.model_dump(mode="json")}
