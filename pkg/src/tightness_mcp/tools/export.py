# src/tightness_mcp/tools/export.py
"""Export and property-battery tools."""

import json
from typing import Any, Dict, List, Optional

from ..battery import run_battery
from ..cli import serialize_complex
from ..complex import f_vector
from ..engine import ComplexInputError, TopologyEngine
from .structure import complex_to_facets, facets_to_complex


class ExportApi:
    """Tools for exporting complexes and checking their proven properties."""

    @staticmethod
    def _markdown_faces(X) -> str:
        lines = ["| dim | count | faces |", "|---|---|---|"]
        for i, layer in enumerate(X.faces):
            faces = " ".join("{" + ",".join(map(str, f)) + "}" for f in layer)
            lines.append(f"| {i} | {len(layer)} | {faces} |")
        return "\n".join(lines) + "\n"

    async def export_complex(
        self,
        engine: TopologyEngine,
        facets: List[List[int]],
        format: str = "cplx",
        name: Optional[str] = None,
    ) -> str:
        """Export a complex as .cplx text, JSON, or a markdown table of faces."""
        X = facets_to_complex(facets)
        if format == "cplx":
            return serialize_complex(X, {"name": name} if name else None)
        elif format == "json":
            return json.dumps(
                {"name": name, "f_vector": list(f_vector(X)), "facets": complex_to_facets(X)},
                indent=2,
            )
        elif format == "markdown":
            return self._markdown_faces(X)
        else:
            raise ComplexInputError(f"Unsupported format: {format}")

    async def property_battery(
        self,
        engine: TopologyEngine,
        facets: List[List[int]],
        field: Optional[str] = None,
    ) -> Dict[str, Any]:
        """Run the Euler, ∂²=0, Morse-inequality, duality and neighbourliness checks."""
        report = run_battery(facets_to_complex(facets), field, engine)
        return {"success": True, "passed": report.passed, **report.model_dump(mode="json")}
