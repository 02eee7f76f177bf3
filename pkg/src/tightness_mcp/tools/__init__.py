"""Public API surfaces for the tightness tool classes.

Every coroutine on these classes takes the shared ``TopologyEngine`` first;
``tightness_mcp.server`` registers them as FastMCP tools.
"""

from .export import ExportApi
from .generators import GeneratorApi
from .homology import HomologyApi
from .invariants import InvariantsApi
from .structure import ComplexApi
from .tightness import TightnessApi

__all__ = [
    "ComplexApi",
    "ExportApi",
    "GeneratorApi",
    "HomologyApi",
    "InvariantsApi",
    "TightnessApi",
]
