"""FastMCP-backed server for the tightness tools (stdio transport)."""
from __future__ import annotations

import functools
import inspect
import logging
from contextlib import asynccontextmanager
from typing import Any, Callable, Optional, Tuple

from fastmcp import FastMCP

from . import __version__ as package_version
from .engine import TopologyEngine, load_engine_config
from .tools import (
    ComplexApi,
    ExportApi,
    GeneratorApi,
    HomologyApi,
    InvariantsApi,
    TightnessApi,
)

__all__ = [
    "mcp",
    "get_engine",
    "main",
]

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Engine lifecycle management
# ---------------------------------------------------------------------------
_engine: Optional[TopologyEngine] = None


def get_engine() -> TopologyEngine:
    """Return the active TopologyEngine or raise if not initialised."""
    if _engine is None:
        raise RuntimeError(
            "TopologyEngine not initialised. Tools must be called through the running MCP server."
        )
    return _engine


@asynccontextmanager
async def lifespan(server: FastMCP):
    """Create the shared engine for the server's lifetime."""
    global _engine

    config = load_engine_config()
    logger.info(
        "Starting tightness MCP server with field=%s sigma_limit=%s direct_limit=%s convention=%s",
        config.field,
        config.sigma_limit,
        config.direct_limit,
        config.mu_convention.value,
    )
    _engine = TopologyEngine(config)

    try:
        yield
    finally:
        if _engine is not None:
            logger.info("Shutting down; memo stats %s", _engine.memo.stats())
            _engine.clear_cache()
            _engine = None


# ---------------------------------------------------------------------------
# FastMCP initialisation
# ---------------------------------------------------------------------------
mcp = FastMCP(
    name="tightness-mcp",
    version=package_version,
    lifespan=lifespan,
)

_complex_api = ComplexApi()
_homology_api = HomologyApi()
_invariants_api = InvariantsApi()
_tightness_api = TightnessApi()
_generator_api = GeneratorApi()
_export_api = ExportApi()


def _make_tool_wrapper(method: Callable[..., Any]) -> Callable[..., Any]:
    """Expose a tool-class coroutine as a tool taking only facet lists and options.

    The engine argument is dropped from the advertised signature and filled in
    from the lifespan engine, so every tool call shares one Betti memo.
    """

    @functools.wraps(method)
    async def wrapper(*args: Any, **kwargs: Any) -> Any:
        engine = get_engine()
        return await method(engine, *args, **kwargs)

    signature = inspect.signature(method)
    params = list(signature.parameters.values())[1:]
    wrapper.__signature__ = signature.replace(parameters=params)  # type: ignore[attr-defined]
    return wrapper


def register_all_api_methods() -> None:
    """Register the public coroutines of the six tool classes under their own names.

    Names are unique across `ComplexApi`, `HomologyApi`, `InvariantsApi`,
    `TightnessApi`, `GeneratorApi` and `ExportApi`; a repeat is skipped.
    """
    api_instances: Tuple[Any, ...] = (
        _complex_api,
        _homology_api,
        _invariants_api,
        _tightness_api,
        _generator_api,
        _export_api,
    )
    registered_names: set[str] = set()

    for api in api_instances:
        for name in dir(api):
            if name.startswith("_"):
                continue
            method = getattr(api, name)
            if not inspect.iscoroutinefunction(method):
                continue
            if name in registered_names:
                logger.debug("Tool already registered: %s", name)
                continue
            wrapper = _make_tool_wrapper(method)
            mcp.tool(name=name)(wrapper)
            registered_names.add(name)
            logger.debug("Registered tool: %s", name)


register_all_api_methods()


# ---------------------------------------------------------------------------
# CLI entry point
# ---------------------------------------------------------------------------
def main() -> None:
    import argparse

    parser = argparse.ArgumentParser(
        description="Tightness MCP Server (stdio)",
        epilog="Environment overrides: TIGHTNESS_FIELD, TIGHTNESS_SIGMA_LIMIT, TIGHTNESS_DIRECT_LIMIT, "
        "TIGHTNESS_MANIFOLD_LIMIT, TIGHTNESS_MU_CONVENTION, TIGHTNESS_CACHE_ENABLED, "
        "TIGHTNESS_CACHE_MAX_ENTRIES",
    )
    parser.add_argument(
        "--verbose",
        action="store_true",
        help="Enable verbose (DEBUG level) logging",
    )

    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO)
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    logger.info("Starting tightness MCP server (transport=stdio)")

    try:
        mcp.run(transport="stdio")
    except KeyboardInterrupt:  # pragma: no cover - user interaction
        logger.info("Server interrupted by user")
    except Exception:  # pragma: no cover - unexpected runtime failure
        logger.exception("Server encountered an unrecoverable error")
        raise


if __name__ == "__main__":  # pragma: no cover
    main()
