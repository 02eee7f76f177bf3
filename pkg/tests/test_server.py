# tests/test_server.py
"""Tests for tool registration and engine injection in the MCP server."""

import inspect

import pytest

from tightness_mcp import server
from tightness_mcp.engine import TopologyEngine
from tightness_mcp.tools import (
    ComplexApi,
    ExportApi,
    GeneratorApi,
    HomologyApi,
    InvariantsApi,
    TightnessApi,
)

API_CLASSES = (ComplexApi, HomologyApi, InvariantsApi, TightnessApi, GeneratorApi, ExportApi)


class TestToolWrapper:
    """Test the wrapper that exposes tool-class coroutines."""

    def test_engine_is_hidden_from_signature(self):
        """Tools advertise facets and options only."""
        wrapper = server._make_tool_wrapper(InvariantsApi().sigma_vector)
        params = inspect.signature(wrapper).parameters
        assert "engine" not in params
        assert "facets" in params
        assert wrapper.__name__ == "sigma_vector"

    @pytest.mark.asyncio
    async def test_engine_is_injected(self, monkeypatch):
        """The lifespan engine and its settings reach the tool."""
        monkeypatch.setattr(server, "_engine", TopologyEngine(field="q"))
        wrapper = server._make_tool_wrapper(InvariantsApi().sigma_vector)
        result = await wrapper(facets=[[0, 1], [1, 2], [0, 2]])

        assert result["success"] is True
        assert result["field"] == "q"
        assert result["values"] == ["0", "1"]

    def test_no_engine_outside_server(self, monkeypatch):
        monkeypatch.setattr(server, "_engine", None)
        with pytest.raises(RuntimeError, match="not initialised"):
            server.get_engine()


class TestRegistration:
    """Test the tool names contributed by the tool classes."""

    def test_tool_names_are_unique(self):
        names = [
            name
            for cls in API_CLASSES
            for name, member in inspect.getmembers(cls)
            if not name.startswith("_") and inspect.iscoroutinefunction(member)
        ]
        assert len(names) == len(set(names))
        assert {"tightness", "mu_vector", "generate_complex", "property_battery"} <= set(names)
