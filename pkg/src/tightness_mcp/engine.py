# src/tightness_mcp/engine.py
"""Topology engine: run configuration, error types and the Betti memo table."""

from __future__ import annotations

import hashlib
import logging
import os
from collections import OrderedDict
from enum import Enum
from typing import Any, Callable, Dict, Hashable, Optional, TypeVar

from pydantic import BaseModel, ConfigDict, Field, field_validator

logger = logging.getLogger(__name__)

T = TypeVar("T")


class TopologyError(Exception):
    """Base error for every failure raised by the engine."""
    pass


class ComplexInputError(TopologyError):
    """Malformed complex, out-of-range label, or a subset/face not in the complex."""
    pass


class FieldError(TopologyError):
    """Bad coefficient field or arithmetic request (non-prime p, zero denominator)."""
    pass


class ShapeError(TopologyError):
    """Matrix or vector shapes do not fit together."""
    pass


class PreconditionError(TopologyError):
    """An operation was called outside its documented domain."""
    pass


class SweepLimitError(TopologyError):
    """A subset sweep would exceed the configured vertex limit."""

    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(
            f"{what} needs a sweep over {size} vertices, above the limit of {limit}; "
            "raise it with --limit"
        )


class InvariantViolation(TopologyError):
    """A proven identity or inequality failed; indicates an engine bug."""
    pass


class MuConvention(str, Enum):
    """Numerator convention of the mu-vector."""

    CORRECTED = "corrected"
    RAW = "raw"


class RunConfig(BaseModel):
    """Settings shared by every computation of one run."""

    model_config = ConfigDict(frozen=True)

    field: str = "f2"
    method: str = "mu"
    sigma_limit: int = Field(default=20, ge=1, le=64)
    direct_limit: int = Field(default=16, ge=1, le=64)
    manifold_limit: int = Field(default=64, ge=1, le=64)
    seed: Optional[int] = Field(default=None, ge=0, lt=2**64)
    json_output: bool = False
    mu_convention: MuConvention = MuConvention.CORRECTED
    cache_enabled: bool = True
    cache_max_entries: int = Field(default=200_000, ge=1)

    @field_validator("field")
    @classmethod
    def _check_field(cls, value: str) -> str:
        from .linalg import FieldSpec

        return FieldSpec.parse(value).name

    @field_validator("method")
    @classmethod
    def _check_method(cls, value: str) -> str:
        if value not in {"mu", "direct", "both"}:
            raise ValueError(f"Unknown tightness method: {value}")
        return value


def load_engine_config(**overrides: Any) -> RunConfig:
    """Load engine configuration from environment variables, then apply overrides."""
    def _bool(value: str, default: bool) -> bool:
        try:
            return value.lower() in {"1", "true", "yes", "on"}
        except AttributeError:
            return default

    values: Dict[str, Any] = {
        "field": os.environ.get("TIGHTNESS_FIELD", "f2"),
        "sigma_limit": os.environ.get("TIGHTNESS_SIGMA_LIMIT", "20"),
        "direct_limit": os.environ.get("TIGHTNESS_DIRECT_LIMIT", "16"),
        "manifold_limit": os.environ.get("TIGHTNESS_MANIFOLD_LIMIT", "64"),
        "mu_convention": os.environ.get("TIGHTNESS_MU_CONVENTION", "corrected"),
        "cache_enabled": _bool(os.environ.get("TIGHTNESS_CACHE_ENABLED", "true"), True),
        "cache_max_entries": os.environ.get("TIGHTNESS_CACHE_MAX_ENTRIES", "200000"),
    }
    values.update({key: value for key, value in overrides.items() if value is not None})
    return RunConfig(**values)


class BettiMemo:
    """Bounded LRU map from (complex, vertex mask, field) to reduced Betti vectors."""

    def __init__(self, enabled: bool = True, max_entries: int = 200_000):
        self.enabled = enabled
        self.max_entries = max(1, max_entries)
        self._entries: OrderedDict[Hashable, Any] = OrderedDict()
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self._entries)

    def _check(self, key: Hashable) -> Optional[Any]:
        if not self.enabled:
            return None
        value = self._entries.get(key)
        if value is None:
            return None
        self._entries.move_to_end(key)
        return value

    def _evict_lru_if_needed(self) -> None:
        """Evict least recently used entries to respect max size."""
        while len(self._entries) > self.max_entries:
            self._entries.popitem(last=False)

    def _update(self, key: Hashable, value: Any) -> None:
        if not self.enabled:
            return
        self._entries[key] = value
        self._entries.move_to_end(key)
        self._evict_lru_if_needed()

    def get_or_compute(self, key: Hashable, compute: Callable[[], T]) -> T:
        """Return the memoized value for key, computing and storing it on a miss."""
        cached = self._check(key)
        if cached is not None:
            self.hits += 1
            return cached
        self.misses += 1
        value = compute()
        self._update(key, value)
        return value

    def clear(self) -> None:
        """Drop all entries and reset statistics."""
        self._entries.clear()
        self.hits = 0
        self.misses = 0

    def stats(self) -> Dict[str, int]:
        return {"entries": len(self._entries), "hits": self.hits, "misses": self.misses}


def fingerprint(text: str) -> str:
    """Stable digest of a canonical text form, used in memo keys."""
    return hashlib.md5(text.encode()).hexdigest()


class TopologyEngine:
    """Shared state for computations: configuration plus the Betti memo."""

    def __init__(self, config: Optional[RunConfig] = None, **overrides: Any):
        self.config = config if config is not None else load_engine_config(**overrides)
        self.memo = BettiMemo(
            enabled=self.config.cache_enabled,
            max_entries=self.config.cache_max_entries,
        )
        logger.info(
            "Engine ready: field=%s sigma_limit=%s direct_limit=%s convention=%s cache=%s",
            self.config.field,
            self.config.sigma_limit,
            self.config.direct_limit,
            self.config.mu_convention.value,
            self.config.cache_enabled,
        )

    @property
    def field(self):
        """Default coefficient field as a FieldSpec."""
        from .linalg import FieldSpec

        return FieldSpec.parse(self.config.field)

    def resolve_field(self, field: Any = None):
        """Turn None, a field name or a FieldSpec into a FieldSpec."""
        from .linalg import FieldSpec

        if field is None:
            return self.field
        if isinstance(field, FieldSpec):
            return field
        return FieldSpec.parse(str(field))

    def check_sweep(self, what: str, size: int, limit: Optional[int] = None) -> None:
        """Raise SweepLimitError if a sweep over size vertices is not allowed."""
        limit = self.config.sigma_limit if limit is None else limit
        if size > limit:
            raise SweepLimitError(what, size, limit)

    def clear_cache(self) -> None:
        """Clear all memoized Betti vectors."""
        self.memo.clear()


_default_engine: Optional[TopologyEngine] = None


def default_engine() -> TopologyEngine:
    """Engine used when a caller does not pass one explicitly."""
    global _default_engine
    if _default_engine is None:
        _default_engine = TopologyEngine()
    return _default_engine
