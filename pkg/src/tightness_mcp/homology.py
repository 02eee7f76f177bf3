# src/tightness_mcp/homology.py
"""Simplicial chain complexes over a field, Betti numbers, and the injectivity of
maps induced by inclusions of induced subcomplexes."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

from .complex import (
    Simplex,
    SimplicialComplex,
    _subset_mask,
    component_vertex_sets,
    induced_by_mask,
)
from .engine import ComplexInputError, TopologyEngine, default_engine
from .linalg import (
    FieldSpec,
    Matrix,
    SparseVector,
    kernel_basis,
    kernel_of_bits,
    rank_of_bits,
    rank_of_vectors,
    subspace_intersection_dim,
)
from .models import BettiVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChainSpace:
    """Chain groups C_i(X; F) with the canonical face bases."""

    complex: SimplicialComplex
    field: FieldSpec

    def basis(self, i: int) -> Tuple[Simplex, ...]:
        return self.complex.faces[i] if 0 <= i <= self.complex.dim else ()

    def dimension(self, i: int) -> int:
        return len(self.basis(i))

    def index(self, i: int) -> Dict[Simplex, int]:
        """Position of each i-face in the basis of C_i."""
        return self.complex.face_index[i]


class _BoundaryColumns:
    """Boundary of every face, indexed by the positions of its facets one dimension down.

    Over 𝔽₂ columns are packed integers, otherwise sparse dictionaries.
    """

    def __init__(self, X: SimplicialComplex, field: FieldSpec):
        self.binary = field.is_binary
        self.field = field
        self.columns: List[list] = [[] for _ in X.faces]
        for i in range(1, X.dim + 1):
            below = X.face_index[i - 1]
            plus, minus = field.coerce(1), field.coerce(-1)
            layer = []
            for face in X.faces[i]:
                if self.binary:
                    bits = 0
                    for j in range(len(face)):
                        bits |= 1 << below[face[:j] + face[j + 1:]]
                    layer.append(bits)
                else:
                    layer.append({
                        below[face[:j] + face[j + 1:]]: plus if j % 2 == 0 else minus
                        for j in range(len(face))
                    })
            self.columns[i] = layer

    def rank(self, i: int, selected: Iterable[int]) -> int:
        cols = self.columns[i]
        if self.binary:
            return rank_of_bits(cols[j] for j in selected)
        return rank_of_vectors([cols[j] for j in selected], self.field)


@lru_cache(maxsize=256)
def _boundary_columns(X: SimplicialComplex, field: FieldSpec) -> _BoundaryColumns:
    return _BoundaryColumns(X, field)


def boundary_matrix(X: SimplicialComplex, i: int, field: FieldSpec) -> Matrix:
    """Matrix of ∂_i: C_i → C_{i-1}; the face omitting v_j gets sign (−1)^j."""
    if not 0 <= i <= X.dim:
        raise ComplexInputError(f"Boundary degree {i} outside 0..{X.dim}")
    chains = ChainSpace(X, field)
    if i == 0:
        return Matrix.zeros(0, chains.dimension(0), field)
    below = chains.index(i - 1)
    entries: dict = {}
    for c, face in enumerate(chains.basis(i)):
        for j in range(len(face)):
            entries.setdefault(below[face[:j] + face[j + 1:]], {})[c] = (-1) ** j
    return Matrix(chains.dimension(i - 1), chains.dimension(i), field, entries)


def boundary_squared_vanishes(X: SimplicialComplex, field: FieldSpec) -> bool:
    """∂_i ∘ ∂_{i+1} = 0 in every degree."""
    return all(
        boundary_matrix(X, i, field).multiply(boundary_matrix(X, i + 1, field)).is_zero()
        for i in range(1, X.dim)
    )


def _selected(X: SimplicialComplex, mask: int) -> List[List[int]]:
    return [[j for j, m in enumerate(masks) if not m & ~mask] for masks in X.face_masks]


def reduced_betti_of_mask(X: SimplicialComplex, mask: int, field: FieldSpec) -> Tuple[int, ...]:
    """β̃_0..β̃_dim of X[mask], computed from two ranks per degree."""
    dim = X.dim
    if dim < 0 or not mask & X.vertex_mask:
        return (0,) * (dim + 1)
    data = _boundary_columns(X, field)
    selected = _selected(X, mask)
    ranks = [0] * (dim + 2)
    for i in range(1, dim + 1):
        if selected[i]:
            ranks[i] = data.rank(i, selected[i])
    betti = [len(selected[i]) - ranks[i] - ranks[i + 1] for i in range(dim + 1)]
    betti[0] -= 1
    return tuple(betti)


def reduced_betti(
    X: SimplicialComplex,
    mask: int,
    field: FieldSpec,
    engine: Optional[TopologyEngine] = None,
) -> Tuple[int, ...]:
    """Memoized reduced Betti numbers of the induced subcomplex X[mask]."""
    engine = engine or default_engine()
    key = (X.fingerprint, mask & X.vertex_mask, field.characteristic)
    return engine.memo.get_or_compute(key, lambda: reduced_betti_of_mask(X, mask, field))


def betti_vector(
    X: SimplicialComplex,
    field: Optional[FieldSpec] = None,
    reduced: bool = False,
    engine: Optional[TopologyEngine] = None,
) -> BettiVector:
    """β_i = dim ker ∂_i − rank ∂_{i+1}; the reduced variant augments degree 0."""
    engine = engine or default_engine()
    field = engine.resolve_field(field)
    values = list(reduced_betti(X, X.vertex_mask, field, engine))
    if values and not reduced:
        values[0] += 1
    return BettiVector(values=tuple(values), reduced=reduced, field=field.name)


class InclusionOracle:
    """Decides injectivity of H_i(X[A]) → H_i(X) for many subsets A of one complex."""

    def __init__(self, X: SimplicialComplex, field: FieldSpec, engine: Optional[TopologyEngine] = None):
        self.X = X
        self.field = field
        self.engine = engine or default_engine()
        self._data = _boundary_columns(X, field)
        self._component_of = {
            v: n for n, comp in enumerate(component_vertex_sets(X)) for v in comp
        }
        self._betti = list(reduced_betti(X, X.vertex_mask, field, self.engine))
        if self._betti:
            self._betti[0] += 1
        self._boundaries: dict = {}
        self._boundary_ranks: dict = {}

    def _all_boundaries(self, i: int):
        """Spanning family of B_i(X) and its rank."""
        if i not in self._boundaries:
            cols = list(self._data.columns[i + 1]) if i + 1 <= self.X.dim else []
            self._boundaries[i] = cols
            self._boundary_ranks[i] = self._data.rank(i + 1, range(len(cols))) if cols else 0
        return self._boundaries[i], self._boundary_ranks[i]

    def injective(self, mask: int, i: int) -> bool:
        X = self.X
        if not mask or i < 0 or i > X.dim:
            return True
        if i == 0:
            seen = set()
            for comp in component_vertex_sets(induced_by_mask(X, mask)):
                owner = self._component_of[comp[0]]
                if owner in seen:
                    return False
                seen.add(owner)
            return True
        if reduced_betti(X, mask, self.field, self.engine)[i] == 0:
            return True
        if self._betti[i] == 0:
            return False
        selected = _selected(X, mask)
        cycles_cols = [self._data.columns[i][j] for j in selected[i]]
        upper = selected[i + 1] if i + 1 <= X.dim else []
        boundaries, boundary_rank = self._all_boundaries(i)
        if self._data.binary:
            cycles = []
            for tag in kernel_of_bits(cycles_cols):
                bits = 0
                while tag:
                    low = tag & -tag
                    bits |= 1 << selected[i][low.bit_length() - 1]
                    tag ^= low
                cycles.append(bits)
            local_boundary_rank = rank_of_bits(boundaries[j] for j in upper)
            overlap = len(cycles) + boundary_rank - rank_of_bits(cycles + boundaries)
            return overlap == local_boundary_rank
        cycles_sparse: List[SparseVector] = [
            {selected[i][p]: value for p, value in relation.items()}
            for relation in kernel_basis(cycles_cols, self.field)
        ]
        local_boundary_rank = rank_of_vectors([boundaries[j] for j in upper], self.field)
        overlap = subspace_intersection_dim(cycles_sparse, boundaries, self.field)
        return overlap == local_boundary_rank


def inclusion_injective(
    X: SimplicialComplex,
    A: Iterable[int],
    i: int,
    field: Optional[FieldSpec] = None,
    engine: Optional[TopologyEngine] = None,
) -> bool:
    """True iff H_i(X[A]; F) → H_i(X; F) is injective (unreduced H_0 in degree 0)."""
    engine = engine or default_engine()
    field = engine.resolve_field(field)
    mask = _subset_mask(X, A)
    return InclusionOracle(X, field, engine).injective(mask, i)
