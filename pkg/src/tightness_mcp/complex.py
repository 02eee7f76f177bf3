# src/tightness_mcp/complex.py
"""Finite simplicial complexes and the combinatorial operations on them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from .engine import ComplexInputError, fingerprint

MAX_VERTEX_LABEL = 63

Simplex = Tuple[int, ...]


def as_simplex(vertices: Iterable[int]) -> Simplex:
    """Sorted, duplicate-free tuple of valid vertex labels."""
    labels = set()
    for v in vertices:
        if isinstance(v, bool) or not isinstance(v, int):
            raise ComplexInputError(f"Vertex label must be an integer, got {v!r}")
        if not 0 <= v <= MAX_VERTEX_LABEL:
            raise ComplexInputError(f"Vertex label {v} outside 0..{MAX_VERTEX_LABEL}")
        labels.add(v)
    return tuple(sorted(labels))


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def vertices_of(mask: int) -> Simplex:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True, eq=True)
class SimplicialComplex:
    """A family of faces closed under nonempty subsets.

    ``faces[i]`` holds the i-dimensional faces in lexicographic order. The
    empty simplex is never stored; the empty complex has ``faces == ()``.
    """

    faces: Tuple[Tuple[Simplex, ...], ...] = ()

    def __hash__(self) -> int:
        return hash(self.fingerprint)

    @cached_property
    def fingerprint(self) -> str:
        return fingerprint(self.to_text())

    @property
    def dim(self) -> int:
        return len(self.faces) - 1

    @cached_property
    def vertex_set(self) -> FrozenSet[int]:
        return frozenset(f[0] for f in self.faces[0]) if self.faces else frozenset()

    @cached_property
    def vertices(self) -> Simplex:
        return tuple(sorted(self.vertex_set))

    @cached_property
    def vertex_mask(self) -> int:
        return mask_of(self.vertex_set)

    @property
    def num_vertices(self) -> int:
        return len(self.vertex_set)

    @cached_property
    def face_masks(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(mask_of(f) for f in layer) for layer in self.faces)

    @cached_property
    def face_set(self) -> FrozenSet[Simplex]:
        return frozenset(f for layer in self.faces for f in layer)

    @cached_property
    def face_index(self) -> Tuple[Dict[Simplex, int], ...]:
        return tuple({f: j for j, f in enumerate(layer)} for layer in self.faces)

    @cached_property
    def facets(self) -> Tuple[Simplex, ...]:
        """Maximal faces, ordered by dimension then lexicographically."""
        covered = set()
        for layer in self.faces[1:]:
            for face in layer:
                covered.update(combinations(face, len(face) - 1))
        return tuple(f for layer in self.faces for f in layer if f not in covered)

    @property
    def is_empty(self) -> bool:
        return not self.faces

    @property
    def is_pure(self) -> bool:
        return all(len(f) == self.dim + 1 for f in self.facets)

    def __contains__(self, face: Iterable[int]) -> bool:
        return tuple(sorted(face)) in self.face_set

    def __len__(self) -> int:
        return sum(len(layer) for layer in self.faces)

    def to_text(self) -> str:
        """Canonical facet-per-line text."""
        return "".join(" ".join(map(str, f)) + "\n" for f in sorted(self.facets))

    def __repr__(self) -> str:
        return f"SimplicialComplex(dim={self.dim}, f={list(f_vector(self))})"


def _from_closed_faces(faces: Iterable[Simplex]) -> SimplicialComplex:
    """Build from a family already known to be closed under subsets."""
    layers: Dict[int, set] = {}
    for face in faces:
        if face:
            layers.setdefault(len(face) - 1, set()).add(face)
    top = max(layers, default=-1)
    return SimplicialComplex(tuple(tuple(sorted(layers.get(i, ()))) for i in range(top + 1)))


def from_facets(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Close a list of vertex sets under taking nonempty subsets."""
    faces = set()
    for raw in facets:
        facet = as_simplex(raw)
        if not facet:
            raise ComplexInputError("Facets must be nonempty")
        if facet in faces:
            continue
        for size in range(1, len(facet) + 1):
            faces.update(combinations(facet, size))
    return _from_closed_faces(faces)


EMPTY = SimplicialComplex()


def f_vector(X: SimplicialComplex) -> Tuple[int, ...]:
    """Face counts (f_0, ..., f_dim)."""
    return tuple(len(layer) for layer in X.faces)


def euler_characteristic(X: SimplicialComplex) -> int:
    return sum((-1) ** i * f for i, f in enumerate(f_vector(X)))


def _subset_mask(X: SimplicialComplex, A: Iterable[int]) -> int:
    mask = mask_of(as_simplex(A))
    if mask & ~X.vertex_mask:
        missing = vertices_of(mask & ~X.vertex_mask)
        raise ComplexInputError(f"Vertices {list(missing)} are not in the complex")
    return mask


def induced_by_mask(X: SimplicialComplex, mask: int) -> SimplicialComplex:
    layers = []
    for layer, masks in zip(X.faces, X.face_masks):
        kept = tuple(f for f, m in zip(layer, masks) if not m & ~mask)
        if not kept:
            break
        layers.append(kept)
    return SimplicialComplex(tuple(layers))


def induced_subcomplex(X: SimplicialComplex, A: Iterable[int]) -> SimplicialComplex:
    """X[A]: the faces of X contained in A."""
    return induced_by_mask(X, _subset_mask(X, A))


def link(X: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """lk(σ, X): faces α disjoint from σ with α ∪ σ ∈ X."""
    sigma = as_simplex(sigma)
    if not sigma or sigma not in X.face_set:
        raise ComplexInputError(f"{list(sigma)} is not a face of the complex")
    s_mask = mask_of(sigma)
    faces = []
    for layer, masks in zip(X.faces[len(sigma):], X.face_masks[len(sigma):]):
        for f, m in zip(layer, masks):
            if m & s_mask == s_mask:
                faces.append(vertices_of(m & ~s_mask))
    return _from_closed_faces(faces)


def skeleton(X: SimplicialComplex, k: int) -> SimplicialComplex:
    """Skel_k(X): faces of dimension at most k."""
    if k < -1:
        raise ComplexInputError(f"Skeleton dimension must be at least -1, got {k}")
    return SimplicialComplex(X.faces[: k + 1])


def boundary_complex(X: SimplicialComplex) -> SimplicialComplex:
    """Closure of the ridges lying in exactly one facet of a pure complex."""
    if X.dim < 1:
        raise ComplexInputError("Boundary needs a pure complex of dimension at least 1")
    if not X.is_pure:
        raise ComplexInputError("Boundary is only defined for pure complexes")
    counts: Dict[Simplex, int] = {}
    for facet in X.faces[X.dim]:
        for ridge in combinations(facet, X.dim):
            counts[ridge] = counts.get(ridge, 0) + 1
    return from_facets(r for r, n in counts.items() if n == 1)


def cone(X: SimplicialComplex, apex: int) -> SimplicialComplex:
    """apex ∗ X."""
    (apex,) = as_simplex([apex])
    if apex in X.vertex_set:
        raise ComplexInputError(f"Apex {apex} is already a vertex")
    faces = [(apex,)]
    for f in X.face_set:
        faces.append(f)
        faces.append(tuple(sorted(f + (apex,))))
    return _from_closed_faces(faces)


def join(X: SimplicialComplex, Y: SimplicialComplex) -> SimplicialComplex:
    """X ∗ Y on disjoint vertex sets."""
    shared = X.vertex_set & Y.vertex_set
    if shared:
        raise ComplexInputError(f"Join needs disjoint labels; shared {sorted(shared)}")
    if X.is_empty:
        return Y
    if Y.is_empty:
        return X
    return from_facets(a + b for a in X.facets for b in Y.facets)


def one_skeleton_graph(X: SimplicialComplex) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(X.vertices)
    if X.dim >= 1:
        graph.add_edges_from(X.faces[1])
    return graph


def connected_components(X: SimplicialComplex) -> int:
    """Number of connected components of the 1-skeleton."""
    return nx.number_connected_components(one_skeleton_graph(X)) if not X.is_empty else 0


def component_vertex_sets(X: SimplicialComplex) -> List[Simplex]:
    """Vertex sets of the components, sorted by smallest vertex."""
    if X.is_empty:
        return []
    return sorted(tuple(sorted(c)) for c in nx.connected_components(one_skeleton_graph(X)))


def neighbourliness(X: SimplicialComplex) -> int:
    """Largest t with every t vertices spanning a face."""
    if X.is_empty:
        raise ComplexInputError("Neighbourliness of the empty complex is undefined")
    n = X.num_vertices
    fv = f_vector(X)
    t = 1
    while t < n and t < len(fv) and fv[t] == comb(n, t + 1):
        t += 1
    return t


def relabel(X: SimplicialComplex, offset: int) -> SimplicialComplex:
    """Shift every label by offset."""
    return from_facets([u + offset for u in f] for f in X.facets)


def interior_faces(X: SimplicialComplex, boundary: Optional[SimplicialComplex] = None) -> List[Simplex]:
    """Faces of X absent from its boundary, ordered by dimension then lexicographically."""
    boundary = boundary_complex(X) if boundary is None else boundary
    return [f for layer in X.faces for f in layer if f not in boundary.face_set]
