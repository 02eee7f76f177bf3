# tests/test_complex.py
"""Tests for simplicial complexes and their combinatorial operations."""

import random

import pytest

from tightness_mcp.complex import (
    EMPTY,
    boundary_complex,
    cone,
    connected_components,
    f_vector,
    from_facets,
    induced_subcomplex,
    interior_faces,
    join,
    link,
    neighbourliness,
    relabel,
    skeleton,
)
from tightness_mcp.engine import ComplexInputError
from tightness_mcp.generators import (
    boundary_simplex,
    cyclic_sphere,
    join_ball,
    kuehnel_handle,
    random_complex,
    simplex_ball,
    stacked_ball,
)


class TestConstruction:
    """Test building complexes from facet lists."""

    def test_handle_body_face_counts(self, h2):
        """The five listed triangles close to f = (5, 10, 5)."""
        assert f_vector(h2) == (5, 10, 5)
        assert h2.dim == 2
        assert h2.is_pure

    def test_single_edge(self):
        """One edge gives two vertices and the edge."""
        X = from_facets([[0, 1]])
        assert X.face_set == {(0,), (1,), (0, 1)}

    def test_empty_input(self):
        """No facets give the empty complex of dimension -1."""
        X = from_facets([])
        assert X == EMPTY
        assert X.dim == -1
        assert f_vector(X) == ()

    def test_duplicates_and_order_ignored(self):
        """Vertex order and repeated facets do not matter."""
        assert from_facets([[2, 1, 0], [0, 1, 2], [1, 2, 3]]) == from_facets([[0, 1, 2], [1, 2, 3]])

    @pytest.mark.parametrize("bad", [[[0, 64]], [[-1, 2]], [["a", 1]], [[]]])
    def test_bad_facets(self, bad):
        """Labels outside 0..63, non-integers and empty facets raise ComplexInputError."""
        with pytest.raises(ComplexInputError):
            from_facets(bad)

    def test_rebuild_from_facets_is_identity(self):
        """Rebuilding from the facet list reproduces the complex exactly."""
        for seed in range(10):
            X = random_complex(8, 2, "1/3", seed)
            assert from_facets(X.facets) == X

    def test_fingerprint_is_canonical(self, h2):
        """Equal complexes share a fingerprint and hash."""
        again = from_facets(reversed(h2.facets))
        assert again.fingerprint == h2.fingerprint
        assert hash(again) == hash(h2)

    def test_cyclic_sphere_face_counts(self):
        """∂C(6, 4) has f = (6, 15, 18, 9)."""
        assert f_vector(cyclic_sphere(6, 3)) == (6, 15, 18, 9)

    def test_tetrahedron_boundary(self, tetra_boundary):
        """∂Δ³ has f = (4, 6, 4)."""
        assert f_vector(tetra_boundary) == (4, 6, 4)


class TestInducedAndLinks:
    """Test induced subcomplexes, links and skeleta."""

    def test_full_and_empty_subsets(self, h2):
        """X[V] = X and X[∅] is empty."""
        assert induced_subcomplex(h2, h2.vertices) == h2
        assert induced_subcomplex(h2, []).is_empty

    def test_induced_edge(self, h2):
        """H(2)[{0, 2}] is the edge 02."""
        assert induced_subcomplex(h2, [0, 2]).facets == ((0, 2),)

    def test_subset_outside_vertex_set(self, h2):
        """Subsets with foreign vertices are rejected."""
        with pytest.raises(ComplexInputError):
            induced_subcomplex(h2, [0, 9])

    def test_induced_of_induced(self):
        """X[A][B] = X[B] for B ⊆ A."""
        rng = random.Random(3)
        X = random_complex(9, 2, "1/2", 4)
        for _ in range(20):
            A = rng.sample(X.vertices, 6)
            B = rng.sample(A, 3)
            assert induced_subcomplex(induced_subcomplex(X, A), B) == induced_subcomplex(X, B)

    def test_vertex_link_in_handle_body(self, h2):
        """The link of 0 in H(2) is the path 2-1-4-3."""
        lk = link(h2, [0])
        assert set(lk.faces[1]) == {(1, 2), (1, 4), (3, 4)}
        assert lk.vertices == (1, 2, 3, 4)

    def test_vertex_link_in_sphere(self, tetra_boundary):
        """Every vertex link of ∂Δ³ is a 3-cycle."""
        for v in tetra_boundary.vertices:
            lk = link(tetra_boundary, [v])
            assert f_vector(lk) == (3, 3)

    def test_edge_link(self, h2):
        """The link of the edge 01 in H(2) is two points."""
        assert link(h2, [0, 1]).facets == ((2,), (4,))

    def test_link_of_non_face(self, c5):
        """Linking a non-face raises ComplexInputError."""
        with pytest.raises(ComplexInputError):
            link(c5, [0, 2])

    def test_link_commutes_with_induced(self):
        """lk(x, X)[A∖x] = lk(x, X[A]) for A containing x."""
        rng = random.Random(8)
        X = random_complex(8, 2, "2/5", 2)
        for _ in range(20):
            A = rng.sample(X.vertices, 5)
            x = A[0]
            lhs_link = link(X, [x])
            keep = [v for v in A if v != x and v in lhs_link.vertex_set]
            lhs = induced_subcomplex(lhs_link, keep)
            assert lhs == link(induced_subcomplex(X, A), [x])

    def test_skeleta(self, h2, tetra_boundary):
        """Skel_1 of H(2) is K5; Skel_0 is the vertex set; Skel_{-1} is empty."""
        assert f_vector(skeleton(h2, 1)) == (5, 10)
        assert f_vector(skeleton(tetra_boundary, 1)) == (4, 6)
        assert skeleton(h2, 0).facets == tuple((v,) for v in range(5))
        assert skeleton(h2, -1).is_empty
        with pytest.raises(ComplexInputError):
            skeleton(h2, -2)

    @pytest.mark.parametrize("j", [-1, 0, 1, 2, 3])
    @pytest.mark.parametrize("k", [-1, 0, 1, 2, 3])
    def test_skeleton_of_skeleton(self, j, k, h2, torus):
        """Skel_k(Skel_j(X)) = Skel_{min(j, k)}(X)."""
        for X in (h2, torus):
            assert skeleton(skeleton(X, j), k) == skeleton(X, min(j, k))


class TestBoundaryConeJoin:
    """Test boundary complexes, cones and joins."""

    def test_boundary_of_simplex(self):
        """∂(Δ³) = ∂Δ³."""
        assert boundary_complex(simplex_ball(3)) == boundary_simplex(2)

    def test_boundary_of_handle_body(self, h2):
        """∂H(2) is the pentagon 0-2-4-1-3-0."""
        boundary = boundary_complex(h2)
        assert set(boundary.facets) == {(0, 2), (2, 4), (1, 4), (1, 3), (0, 3)}

    def test_boundary_of_two_triangles(self):
        """∂{012, 123} is the 4-cycle 0-1-3-2."""
        boundary = boundary_complex(from_facets([[0, 1, 2], [1, 2, 3]]))
        assert set(boundary.facets) == {(0, 1), (0, 2), (1, 3), (2, 3)}

    def test_closed_complex_has_empty_boundary(self, tetra_boundary):
        """A closed surface has no boundary."""
        assert boundary_complex(tetra_boundary).is_empty

    def test_boundary_needs_pure_input(self):
        """Non-pure complexes are rejected."""
        with pytest.raises(ComplexInputError):
            boundary_complex(from_facets([[0, 1, 2], [2, 3]]))

    @pytest.mark.parametrize(
        "B",
        [
            simplex_ball(2),
            simplex_ball(4),
            kuehnel_handle(3),
            join_ball(2, 2),
            stacked_ball(3, 6, seed=2),
            from_facets([[0, 1, 2], [1, 2, 3]]),
        ],
    )
    def test_boundary_facets_drop_one_dimension(self, B):
        """Every facet of ∂B has dimension dim B − 1."""
        boundary = boundary_complex(B)
        assert boundary.is_pure
        assert all(len(facet) == B.dim for facet in boundary.facets)

    def test_interior_faces_of_fan(self, fan):
        """The apex and the spokes are the interior of the fan disc."""
        interior = interior_faces(fan)
        assert (0,) in interior
        assert (0, 1) in interior
        assert all(len(f) > 1 or f == (0,) for f in interior)

    def test_cones(self, tetra_boundary):
        """Cone face counts and the apex precondition."""
        assert cone(EMPTY, 0).facets == ((0,),)
        three_cycle = boundary_simplex(1)
        assert f_vector(cone(three_cycle, 7)) == (4, 6, 3)
        assert f_vector(cone(tetra_boundary, 4)) == (5, 10, 10, 4)
        with pytest.raises(ComplexInputError):
            cone(three_cycle, 0)

    def test_join_of_triangle_boundaries(self):
        """∂Δ² ∗ ∂Δ² is the 6-vertex 3-sphere with nine facets."""
        S = join(boundary_simplex(1), relabel(boundary_simplex(1), 3))
        assert f_vector(S) == (6, 15, 18, 9)
        assert len(S.facets) == 9

    def test_join_with_point_is_cone(self, c5):
        """Joining with a point is coning."""
        assert join(c5, from_facets([[9]])) == cone(c5, 9)

    def test_join_needs_disjoint_labels(self, c5):
        """Overlapping labels are rejected."""
        with pytest.raises(ComplexInputError):
            join(c5, c5)


class TestConnectivity:
    """Test components and neighbourliness."""

    def test_components(self, h2):
        """H(2) is connected, two triangles are not, the empty complex has none."""
        assert connected_components(h2) == 1
        assert connected_components(from_facets([[0, 1, 2], [3, 4, 5]])) == 2
        assert connected_components(EMPTY) == 0

    def test_neighbourliness(self, h2, c5):
        """H(2) is 2-neighbourly, C5 is not, ∂Δ^{d+1} is (d+1)-neighbourly."""
        assert neighbourliness(h2) == 2
        assert neighbourliness(c5) == 1
        for d in range(1, 5):
            assert neighbourliness(boundary_simplex(d)) == d + 1

    @pytest.mark.parametrize("a, b", [(2, 2), (4, 2)])
    def test_neighbourliness_of_sphere_joins(self, a, b):
        """∂Δ^a ∗ ∂Δ^b is b-neighbourly for a ≥ b: the vertices of ∂Δ^b span no face."""
        S = join(boundary_simplex(a - 1), relabel(boundary_simplex(b - 1), a + 1))
        assert neighbourliness(S) == 2

    def test_neighbourliness_of_simplex(self):
        """The full simplex on n vertices is n-neighbourly."""
        assert neighbourliness(simplex_ball(3)) == 4

    def test_neighbourliness_of_empty(self):
        """Undefined for the empty complex."""
        with pytest.raises(ComplexInputError):
            neighbourliness(EMPTY)
