# tests/test_homology.py
"""Tests for chain complexes, Betti numbers and inclusion injectivity."""

import pytest

from tightness_mcp.complex import boundary_complex, cone, euler_characteristic, from_facets
from tightness_mcp.engine import ComplexInputError
from tightness_mcp.generators import (
    boundary_simplex,
    kuehnel_handle,
    random_complex,
    stacked_ball,
)
from tightness_mcp.homology import (
    ChainSpace,
    InclusionOracle,
    betti_vector,
    boundary_matrix,
    boundary_squared_vanishes,
    inclusion_injective,
    reduced_betti,
)
from tightness_mcp.invariants import submasks
from tightness_mcp.linalg import GF2, RATIONALS, FieldSpec, matrix_rank, subspace_intersection_dim

FIELDS = [RATIONALS, GF2, FieldSpec(3)]


class TestBoundaryMatrices:
    """Test boundary matrices and ∂² = 0."""

    def test_three_cycle(self):
        """∂_1 of the 3-cycle is 3x3 of rank 2."""
        M = boundary_matrix(boundary_simplex(1), 1, RATIONALS)
        assert (M.rows, M.cols) == (3, 3)
        assert matrix_rank(M) == 2

    def test_sign_convention(self):
        """The face omitting v_j gets (−1)^j."""
        X = from_facets([[0, 1, 2]])
        M = boundary_matrix(X, 2, RATIONALS)
        rows = X.face_index[1]
        assert M.entry(rows[(1, 2)], 0) == 1
        assert M.entry(rows[(0, 2)], 0) == -1
        assert M.entry(rows[(0, 1)], 0) == 1

    def test_handle_body_top_rank(self, h2):
        """∂_2 of H(2) is 10x5 of rank 5."""
        M = boundary_matrix(h2, 2, RATIONALS)
        assert (M.rows, M.cols) == (10, 5)
        assert matrix_rank(M) == 5

    def test_chain_space_bases(self, h2):
        """C_i of H(2) has the faces of dimension i as basis, in lexicographic order."""
        chains = ChainSpace(h2, RATIONALS)
        assert [chains.dimension(i) for i in range(-1, 4)] == [0, 5, 10, 5, 0]
        assert chains.basis(0) == ((0,), (1,), (2,), (3,), (4,))
        assert chains.index(1)[(0, 1)] == 0
        M = boundary_matrix(h2, 1, RATIONALS)
        assert (M.rows, M.cols) == (chains.dimension(0), chains.dimension(1))

    def test_degree_zero_and_out_of_range(self, h2):
        """∂_0 maps to the zero space; degrees beyond dim are rejected."""
        assert boundary_matrix(h2, 0, RATIONALS).rows == 0
        with pytest.raises(ComplexInputError):
            boundary_matrix(h2, 3, RATIONALS)

    @pytest.mark.parametrize("field", FIELDS)
    def test_boundary_squared(self, field, h2):
        """∂∘∂ = 0 on generated complexes."""
        for X in (h2, boundary_simplex(3), stacked_ball(3, 4, seed=1), random_complex(7, 3, "1/2", 6)):
            assert boundary_squared_vanishes(X, field)


class TestBettiNumbers:
    """Test Betti numbers over several fields."""

    def test_sphere(self, tetra_boundary, q):
        """∂Δ³ has β = (1, 0, 1)."""
        assert betti_vector(tetra_boundary, q).values == (1, 0, 1)

    @pytest.mark.parametrize("field", FIELDS)
    def test_moebius_band(self, field, h2):
        """H(2) has β = (1, 1, 0) over every field."""
        assert betti_vector(h2, field).values == (1, 1, 0)

    def test_torus(self, torus, q, f2):
        """The 7-vertex torus has β = (1, 2, 1)."""
        assert betti_vector(torus, q).values == (1, 2, 1)
        assert betti_vector(torus, f2).values == (1, 2, 1)

    def test_reduced_variant(self, tetra_boundary, q):
        """Reduced Betti numbers drop one in degree 0."""
        assert betti_vector(tetra_boundary, q, reduced=True).values == (0, 0, 1)

    def test_empty_complex(self, q):
        """The empty complex has no Betti numbers."""
        assert betti_vector(from_facets([]), q).values == ()

    def test_disconnected(self, q):
        """Two disjoint triangles have β_0 = 2."""
        X = from_facets([[0, 1, 2], [3, 4, 5]])
        assert betti_vector(X, q).values == (2, 0, 0)

    @pytest.mark.parametrize("field", FIELDS)
    def test_euler_relation(self, field):
        """Σ(−1)^i β_i = Σ(−1)^i f_i on random complexes."""
        for seed in range(15):
            X = random_complex(8, 2, "1/3", seed)
            betti = betti_vector(X, field).values
            assert sum((-1) ** i * b for i, b in enumerate(betti)) == euler_characteristic(X)

    def test_field_independence_for_spheres_and_balls(self):
        """Spheres and balls from the generators have the same Betti numbers over every field."""
        complexes = [boundary_simplex(3), stacked_ball(3, 5, seed=2), kuehnel_handle(3)]
        for X in complexes:
            vectors = {betti_vector(X, field).values for field in FIELDS}
            assert len(vectors) == 1

    def test_memo_is_used(self, engine, h2, f2):
        """Repeated queries hit the memo."""
        betti_vector(h2, f2, engine=engine)
        misses = engine.memo.misses
        betti_vector(h2, f2, engine=engine)
        assert engine.memo.misses == misses
        assert engine.memo.hits >= 1


class TestConeAndAlexanderDuality:
    """Test the cone and Alexander-duality facts behind the stacked-ball lemma."""

    @pytest.mark.parametrize("field", [RATIONALS, GF2])
    def test_cones_are_acyclic(self, field, h2, torus):
        """Every cone has vanishing reduced homology."""
        for X in (h2, torus, boundary_simplex(2)):
            coned = cone(X, 20)
            assert not any(reduced_betti(coned, coned.vertex_mask, field))

    @pytest.mark.parametrize(
        "sphere",
        [boundary_simplex(4), boundary_complex(stacked_ball(4, 3, seed=0)), boundary_complex(stacked_ball(4, 4, seed=3))]
        + [boundary_complex(stacked_ball(3, 6, seed=seed)) for seed in range(5)],
    )
    def test_alexander_duality(self, sphere, engine):
        """β̃_i(S[α]) = β̃_{D−i−1}(S[V∖α]) for every proper nonempty α."""
        D = sphere.dim
        full = sphere.vertex_mask
        for mask in submasks(full):
            if mask in (0, full):
                continue
            inside = reduced_betti(sphere, mask, GF2, engine)
            outside = reduced_betti(sphere, full & ~mask, GF2, engine)
            for i in range(D):
                assert inside[i] == outside[D - i - 1]


class TestInclusionInjective:
    """Test injectivity of maps induced by inclusions of induced subcomplexes."""

    @pytest.mark.parametrize("field", FIELDS)
    def test_full_subset_is_identity(self, field, h2, fan):
        """A = V gives the identity, injective in every degree."""
        for X in (h2, fan):
            for i in range(X.dim + 1):
                assert inclusion_injective(X, X.vertices, i, field)

    @pytest.mark.parametrize("field", FIELDS)
    def test_fan_rim_cycle_bounds(self, field, fan):
        """The induced 4-cycle of the fan disc bounds, so H_1 is not injective."""
        assert not inclusion_injective(fan, [1, 2, 3, 4], 1, field)

    def test_fan_rim_cycle_intersection(self, fan, q):
        """Z_1 of the rim meets B_1 of the disc in a line."""
        rim = [(1, 2), (2, 3), (3, 4), (1, 4)]
        index = fan.face_index[1]
        cycle = [0] * len(fan.faces[1])
        for edge, sign in zip(rim, [1, 1, 1, -1]):
            cycle[index[edge]] = sign
        boundaries = boundary_matrix(fan, 2, q).transpose().row_vectors()
        dense = [[b.get(r, 0) for r in range(len(fan.faces[1]))] for b in boundaries]
        assert subspace_intersection_dim([cycle], dense, q) == 1

    def test_degree_zero(self, fan, c5, q):
        """Two components of X[A] in one component of X break H_0-injectivity."""
        assert not inclusion_injective(fan, [1, 3], 0, q)
        assert inclusion_injective(fan, [1, 2], 0, q)
        assert not inclusion_injective(c5, [0, 2], 0, q)

    def test_degree_zero_disconnected_ambient(self, q):
        """Components of X[A] in distinct components of X inject."""
        X = from_facets([[0, 1], [2, 3]])
        assert inclusion_injective(X, [0, 2], 0, q)
        assert not inclusion_injective(from_facets([[0, 1], [1, 2], [3, 4]]), [0, 2], 0, q)

    @pytest.mark.parametrize("field", FIELDS)
    def test_handle_body_injects_everywhere(self, field, h2, engine):
        """Every induced subcomplex of H(2) injects in degree 1."""
        oracle = InclusionOracle(h2, field, engine)
        for mask in submasks(h2.vertex_mask):
            assert oracle.injective(mask, 1)

    def test_foreign_vertices(self, h2):
        """A must lie in V(X)."""
        with pytest.raises(ComplexInputError):
            inclusion_injective(h2, [0, 11], 1)

    @pytest.mark.parametrize("field", [RATIONALS, GF2])
    def test_agrees_with_rank_definition(self, field, engine):
        """The oracle agrees with a direct kernel computation on random complexes."""
        for seed in range(6):
            X = random_complex(7, 2, "1/3", seed)
            oracle = InclusionOracle(X, field, engine)
            beta = betti_vector(X, field, engine=engine).values
            for mask in submasks(X.vertex_mask):
                local = reduced_betti(X, mask, field, engine)
                for i in range(1, X.dim + 1):
                    if local[i] == 0:
                        assert oracle.injective(mask, i)
                    elif beta[i] == 0:
                        assert not oracle.injective(mask, i)
