# tests/test_linalg.py
"""Tests for exact arithmetic and rank computations."""

import random
from fractions import Fraction

import pytest

from tightness_mcp.engine import FieldError, ShapeError
from tightness_mcp.linalg import (
    GF2,
    RATIONALS,
    FieldSpec,
    Matrix,
    format_rational,
    kernel_basis,
    make_rational,
    matrix_rank,
    parse_rational,
    subspace_intersection_dim,
)


def _random_matrix(rng: random.Random, field: FieldSpec, rows: int, cols: int) -> Matrix:
    return Matrix.from_rows(
        [[rng.choice([0, 0, 1, -1, 2, 3]) for _ in range(cols)] for _ in range(rows)],
        field,
    )


class TestRationals:
    """Test rational construction and the "p/q" encoding."""

    def test_make_rational_normalizes(self):
        """Rationals are reduced and carry a positive denominator."""
        assert make_rational(2, 4) == Fraction(1, 2)
        assert make_rational(-3, -6) == Fraction(1, 2)
        assert make_rational(0, 7) == Fraction(0)
        assert make_rational(0, 7).denominator == 1

    def test_zero_denominator_rejected(self):
        """A zero denominator raises FieldError."""
        with pytest.raises(FieldError):
            make_rational(1, 0)

    def test_format_and_parse(self):
        """Integers print without a denominator; parse inverts format."""
        assert format_rational(Fraction(6, 5)) == "6/5"
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(0) == "0"
        assert parse_rational("2/5") == Fraction(2, 5)
        assert parse_rational("-3") == Fraction(-3)

    def test_parse_rejects_garbage(self):
        """Unparsable text raises FieldError."""
        with pytest.raises(FieldError):
            parse_rational("one half")


class TestFieldSpec:
    """Test coefficient field parsing and arithmetic."""

    def test_parse_names(self):
        """Field names round-trip through parse."""
        assert FieldSpec.parse("q") == RATIONALS
        assert FieldSpec.parse("F2") == GF2
        assert FieldSpec.parse("f3").characteristic == 3
        assert FieldSpec.parse("fp:7").name == "fp:7"

    @pytest.mark.parametrize("text", ["fp:4", "fp:1", "r", "f5"])
    def test_parse_rejects(self, text):
        """Non-prime characteristics and unknown names raise FieldError."""
        with pytest.raises(FieldError):
            FieldSpec.parse(text)

    def test_coerce_into_prime_field(self):
        """Integers reduce mod p and rationals map through the inverse of the denominator."""
        f3 = FieldSpec(3)
        assert f3.coerce(-1) == 2
        assert f3.coerce(Fraction(1, 2)) == 2
        with pytest.raises(FieldError):
            f3.coerce(Fraction(1, 3))

    def test_inverse(self):
        """Inverses exist for nonzero elements only."""
        assert FieldSpec(7).inverse(3) == 5
        assert RATIONALS.inverse(Fraction(2, 3)) == Fraction(3, 2)
        with pytest.raises(FieldError):
            GF2.inverse(0)


class TestMatrixRank:
    """Test matrix rank by exact elimination."""

    def test_identity_over_f2(self):
        """The 3x3 identity has rank 3."""
        assert matrix_rank(Matrix.identity(3, GF2)) == 3

    def test_zero_matrix(self):
        """A zero 4x5 matrix has rank 0."""
        assert matrix_rank(Matrix.zeros(4, 5)) == 0

    def test_three_cycle_incidence(self):
        """The signed vertex-edge matrix of the 3-cycle has rank 2 over Q."""
        M = Matrix.from_rows([[-1, -1, 0], [1, 0, -1], [0, 1, 1]])
        assert matrix_rank(M) == 2

    def test_characteristic_matters(self):
        """[[1, 1], [1, -1]] is singular only in characteristic 2."""
        rows = [[1, 1], [1, -1]]
        assert matrix_rank(Matrix.from_rows(rows, RATIONALS)) == 2
        assert matrix_rank(Matrix.from_rows(rows, GF2)) == 1

    @pytest.mark.parametrize("field", [RATIONALS, GF2, FieldSpec(5)])
    def test_rank_equals_transpose_rank(self, field):
        """rank(M) = rank(M^T) on random small matrices."""
        rng = random.Random(11)
        for _ in range(25):
            M = _random_matrix(rng, field, rng.randint(1, 6), rng.randint(1, 6))
            assert matrix_rank(M) == matrix_rank(M.transpose())

    @pytest.mark.parametrize("field", [RATIONALS, FieldSpec(3)])
    def test_rank_invariant_under_row_operations(self, field):
        """Row permutations and nonzero row scalings keep the rank."""
        rng = random.Random(5)
        for _ in range(20):
            M = _random_matrix(rng, field, 5, 4)
            order = list(range(5))
            rng.shuffle(order)
            assert matrix_rank(M.permute_rows(order)) == matrix_rank(M)
            assert matrix_rank(M.scale_row(2, 2)) == matrix_rank(M)

    def test_shape_errors(self):
        """Out-of-range entries and mismatched products raise ShapeError."""
        with pytest.raises(ShapeError):
            Matrix(2, 2, RATIONALS, {3: {0: 1}})
        with pytest.raises(ShapeError):
            Matrix.identity(2).multiply(Matrix.identity(3))


class TestKernelAndIntersection:
    """Test kernel bases and subspace intersections."""

    @pytest.mark.parametrize("field", [RATIONALS, GF2, FieldSpec(3)])
    def test_kernel_of_three_cycle(self, field):
        """The edge columns of the 3-cycle have a one-dimensional kernel."""
        columns = [{0: -1, 1: 1}, {0: -1, 2: 1}, {1: -1, 2: 1}]
        kernel = kernel_basis(columns, field)
        assert len(kernel) == 1
        relation = kernel[0]
        for row in range(3):
            total = sum(relation.get(j, 0) * columns[j].get(row, 0) for j in range(3))
            assert field.coerce(total) == 0

    def test_equal_lines(self):
        """span{e1} ∩ span{e1} is one-dimensional."""
        assert subspace_intersection_dim([[1, 0]], [[1, 0]], RATIONALS) == 1

    def test_transverse_lines(self):
        """span{e1} ∩ span{e2} is zero."""
        assert subspace_intersection_dim([[1, 0]], [[0, 1]], RATIONALS) == 0

    def test_intersection_bounded_by_ranks(self):
        """The intersection never exceeds either rank and equals rank U when U ⊆ W."""
        U = [[1, 1, 0]]
        W = [[1, 0, 0], [0, 1, 0]]
        assert subspace_intersection_dim(U, W, RATIONALS) == 1
        assert subspace_intersection_dim(W, [[0, 0, 1]], RATIONALS) == 0

    def test_mismatched_lengths(self):
        """Vectors of different lengths raise ShapeError."""
        with pytest.raises(ShapeError):
            subspace_intersection_dim([[1, 0]], [[1, 0, 0]], RATIONALS)
