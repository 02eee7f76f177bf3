# src/tightness_mcp/linalg.py
"""Exact arithmetic over ℚ and prime fields, and rank computations over them.

Rationals are ``fractions.Fraction`` values (arbitrary-precision, always
normalized). Prime-field elements are canonical residues ``0..p-1``. Over 𝔽₂
vectors are packed into Python integers, one bit per coordinate; every other
field uses sparse ``{index: value}`` dictionaries. Elimination always pivots on
the first nonzero coordinate, so results are deterministic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import isprime

from .engine import FieldError, ShapeError

Scalar = Union[int, Fraction]
SparseVector = Dict[int, Scalar]

MAX_CHARACTERISTIC = 2**31

_FIELD_PATTERN = re.compile(r"^(?:q|f2|f3|fp:(\d+))$")


def make_rational(num: int, den: int) -> Fraction:
    """Build the normalized rational num/den."""
    if den == 0:
        raise FieldError("Zero denominator")
    return Fraction(int(num), int(den))


def format_rational(value: Scalar) -> str:
    """Encode a rational as "p/q", or "n" when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Decode the "p/q" / "n" encoding produced by format_rational."""
    num, sep, den = text.strip().partition("/")
    try:
        return make_rational(int(num), int(den) if sep else 1)
    except ValueError as exc:
        raise FieldError(f"Not a rational: {text!r}") from exc


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 (ℚ) or a prime p."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        p = self.characteristic
        if p == 0:
            return
        if p < 0 or p >= MAX_CHARACTERISTIC or not isprime(p):
            raise FieldError(f"Field characteristic must be 0 or a prime below 2^31, got {p}")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``q``, ``f2``, ``f3`` or ``fp:<p>``."""
        text = str(text).strip().lower()
        match = _FIELD_PATTERN.match(text)
        if match is None:
            raise FieldError(f"Unknown field {text!r}; use q, f2, f3 or fp:<p>")
        if text == "q":
            return cls(0)
        if text == "f2":
            return cls(2)
        if text == "f3":
            return cls(3)
        return cls(int(match.group(1)))

    @property
    def name(self) -> str:
        p = self.characteristic
        if p == 0:
            return "q"
        if p in (2, 3):
            return f"f{p}"
        return f"fp:{p}"

    @property
    def is_binary(self) -> bool:
        return self.characteristic == 2

    def __str__(self) -> str:
        return self.name

    def coerce(self, value: Scalar) -> Scalar:
        """Map an integer or rational into the field."""
        p = self.characteristic
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise FieldError(f"{value} has no image in characteristic {p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        return int(value) % p

    def inverse(self, value: Scalar) -> Scalar:
        if value == 0:
            raise FieldError("Zero has no inverse")
        if self.characteristic == 0:
            return 1 / Fraction(value)
        return pow(int(value), -1, self.characteristic)


RATIONALS = FieldSpec(0)
GF2 = FieldSpec(2)


def _sparse(values: Iterable[Scalar], field_spec: FieldSpec) -> SparseVector:
    out: SparseVector = {}
    for index, value in enumerate(values):
        value = field_spec.coerce(value)
        if value:
            out[index] = value
    return out


def _pack(vector: Mapping[int, Scalar]) -> int:
    bits = 0
    for index, value in vector.items():
        if int(value) % 2:
            bits |= 1 << index
    return bits


def _unpack(bits: int) -> SparseVector:
    out: SparseVector = {}
    while bits:
        low = bits & -bits
        out[low.bit_length() - 1] = 1
        bits ^= low
    return out


@dataclass(frozen=True)
class Matrix:
    """Sparse matrix over a field, stored row-wise."""

    rows: int
    cols: int
    field: FieldSpec = RATIONALS
    entries: Mapping[int, Mapping[int, Scalar]] = dataclass_field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ShapeError("Matrix dimensions must be nonnegative")
        clean: Dict[int, Dict[int, Scalar]] = {}
        for r, row in self.entries.items():
            if not 0 <= r < self.rows:
                raise ShapeError(f"Row {r} outside a {self.rows}x{self.cols} matrix")
            kept: Dict[int, Scalar] = {}
            for c, value in row.items():
                if not 0 <= c < self.cols:
                    raise ShapeError(f"Column {c} outside a {self.rows}x{self.cols} matrix")
                value = self.field.coerce(value)
                if value:
                    kept[c] = value
            if kept:
                clean[r] = kept
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], field_spec: FieldSpec = RATIONALS) -> "Matrix":
        """Build from a dense list of equal-length rows."""
        width = len(rows[0]) if rows else 0
        if any(len(row) != width for row in rows):
            raise ShapeError("Rows have different lengths")
        return cls(len(rows), width, field_spec, {r: _sparse(row, field_spec) for r, row in enumerate(rows)})

    @classmethod
    def identity(cls, n: int, field_spec: FieldSpec = RATIONALS) -> "Matrix":
        return cls(n, n, field_spec, {i: {i: 1} for i in range(n)})

    @classmethod
    def zeros(cls, rows: int, cols: int, field_spec: FieldSpec = RATIONALS) -> "Matrix":
        return cls(rows, cols, field_spec, {})

    def entry(self, row: int, col: int) -> Scalar:
        if not (0 <= row < self.rows and 0 <= col < self.cols):
            raise ShapeError(f"Entry ({row}, {col}) outside a {self.rows}x{self.cols} matrix")
        return self.entries.get(row, {}).get(col, 0)

    def row_vectors(self) -> List[SparseVector]:
        return [dict(self.entries.get(r, {})) for r in range(self.rows)]

    def transpose(self) -> "Matrix":
        flipped: Dict[int, Dict[int, Scalar]] = {}
        for r, row in self.entries.items():
            for c, value in row.items():
                flipped.setdefault(c, {})[r] = value
        return Matrix(self.cols, self.rows, self.field, flipped)

    def permute_rows(self, order: Sequence[int]) -> "Matrix":
        """Row i of the result is row order[i] of self."""
        if sorted(order) != list(range(self.rows)):
            raise ShapeError("Not a permutation of the rows")
        return Matrix(self.rows, self.cols, self.field,
                      {i: self.entries[src] for i, src in enumerate(order) if src in self.entries})

    def scale_row(self, row: int, factor: Scalar) -> "Matrix":
        if not 0 <= row < self.rows:
            raise ShapeError(f"Row {row} outside a {self.rows}x{self.cols} matrix")
        factor = self.field.coerce(factor)
        scaled = dict(self.entries)
        scaled[row] = {c: self._mul(v, factor) for c, v in self.entries.get(row, {}).items()}
        return Matrix(self.rows, self.cols, self.field, scaled)

    def multiply(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeError(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        product: Dict[int, Dict[int, Scalar]] = {}
        for r, row in self.entries.items():
            acc: Dict[int, Scalar] = {}
            for k, a in row.items():
                for c, b in other.entries.get(k, {}).items():
                    acc[c] = self._add(acc.get(c, 0), self._mul(a, b))
            product[r] = acc
        return Matrix(self.rows, other.cols, self.field, product)

    def is_zero(self) -> bool:
        return not self.entries

    def _add(self, a: Scalar, b: Scalar) -> Scalar:
        p = self.field.characteristic
        return a + b if p == 0 else (a + b) % p

    def _mul(self, a: Scalar, b: Scalar) -> Scalar:
        p = self.field.characteristic
        return a * b if p == 0 else (a * b) % p


class _Eliminator:
    """Incremental row reduction; pivots on the first nonzero coordinate."""

    def __init__(self, field_spec: FieldSpec):
        self.field = field_spec
        self.p = field_spec.characteristic
        self.pivots: Dict[int, Any] = {}

    def _reduce(self, vector: SparseVector, tag: Optional[SparseVector] = None
                ) -> Tuple[SparseVector, Optional[SparseVector]]:
        p = self.p
        vector = dict(vector)
        while vector:
            lead = min(vector)
            hit = self.pivots.get(lead)
            if hit is None:
                break
            pivot, pivot_tag = hit
            factor = vector[lead]
            for col, value in pivot.items():
                new = vector.get(col, 0) - factor * value
                if p:
                    new %= p
                if new:
                    vector[col] = new
                else:
                    vector.pop(col, None)
            if tag is not None:
                for col, value in pivot_tag.items():
                    new = tag.get(col, 0) - factor * value
                    if p:
                        new %= p
                    if new:
                        tag[col] = new
                    else:
                        tag.pop(col, None)
        return vector, tag

    def add(self, vector: SparseVector, tag: Optional[SparseVector] = None) -> Optional[SparseVector]:
        """Insert a vector; returns the reduced tag when the vector was dependent."""
        tag = dict(tag) if tag is not None else None
        vector, tag = self._reduce(vector, tag)
        if not vector:
            return tag if tag is not None else {}
        lead = min(vector)
        scale = self.field.inverse(vector[lead])
        if self.p:
            vector = {c: v * scale % self.p for c, v in vector.items()}
            tag = {c: v * scale % self.p for c, v in tag.items()} if tag is not None else {}
        else:
            vector = {c: v * scale for c, v in vector.items()}
            tag = {c: v * scale for c, v in tag.items()} if tag is not None else {}
        self.pivots[lead] = (vector, tag)
        return None

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank_of_bits(rows: Iterable[int]) -> int:
    """Rank over 𝔽₂ of bit-packed vectors."""
    pivots: Dict[int, int] = {}
    for row in rows:
        while row:
            low = row & -row
            pivot = pivots.get(low)
            if pivot is None:
                pivots[low] = row
                break
            row ^= pivot
    return len(pivots)


def kernel_of_bits(columns: Sequence[int]) -> List[int]:
    """Basis of the kernel over 𝔽₂ of the matrix with the given packed columns.

    Kernel vectors are packed over column positions.
    """
    pivots: Dict[int, Tuple[int, int]] = {}
    kernel: List[int] = []
    for j, column in enumerate(columns):
        vector, tag = column, 1 << j
        while vector:
            low = vector & -vector
            hit = pivots.get(low)
            if hit is None:
                pivots[low] = (vector, tag)
                break
            vector ^= hit[0]
            tag ^= hit[1]
        else:
            kernel.append(tag)
    return kernel


def rank_of_vectors(vectors: Iterable[Mapping[int, Scalar]], field_spec: FieldSpec) -> int:
    """Rank of a family of sparse vectors."""
    if field_spec.is_binary:
        return rank_of_bits(_pack(v) for v in vectors)
    elim = _Eliminator(field_spec)
    for vector in vectors:
        elim.add({i: c for i, x in vector.items() if (c := field_spec.coerce(x))})
    return elim.rank


def kernel_basis(columns: Sequence[Mapping[int, Scalar]], field_spec: FieldSpec) -> List[SparseVector]:
    """Basis of {c : Σ c_j columns[j] = 0}, as sparse vectors over column positions."""
    if field_spec.is_binary:
        return [_unpack(bits) for bits in kernel_of_bits([_pack(c) for c in columns])]
    elim = _Eliminator(field_spec)
    kernel: List[SparseVector] = []
    for j, column in enumerate(columns):
        vector = {i: c for i, x in column.items() if (c := field_spec.coerce(x))}
        relation = elim.add(vector, {j: field_spec.coerce(1)})
        if relation is not None:
            kernel.append(relation)
    return kernel


def matrix_rank(matrix: Matrix, field_spec: Optional[FieldSpec] = None) -> int:
    """Rank of a matrix by exact elimination."""
    field_spec = field_spec or matrix.field
    return rank_of_vectors(matrix.row_vectors(), field_spec)


def _as_sparse_family(vectors: Sequence[Any], field_spec: FieldSpec) -> Tuple[List[SparseVector], Optional[int]]:
    family: List[SparseVector] = []
    length: Optional[int] = None
    for vector in vectors:
        if isinstance(vector, Mapping):
            family.append(dict(vector))
            continue
        if length is None:
            length = len(vector)
        elif len(vector) != length:
            raise ShapeError(f"Vector of length {len(vector)} among vectors of length {length}")
        family.append(_sparse(vector, field_spec))
    return family, length


def subspace_intersection_dim(U: Sequence[Any], W: Sequence[Any], field_spec: FieldSpec) -> int:
    """dim(span U ∩ span W) = rank U + rank W − rank(U ∪ W).

    Vectors are dense coordinate sequences of a common length, or sparse
    ``{index: value}`` mappings over a common coordinate set.
    """
    u_family, u_len = _as_sparse_family(U, field_spec)
    w_family, w_len = _as_sparse_family(W, field_spec)
    if u_len is not None and w_len is not None and u_len != w_len:
        raise ShapeError(f"Vectors of length {u_len} and {w_len} live in different spaces")
    return (
        rank_of_vectors(u_family, field_spec)
        + rank_of_vectors(w_family, field_spec)
        - rank_of_vectors(u_family + w_family, field_spec)
    )
