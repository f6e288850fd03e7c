"""Sparse linear algebra over GF(2).

Columns and vectors are stored as Python ints used as bitsets: bit ``r`` of a
column is set iff row ``r`` holds a 1.  A bitset is a set of row indices, and
XOR is symmetric difference, which is exactly addition in characteristic 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for k in indices:
        mask ^= 1 << k
    return mask


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class F2Vector:
    dim: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.dim:
            raise ValueError(f"support exceeds dimension {self.dim}")

    @classmethod
    def from_support(cls, dim: int, support: Iterable[int]) -> "F2Vector":
        return cls(dim, mask_of(support))

    @classmethod
    def unit(cls, dim: int, k: int) -> "F2Vector":
        return cls(dim, 1 << k)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(bits_of(self.bits))

    def __add__(self, other: "F2Vector") -> "F2Vector":
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        return F2Vector(self.dim, self.bits ^ other.bits)

    def __bool__(self) -> bool:
        return self.bits != 0


@dataclass(frozen=True)
class F2Matrix:
    """A rows x cols matrix over GF(2), stored column-major as bitsets."""

    rows: int
    cols: int
    columns: tuple[int, ...]

    def __post_init__(self):
        if len(self.columns) != self.cols:
            raise ValueError("column count mismatch")
        for col in self.columns:
            if col < 0 or col >> self.rows:
                raise ValueError("entry outside matrix bounds")

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable[tuple[int, int]]) -> "F2Matrix":
        """Build from (row, col) positions; a repeated position cancels."""
        columns = [0] * cols
        for r, c in entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValueError(f"entry ({r}, {c}) outside {rows}x{cols}")
            columns[c] ^= 1 << r
        return cls(rows, cols, tuple(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "F2Matrix":
        return cls(rows, cols, (0,) * cols)

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls(n, n, tuple(1 << k for k in range(n)))

    @property
    def entries(self) -> frozenset[tuple[int, int]]:
        return frozenset((r, c) for c, col in enumerate(self.columns) for r in bits_of(col))

    def transpose(self) -> "F2Matrix":
        return F2Matrix.from_entries(self.cols, self.rows, ((c, r) for r, c in self.entries))

    def __matmul__(self, v: F2Vector) -> F2Vector:
        if v.dim != self.cols:
            raise ValueError("dimension mismatch")
        out = 0
        for c in bits_of(v.bits):
            out ^= self.columns[c]
        return F2Vector(self.rows, out)


class PivotBasis:
    """Incrementally maintained echelon basis of a subspace of GF(2)^n.

    Each stored vector is keyed by its lowest set bit, and no two stored
    vectors share that pivot.
    """

    def __init__(self):
        self.pivots: dict[int, int] = {}
        self.pivot_mask = 0

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, mask: int) -> int:
        """Clear leading pivots from ``mask``; zero iff ``mask`` is in the span."""
        pivots = self.pivots
        while mask:
            p = pivots.get(lowest_bit(mask))
            if p is None:
                return mask
            mask ^= p
        return 0

    def reduce_fully(self, mask: int) -> int:
        """Clear every pivot position of ``mask``, not only the leading one."""
        pivots = self.pivots
        hit = mask & self.pivot_mask
        while hit:
            mask ^= pivots[lowest_bit(hit)]
            hit = mask & self.pivot_mask
        return mask

    def add(self, mask: int) -> bool:
        """Insert ``mask``; return False if it was already in the span."""
        mask = self.reduce(mask)
        if not mask:
            return False
        low = lowest_bit(mask)
        self.pivots[low] = mask
        self.pivot_mask |= 1 << low
        return True

    def __contains__(self, mask: int) -> bool:
        return not self.reduce(mask)


def rank_of_columns(columns: Iterable[int]) -> int:
    basis = PivotBasis()
    for col in columns:
        basis.add(col)
    return len(basis)


def rank(m: F2Matrix) -> int:
    return rank_of_columns(m.columns)


def kernel_masks(columns: Sequence[int]) -> list[int]:
    """Kernel basis of the map whose columns are given, as bitsets over columns.

    Column reduction with a record of which original columns were combined;
    each column that reduces to zero contributes its record.  The result is
    brought to reduced echelon form so it depends only on the kernel itself.
    """
    pivots: dict[int, tuple[int, int]] = {}
    kernel = []
    for c, col in enumerate(columns):
        record = 1 << c
        while col:
            low = lowest_bit(col)
            hit = pivots.get(low)
            if hit is None:
                pivots[low] = (col, record)
                break
            col ^= hit[0]
            record ^= hit[1]
        else:
            kernel.append(record)
    return rref(kernel)


def rref(masks: Iterable[int]) -> list[int]:
    """Reduced echelon form of the span of ``masks``, sorted by pivot."""
    basis = PivotBasis()
    for mask in masks:
        basis.add(mask)
    pivots = basis.pivots
    for k in sorted(pivots, reverse=True):
        v = pivots[k]
        others = (v ^ (1 << k)) & basis.pivot_mask
        while others:
            v ^= pivots[lowest_bit(others)]
            others = (v ^ (1 << k)) & basis.pivot_mask
        pivots[k] = v
    return [pivots[k] for k in sorted(pivots)]


def kernel_basis(m: F2Matrix) -> list[F2Vector]:
    return [F2Vector(m.cols, k) for k in kernel_masks(m.columns)]


def in_span(v: F2Vector, basis: Sequence[F2Vector]) -> bool:
    span = PivotBasis()
    for b in basis:
        if b.dim != v.dim:
            raise ValueError(f"dimension mismatch: {b.dim} != {v.dim}")
        span.add(b.bits)
    return v.bits in span
