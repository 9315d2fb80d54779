"""Dense bit matrices over GF(2).

Columns are stored as Python ints (bit ``q`` of a column is row ``q``), so a
column addition is a single word-wide XOR regardless of the row count.  This
matches how the encoder pipeline uses matrices: generators are columns and
qubits are rows, and the only elementary operations ever needed are column
additions and row swaps.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np


def popcount(v: int) -> int:
    return bin(v).count("1")


class BitMatrix:
    """A ``rows x cols`` matrix over GF(2) with column-packed storage."""

    __slots__ = ("rows", "cols", "_cols")

    def __init__(self, rows: int, cols: int, columns: Sequence[int] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        self.rows = rows
        self.cols = cols
        if columns is None:
            self._cols = [0] * cols
        else:
            if len(columns) != cols:
                raise ValueError(f"expected {cols} columns, got {len(columns)}")
            limit = 1 << rows
            for c in columns:
                if c < 0 or c >= limit:
                    raise ValueError("column has bits outside the row range")
            self._cols = list(columns)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(rows, cols)

    @classmethod
    def identity(cls, size: int) -> BitMatrix:
        return cls(size, size, [1 << i for i in range(size)])

    @classmethod
    def from_array(cls, array) -> BitMatrix:
        """Build from anything ``numpy.asarray`` accepts as a 2-D 0/1 array."""
        a = np.asarray(array, dtype=np.int64)
        if a.ndim != 2:
            raise ValueError("expected a 2-D array")
        if np.any((a != 0) & (a != 1)):
            raise ValueError("entries must be 0 or 1")
        rows, cols = a.shape
        columns = []
        for j in range(cols):
            v = 0
            for q in np.flatnonzero(a[:, j]):
                v |= 1 << int(q)
            columns.append(v)
        return cls(rows, cols, columns)

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for j, c in enumerate(self._cols):
            for q in range(self.rows):
                if (c >> q) & 1:
                    out[q, j] = 1
        return out

    def copy(self) -> BitMatrix:
        return BitMatrix(self.rows, self.cols, self._cols)

    def column(self, j: int) -> int:
        """Column ``j`` as a bitmask over rows."""
        self._check_col(j)
        return self._cols[j]

    def row(self, q: int) -> int:
        """Row ``q`` as a bitmask over columns."""
        self._check_row(q)
        v = 0
        for j, c in enumerate(self._cols):
            if (c >> q) & 1:
                v |= 1 << j
        return v

    def __getitem__(self, index: tuple[int, int]) -> int:
        q, j = index
        self._check_row(q)
        self._check_col(j)
        return (self._cols[j] >> q) & 1

    def __setitem__(self, index: tuple[int, int], value: int) -> None:
        q, j = index
        self._check_row(q)
        self._check_col(j)
        if value:
            self._cols[j] |= 1 << q
        else:
            self._cols[j] &= ~(1 << q)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._cols) == (other.rows, other.cols, other._cols)

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"

    def __str__(self) -> str:
        return "\n".join(
            " ".join(str((c >> q) & 1) for c in self._cols) for q in range(self.rows)
        )

    # Elementary operations (in place).

    def add_column(self, src: int, dst: int) -> None:
        """Column ``dst`` <- ``dst`` XOR ``src``."""
        self._check_col(src)
        self._check_col(dst)
        if src == dst:
            raise ValueError("add_column needs two distinct columns")
        self._cols[dst] ^= self._cols[src]

    def swap_rows(self, a: int, b: int) -> None:
        self._check_row(a)
        self._check_row(b)
        if a == b:
            return
        mask = (1 << a) | (1 << b)
        for j, c in enumerate(self._cols):
            if ((c >> a) ^ (c >> b)) & 1:
                self._cols[j] = c ^ mask

    def permute_rows(self, order: Sequence[int]) -> None:
        """Reorder rows so that new row ``i`` is old row ``order[i]``."""
        if sorted(order) != list(range(self.rows)):
            raise ValueError("order must be a permutation of the row indices")
        for j, c in enumerate(self._cols):
            v = 0
            for i, old in enumerate(order):
                if (c >> old) & 1:
                    v |= 1 << i
            self._cols[j] = v

    def select_columns(self, order: Iterable[int]) -> BitMatrix:
        """New matrix whose columns are ``self`` columns in ``order``."""
        cols = [self.column(j) for j in order]
        return BitMatrix(self.rows, len(cols), cols)

    def hstack(self, other: BitMatrix) -> BitMatrix:
        if other.rows != self.rows:
            raise ValueError("row count mismatch")
        return BitMatrix(self.rows, self.cols + other.cols, self._cols + other._cols)

    def popcount(self) -> int:
        return sum(popcount(c) for c in self._cols)

    def rank(self) -> int:
        return rank(self)

    def _check_row(self, q: int) -> None:
        if not 0 <= q < self.rows:
            raise IndexError(f"row {q} out of range for {self.rows} rows")

    def _check_col(self, j: int) -> None:
        if not 0 <= j < self.cols:
            raise IndexError(f"column {j} out of range for {self.cols} columns")


def rank_of_vectors(vectors: Iterable[int]) -> int:
    """GF(2) rank of a collection of bitmask vectors."""
    # xor basis keyed by leading bit
    basis: dict[int, int] = {}
    r = 0
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top in basis:
                v ^= basis[top]
            else:
                basis[top] = v
                r += 1
                break
    return r


def rank(m: BitMatrix) -> int:
    """GF(2) rank of ``m``; the matrix itself is not modified."""
    return rank_of_vectors(m.column(j) for j in range(m.cols))


def solve(rows: Sequence[int], rhs: Sequence[int], ncols: int) -> int | None:
    """Solve ``A v = rhs`` over GF(2).

    ``rows[i]`` is row ``i`` of ``A`` as a bitmask over ``ncols`` unknowns and
    ``rhs[i]`` is 0 or 1.  Returns the particular solution with every free
    variable set to zero (as a bitmask), or ``None`` if the system is
    inconsistent.
    """
    if len(rows) != len(rhs):
        raise ValueError("rows and rhs differ in length")
    aug = [(r & ((1 << ncols) - 1)) | ((b & 1) << ncols) for r, b in zip(rows, rhs)]
    pivots: list[tuple[int, int]] = []  # (row index, column)
    top = 0
    for col in range(ncols):
        bit = 1 << col
        pivot = next((i for i in range(top, len(aug)) if aug[i] & bit), None)
        if pivot is None:
            continue
        aug[top], aug[pivot] = aug[pivot], aug[top]
        for i in range(len(aug)):
            if i != top and aug[i] & bit:
                aug[i] ^= aug[top]
        pivots.append((top, col))
        top += 1
    rhs_bit = 1 << ncols
    for i in range(top, len(aug)):
        if aug[i] & rhs_bit:
            return None
    sol = 0
    for i, col in pivots:
        if aug[i] & rhs_bit:
            sol |= 1 << col
    return sol


def in_span(vector: int, vectors: Sequence[int]) -> bool:
    return rank_of_vectors(list(vectors) + [vector]) == rank_of_vectors(vectors)


def build_matrices(gs) -> tuple[BitMatrix, BitMatrix]:
    """X- and Z-matrices of a generator set: ``n x d``, one column per generator."""
    n = gs.n
    gens = list(gs.generators)
    return (
        BitMatrix(n, len(gens), [g.xbits for g in gens]),
        BitMatrix(n, len(gens), [g.zbits for g in gens]),
    )
