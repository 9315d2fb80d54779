"""Reduction of a generator set to standard form.

The X/Z matrices (qubits as rows, generators as columns) are brought into
the block layout below by two rounds of column-pivoted Gauss-Jordan
elimination plus a qubit reordering; ``k`` seed columns are then appended.
Row blocks have sizes ``k, r2, r1, b`` and column blocks ``k | r2, r1, b``::

        X                       Z
    [ I    0 0 A1 ]         [ 0  0  B1 C1 ]
    [ 0    0 0 A2 ]         [ 0  0  B2 C2 ]
    [ B1^T 0 0 A3 ]         [ 0  0  I  C3 ]
    [ 0    0 0 I  ]         [ 0  D1 D2 E  ]

Column additions are generator multiplications ``G_i <- G_i G_j``, so the
sign of every transformed generator is tracked explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .gf2 import BitMatrix, build_matrices, popcount, rank_of_vectors
from .pauli import GeneratorSet, PauliString, commutes


@dataclass
class StandardForm:
    """Generators in standard form, in standard-form qubit order.

    ``perm[q]`` is the original qubit label of standard-form row ``q``.
    ``x_star``/``z_star`` hold the ``d`` stabilizer columns ordered
    secondary (r2, then r1) then primary (b); the ``k`` seed columns live in
    ``x_seed``/``z_seed``.
    """

    n: int
    k: int
    r2: int
    r1: int
    b: int
    x_star: BitMatrix
    z_star: BitMatrix
    x_seed: BitMatrix
    z_seed: BitMatrix
    perm: list[int]
    signs: list[int] = field(default_factory=list)

    @property
    def d(self) -> int:
        return self.n - self.k

    @property
    def r(self) -> int:
        return self.r1 + self.r2

    @property
    def x_full(self) -> BitMatrix:
        """``n x n`` augmented X-matrix: seed columns then ``x_star``."""
        return self.x_seed.hstack(self.x_star)

    @property
    def z_full(self) -> BitMatrix:
        return self.z_seed.hstack(self.z_star)

    @property
    def dims(self) -> tuple[int, int, int, int]:
        """``(k, r1, r2, b)``."""
        return self.k, self.r1, self.r2, self.b

    def primary_wire(self, j: int) -> int:
        """Standard-form row holding the identity entry of primary ``j``."""
        return self.n - self.b + j

    def generator(self, col: int, original_order: bool = True) -> PauliString:
        """Signed stabilizer generator from column ``col`` of ``x_star``/``z_star``."""
        p = PauliString(self.n, self.x_star.column(col), self.z_star.column(col), self.signs[col])
        return p.permuted(self.perm) if original_order else p

    def seed(self, i: int, original_order: bool = True) -> PauliString:
        p = PauliString(self.n, self.x_seed.column(i), self.z_seed.column(i), 1)
        return p.permuted(self.perm) if original_order else p

    def with_signs(self, signs) -> StandardForm:
        signs = [int(s) for s in signs]
        if len(signs) != self.d or any(s not in (1, -1) for s in signs):
            raise ValueError("need one +1/-1 sign per stabilizer column")
        return StandardForm(
            self.n, self.k, self.r2, self.r1, self.b,
            self.x_star.copy(), self.z_star.copy(),
            self.x_seed.copy(), self.z_seed.copy(),
            list(self.perm), signs,
        )

    @classmethod
    def from_augmented(cls, x_full, z_full, *, k, r1, r2, b, perm=None, signs=None) -> StandardForm:
        """Wrap ready-made ``n x n`` augmented matrices (seed columns first).

        Used to feed hand-written standard forms straight into synthesis.
        The block shape is checked; a malformed layout raises ``ValueError``.
        """
        xf = x_full if isinstance(x_full, BitMatrix) else BitMatrix.from_array(x_full)
        zf = z_full if isinstance(z_full, BitMatrix) else BitMatrix.from_array(z_full)
        n = xf.rows
        if xf.cols != n or zf.rows != n or zf.cols != n:
            raise ValueError("augmented matrices must both be n x n")
        if k + r1 + r2 + b != n:
            raise ValueError("block sizes must add up to n")
        d = n - k
        sf = cls(
            n, k, r2, r1, b,
            xf.select_columns(range(k, n)), zf.select_columns(range(k, n)),
            xf.select_columns(range(k)), zf.select_columns(range(k)),
            list(range(n)) if perm is None else list(perm),
            [1] * d if signs is None else [int(s) for s in signs],
        )
        problems = block_shape_problems(sf)
        if problems:
            raise ValueError("not a standard form: " + "; ".join(problems))
        return sf

    def classify(self, original_order: bool = True):
        return classify(self, original_order)

    def to_dict(self) -> dict:
        return {
            "n": self.n, "d": self.d, "k": self.k, "b": self.b,
            "r": self.r, "r1": self.r1, "r2": self.r2,
            "perm": list(self.perm),
            "signs": list(self.signs),
            "x_star": self.x_full.to_array().tolist(),
            "z_star": self.z_full.to_array().tolist(),
        }


class _Eliminator:
    """Column operations on a pair of matrices with sign bookkeeping."""

    def __init__(self, x: BitMatrix, z: BitMatrix, signs: list[int]):
        self.x, self.z, self.signs = x, z, signs

    def multiply_into(self, i: int, j: int) -> None:
        # G_i <- G_i * G_j; sign picks up (-1)^(z_i . x_j)
        sign = self.signs[i] * self.signs[j]
        if popcount(self.z.column(i) & self.x.column(j)) & 1:
            sign = -sign
        self.signs[i] = sign
        self.x.add_column(j, i)
        self.z.add_column(j, i)

    def gauss_jordan(self, m: BitMatrix, rows: range, cols: range) -> list[tuple[int, int]]:
        """First-fit pivoting restricted to ``rows`` x ``cols`` of ``m``.

        Each pivot clears its row from every other column in ``cols``.
        Returns the ``(row, column)`` pivots in discovery order.
        """
        used: set[int] = set()
        pivots = []
        for j in cols:
            col = m.column(j)
            q = next((q for q in rows if q not in used and (col >> q) & 1), None)
            if q is None:
                continue
            used.add(q)
            for i in cols:
                if i != j and (m.column(i) >> q) & 1:
                    self.multiply_into(i, j)
            pivots.append((q, j))
        return pivots


def compute_standard_form(gs: GeneratorSet) -> StandardForm:
    """Reduce a validated generator set to standard form."""
    n, d = gs.n, gs.d
    k = n - d
    x, z = build_matrices(gs)
    signs = [g.sign for g in gs.generators]
    elim = _Eliminator(x, z, signs)

    # X-matrix: pivot rows go to the bottom, pivot columns to the right.
    pivots = elim.gauss_jordan(x, range(n), range(d))
    b = len(pivots)
    pivot_rows = [q for q, _ in pivots]
    pivot_cols = [j for _, j in pivots]
    null_cols = [j for j in range(d) if j not in pivot_cols]
    row_order = [q for q in range(n) if q not in pivot_rows] + pivot_rows
    col_order = null_cols + pivot_cols
    x.permute_rows(row_order)
    z.permute_rows(row_order)
    x = x.select_columns(col_order)
    z = z.select_columns(col_order)
    signs = [signs[j] for j in col_order]
    perm = row_order
    r = d - b

    # Z-block of the secondary columns over the top n-b rows.
    elim = _Eliminator(x, z, signs)
    top = n - b
    pivots = elim.gauss_jordan(z, range(top), range(r))
    r1 = len(pivots)
    r2 = r - r1
    pivot_rows = [q for q, _ in pivots]
    pivot_cols = [j for _, j in pivots]
    null_cols = [j for j in range(r) if j not in pivot_cols]
    row_order = [q for q in range(top) if q not in pivot_rows] + pivot_rows + list(range(top, n))
    col_order = null_cols + pivot_cols + list(range(r, d))
    x.permute_rows(row_order)
    z.permute_rows(row_order)
    x = x.select_columns(col_order)
    z = z.select_columns(col_order)
    signs = [signs[j] for j in col_order]
    perm = [perm[q] for q in row_order]

    x_seed, z_seed = _seed_matrices(z, n, k, r2, r1)
    return StandardForm(n, k, r2, r1, b, x, z, x_seed, z_seed, perm, signs)


def _seed_matrices(z: BitMatrix, n: int, k: int, r2: int, r1: int) -> tuple[BitMatrix, BitMatrix]:
    # seed i: X on row i plus B1^T[:, i] on the r1 block; no Z part
    cols = []
    for i in range(k):
        v = 1 << i
        for t in range(r1):
            if z[i, r2 + t]:
                v |= 1 << (k + r2 + t)
        cols.append(v)
    return BitMatrix(n, k, cols), BitMatrix.zeros(n, k)


def classify(sf: StandardForm, original_order: bool = True):
    """Split into ``(primary, secondary, seed)`` lists of signed Pauli strings."""
    secondary = [sf.generator(j, original_order) for j in range(sf.r)]
    primary = [sf.generator(j, original_order) for j in range(sf.r, sf.d)]
    seeds = [sf.seed(i, original_order) for i in range(sf.k)]
    return primary, secondary, seeds


@dataclass
class SeedReport:
    independent: bool
    commuting: bool
    rank: int
    expected_rank: int
    anticommuting_pairs: list[tuple[int, int]]

    @property
    def passed(self) -> bool:
        return self.independent and self.commuting

    def to_dict(self) -> dict:
        return {
            "independent": self.independent,
            "commuting": self.commuting,
            "rank": self.rank,
            "expected_rank": self.expected_rank,
            "anticommuting_pairs": [list(p) for p in self.anticommuting_pairs],
        }


def verify_seed_conditions(sf: StandardForm) -> SeedReport:
    """Recheck both seed conditions from scratch.

    Seeds plus primaries must have independent X-vectors, and every seed
    must commute with every secondary generator.
    """
    primary, secondary, seeds = classify(sf, original_order=False)
    rank = rank_of_vectors([p.xbits for p in seeds + primary])
    bad = [
        (i, j)
        for i, s in enumerate(seeds)
        for j, g in enumerate(secondary)
        if not commutes(s, g)
    ]
    expected = sf.k + sf.b
    return SeedReport(rank == expected, not bad, rank, expected, bad)


def block_shape_problems(sf: StandardForm) -> list[str]:
    """Everything about ``sf`` that violates the standard-form layout."""
    n, k, r2, r1, b = sf.n, sf.k, sf.r2, sf.r1, sf.b
    x = sf.x_star.to_array()
    z = sf.z_star.to_array()
    xs = sf.x_seed.to_array()
    zs = sf.z_seed.to_array()
    problems = []
    if x.shape != (n, n - k) or xs.shape != (n, k):
        return ["matrix shapes do not match block sizes"]
    if len(sf.signs) != n - k:
        problems.append("sign vector has wrong length")
    if sorted(sf.perm) != list(range(n)):
        problems.append("perm is not a permutation")
    r = r1 + r2
    top = k + r2 + r1
    if x[:, :r].any():
        problems.append("secondary columns have X entries")
    if z[:top, :r2].any():
        problems.append("r2 columns have Z entries outside the bottom block")
    if not np.array_equal(z[k + r2:top, r2:r], np.eye(r1, dtype=np.uint8)):
        problems.append("r1 columns lack the identity block")
    if not np.array_equal(x[top:, r:], np.eye(b, dtype=np.uint8)):
        problems.append("primary columns lack the identity block")
    if zs.any():
        problems.append("seed Z-matrix is not zero")
    expected_seed = np.zeros((n, k), dtype=np.uint8)
    expected_seed[:k, :k] = np.eye(k, dtype=np.uint8)
    expected_seed[k + r2:top, :] = z[:k, r2:r].T
    if not np.array_equal(xs, expected_seed):
        problems.append("seed X-matrix is not [I; 0; B1^T; 0]")
    return problems
