"""Signed Pauli strings in binary (x, z, sign) form.

A string on ``n`` qubits is ``sign * P_0 (x) P_1 (x) ... (x) P_{n-1}`` where
each factor is ``X**x_q @ Z**z_q``.  Y is the *real* matrix ``X @ Z`` (so
``Y = [[0, -1], [1, 0]]``), which keeps every operator real and every phase
in {+1, -1}.

Bit ``q`` of the integer masks ``xbits``/``zbits`` is qubit ``q``; qubit 0 is
the leftmost character of the string form and the most significant bit of a
statevector index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .gf2 import popcount, rank_of_vectors

_FACTOR_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_FACTOR = {v: k for k, v in _FACTOR_BITS.items()}

_I2 = np.eye(2)
_X2 = np.array([[0.0, 1.0], [1.0, 0.0]])
_Z2 = np.array([[1.0, 0.0], [0.0, -1.0]])


class PauliError(ValueError):
    """Malformed Pauli literal or incompatible operands."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class PauliString:
    n: int
    xbits: int
    zbits: int
    sign: int = 1

    def __post_init__(self):
        if self.n < 0:
            raise PauliError("qubit count must be non-negative")
        if self.sign not in (1, -1):
            raise PauliError(f"sign must be +1 or -1, got {self.sign!r}")
        limit = 1 << self.n
        if not (0 <= self.xbits < limit and 0 <= self.zbits < limit):
            raise PauliError("x/z bits outside the qubit range")

    @classmethod
    def identity(cls, n: int) -> PauliString:
        return cls(n, 0, 0, 1)

    @classmethod
    def from_bits(cls, x: Sequence[int], z: Sequence[int], sign: int = 1) -> PauliString:
        if len(x) != len(z):
            raise PauliError("x and z vectors differ in length")
        xb = sum(1 << q for q, v in enumerate(x) if v)
        zb = sum(1 << q for q, v in enumerate(z) if v)
        return cls(len(x), xb, zb, sign)

    @classmethod
    def from_string(cls, text: str) -> PauliString:
        """Parse ``[+|-]`` followed by one or more of ``IXYZ``.

        >>> PauliString.from_string("-XY").sign
        -1
        """
        sign = 1
        body = text
        offset = 0
        if body[:1] in ("+", "-"):
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
            offset = 1
        if not body:
            raise PauliError("empty Pauli literal", position=offset)
        xb = zb = 0
        for q, ch in enumerate(body):
            try:
                bx, bz = _FACTOR_BITS[ch]
            except KeyError:
                raise PauliError(
                    f"invalid Pauli character {ch!r} at position {q + offset}",
                    position=q + offset,
                ) from None
            xb |= bx << q
            zb |= bz << q
        return cls(len(body), xb, zb, sign)

    def to_string(self) -> str:
        return ("+" if self.sign == 1 else "-") + "".join(self.factors())

    def __str__(self) -> str:
        return self.to_string()

    def factors(self) -> list[str]:
        return [
            _BITS_FACTOR[((self.xbits >> q) & 1, (self.zbits >> q) & 1)] for q in range(self.n)
        ]

    @property
    def x(self) -> np.ndarray:
        return np.array([(self.xbits >> q) & 1 for q in range(self.n)], dtype=np.uint8)

    @property
    def z(self) -> np.ndarray:
        return np.array([(self.zbits >> q) & 1 for q in range(self.n)], dtype=np.uint8)

    @property
    def y_count(self) -> int:
        return popcount(self.xbits & self.zbits)

    @property
    def weight(self) -> int:
        return popcount(self.xbits | self.zbits)

    def symplectic(self) -> int:
        """The length-2n vector (x || z) packed as ``xbits | zbits << n``."""
        return self.xbits | (self.zbits << self.n)

    def __neg__(self) -> PauliString:
        return PauliString(self.n, self.xbits, self.zbits, -self.sign)

    def __mul__(self, other: PauliString) -> PauliString:
        return multiply(self, other)

    def unsigned(self) -> PauliString:
        return PauliString(self.n, self.xbits, self.zbits, 1)

    def permuted(self, perm: Sequence[int]) -> PauliString:
        """Relabel qubits: factor at position ``i`` moves to ``perm[i]``."""
        if len(perm) != self.n:
            raise PauliError("permutation length does not match qubit count")
        xb = zb = 0
        for i, target in enumerate(perm):
            xb |= ((self.xbits >> i) & 1) << target
            zb |= ((self.zbits >> i) & 1) << target
        return PauliString(self.n, xb, zb, self.sign)

    def index_masks(self) -> tuple[int, int]:
        """x and z masks in statevector index order (qubit 0 = MSB)."""
        return _reverse_bits(self.xbits, self.n), _reverse_bits(self.zbits, self.n)

    def apply_to_basis(self, index: int) -> tuple[int, int]:
        """Act on the basis state ``|index>``; returns ``(phase, new_index)``."""
        xm, zm = self.index_masks()
        phase = -self.sign if popcount(zm & index) & 1 else self.sign
        return phase, index ^ xm

    def matrix(self) -> np.ndarray:
        """Dense ``2**n x 2**n`` matrix (for small-n cross checks)."""
        m = np.eye(1)
        for q in range(self.n):
            f = _I2
            if (self.xbits >> q) & 1:
                f = _X2
            if (self.zbits >> q) & 1:
                f = f @ _Z2
            m = np.kron(m, f)
        return self.sign * m


def _reverse_bits(v: int, n: int) -> int:
    out = 0
    for q in range(n):
        if (v >> q) & 1:
            out |= 1 << (n - 1 - q)
    return out


def _check_same_size(a: PauliString, b: PauliString) -> None:
    if a.n != b.n:
        raise PauliError(f"qubit count mismatch: {a.n} vs {b.n}")


def multiply(a: PauliString, b: PauliString) -> PauliString:
    """Operator product ``a @ b``.

    Per qubit ``(X^x1 Z^z1)(X^x2 Z^z2) = (-1)^(z1 x2) X^(x1^x2) Z^(z1^z2)``.
    """
    _check_same_size(a, b)
    sign = a.sign * b.sign
    if popcount(a.zbits & b.xbits) & 1:
        sign = -sign
    return PauliString(a.n, a.xbits ^ b.xbits, a.zbits ^ b.zbits, sign)


def symplectic_product(a: PauliString, b: PauliString) -> int:
    _check_same_size(a, b)
    return (popcount(a.xbits & b.zbits) + popcount(a.zbits & b.xbits)) & 1


def commutes(a: PauliString, b: PauliString) -> bool:
    return symplectic_product(a, b) == 0


def squares_to_plus_identity(a: PauliString) -> bool:
    # sign**2 == 1 always; (XZ)**2 == -I per Y factor
    return a.y_count % 2 == 0


class InvalidGeneratorSet(ValueError):
    """Base class for generator-set validation failures."""

    kind = "InvalidGeneratorSet"

    def to_dict(self) -> dict:
        return {"error": self.kind, "message": str(self)}


class AnticommutingPair(InvalidGeneratorSet):
    kind = "AnticommutingPair"

    def __init__(self, i: int, j: int):
        super().__init__(f"generators {i} and {j} anticommute")
        self.i, self.j = i, j

    def to_dict(self) -> dict:
        return {**super().to_dict(), "generators": [self.i, self.j]}


class NegativeSquare(InvalidGeneratorSet):
    kind = "NegativeSquare"

    def __init__(self, i: int):
        super().__init__(f"generator {i} squares to -I (odd number of Y factors)")
        self.i = i

    def to_dict(self) -> dict:
        return {**super().to_dict(), "generators": [self.i]}


class DependentGenerators(InvalidGeneratorSet):
    kind = "DependentGenerators"

    def __init__(self, rank: int, d: int):
        super().__init__(f"generators are dependent: rank {rank} < {d}")
        self.rank, self.d = rank, d


class TooManyGenerators(InvalidGeneratorSet):
    kind = "TooManyGenerators"

    def __init__(self, d: int, n: int):
        super().__init__(f"{d} generators on {n} qubits (need d <= n)")
        self.d, self.n = d, n


class LengthMismatch(InvalidGeneratorSet):
    kind = "LengthMismatch"

    def __init__(self, i: int, length: int, n: int):
        super().__init__(f"generator {i} has length {length}, expected {n}")
        self.i = i

    def to_dict(self) -> dict:
        return {**super().to_dict(), "generators": [self.i]}


@dataclass(frozen=True)
class GeneratorSet:
    """Independent, mutually commuting generators of a stabilizer group.

    Build through :func:`validate_generator_set`; the constructor does not
    re-check the invariants.
    """

    n: int
    generators: tuple[PauliString, ...]

    @property
    def d(self) -> int:
        return len(self.generators)

    @property
    def k(self) -> int:
        return self.n - len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __getitem__(self, i: int) -> PauliString:
        return self.generators[i]


def validate_generator_set(n: int, generators: Sequence[PauliString | str]) -> GeneratorSet:
    gens = tuple(PauliString.from_string(g) if isinstance(g, str) else g for g in generators)
    for i, g in enumerate(gens):
        if g.n != n:
            raise LengthMismatch(i, g.n, n)
    d = len(gens)
    for i, g in enumerate(gens):
        if not squares_to_plus_identity(g):
            raise NegativeSquare(i)
    for i in range(d):
        for j in range(i + 1, d):
            if not commutes(gens[i], gens[j]):
                raise AnticommutingPair(i, j)
    # a commuting independent set never exceeds n; report the size first anyway
    if d > n:
        raise TooManyGenerators(d, n)
    r = rank_of_vectors(g.symplectic() for g in gens)
    if r < d:
        raise DependentGenerators(r, d)
    return GeneratorSet(n, gens)
