"""Dense real statevector simulation used as the verification oracle.

Every gate and Pauli in this package is a real matrix, so amplitudes are
kept as ``float64``.  Qubit 0 is the most significant bit of a basis index.
All kernels act on the leading axis, so a ``(2**n, m)`` array simulates
``m`` states at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .pauli import GeneratorSet, PauliString
from .standard_form import StandardForm, classify
from .synth import EncodingCircuit, Gate, GateKind, solve_sign_fixup

DEFAULT_CAP = 20
TOL = 1e-10

_SQRT_HALF = np.sqrt(0.5)


class SimulationCapExceeded(RuntimeError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"{n} qubits exceeds the simulator cap of {cap}")
        self.n, self.cap = n, cap


class DimensionMismatch(ValueError):
    pass


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise SimulationCapExceeded(n, cap)


@lru_cache(maxsize=64)
def _indices(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


def _bit(n: int, wire: int) -> int:
    return 1 << (n - 1 - wire)


@dataclass
class StateVector:
    n: int
    amps: np.ndarray

    def __post_init__(self):
        self.amps = np.asarray(self.amps, dtype=np.float64)
        if self.amps.shape != (1 << self.n,):
            raise DimensionMismatch(f"expected {1 << self.n} amplitudes, got {self.amps.shape}")

    @classmethod
    def basis(cls, n: int, bits: Sequence[int] | int, cap: int = DEFAULT_CAP) -> StateVector:
        """``|bits>``; ``bits`` is a 0/1 sequence (qubit 0 first) or an index."""
        _check_cap(n, cap)
        if isinstance(bits, (int, np.integer)):
            index = int(bits)
        else:
            if len(bits) != n:
                raise DimensionMismatch(f"need {n} bits, got {len(bits)}")
            index = int("".join(str(int(v)) for v in bits) or "0", 2)
        amps = np.zeros(1 << n)
        amps[index] = 1.0
        return cls(n, amps)

    def copy(self) -> StateVector:
        return StateVector(self.n, self.amps.copy())

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def nonzero(self, tol: float = TOL) -> dict[str, float]:
        """Nonzero amplitudes keyed by bit string."""
        idx = np.flatnonzero(np.abs(self.amps) > tol)
        return {format(int(i), f"0{self.n}b") if self.n else "": float(self.amps[i]) for i in idx}

    def inner(self, other: StateVector) -> float:
        return float(self.amps @ other.amps)


def apply_gate_array(amps: np.ndarray, n: int, gate: Gate) -> np.ndarray:
    """Apply one gate to the leading axis of ``amps``; returns a new array."""
    idx = _indices(n)
    t = _bit(n, gate.target)
    out = amps.copy()
    kind = gate.kind
    if kind in (GateKind.Q, GateKind.R, GateKind.RINV):
        if kind is GateKind.RINV:
            out[(idx & t) != 0] *= -1
        lo = idx[(idx & t) == 0]
        a0 = out[lo].copy()
        a1 = out[lo | t].copy()
        out[lo] = (a0 + a1) * _SQRT_HALF
        out[lo | t] = (a0 - a1) * _SQRT_HALF
        if kind is GateKind.R:
            out[(idx & t) != 0] *= -1
        return out
    if kind in (GateKind.Z, GateKind.ZFIX):
        out[(idx & t) != 0] *= -1
        return out
    if kind is GateKind.XFIX:
        return amps[idx ^ t]
    c = _bit(n, gate.control)
    on = (idx & c) != 0
    if kind is GateKind.CZ:
        out[on & ((idx & t) != 0)] *= -1
        return out
    # controlled X / Y / Y^T: permute, then phase
    src = np.where(on, idx ^ t, idx)
    out = amps[src]
    if kind is GateKind.CY:
        # Y|1> = -|0>
        out[on & ((idx & t) == 0)] *= -1
    elif kind is GateKind.CYINV:
        # Y^T|0> = -|1>
        out[on & ((idx & t) != 0)] *= -1
    return out


def apply_circuit_array(amps: np.ndarray, circuit: EncodingCircuit, cap: int = DEFAULT_CAP) -> np.ndarray:
    n = circuit.n
    _check_cap(n, cap)
    if amps.shape[0] != 1 << n:
        raise DimensionMismatch(f"state has {amps.shape[0]} amplitudes, circuit has {n} wires")
    for g in circuit.gates:
        amps = apply_gate_array(amps, n, g)
    return amps


def apply_circuit(state: StateVector, circuit: EncodingCircuit, cap: int = DEFAULT_CAP) -> StateVector:
    if state.n != circuit.n:
        raise DimensionMismatch(f"state has {state.n} qubits, circuit has {circuit.n}")
    return StateVector(state.n, apply_circuit_array(state.amps, circuit, cap))


def apply_pauli_array(amps: np.ndarray, n: int, p: PauliString) -> np.ndarray:
    if p.n != n:
        raise DimensionMismatch(f"Pauli on {p.n} qubits applied to {n}-qubit state")
    idx = _indices(n)
    xm, zm = p.index_masks()
    # (P a)[i ^ x] = sign * (-1)^{|z & i|} a[i]
    parity = np.bitwise_count(idx & zm) & 1
    phase = p.sign * (1.0 - 2.0 * parity)
    shape = (-1,) + (1,) * (amps.ndim - 1)
    contrib = amps * phase.reshape(shape)
    return contrib[idx ^ xm]


def apply_pauli(state: StateVector, p: PauliString) -> StateVector:
    return StateVector(state.n, apply_pauli_array(state.amps, state.n, p))


def input_state(circuit: EncodingCircuit, data: Sequence[int], cap: int = DEFAULT_CAP) -> StateVector:
    """``|data>`` on the circuit's data wires, ``|0>`` everywhere else."""
    if len(data) != circuit.k:
        raise DimensionMismatch(f"need {circuit.k} data bits, got {len(data)}")
    bits = [0] * circuit.n
    for w, v in zip(circuit.data_wires, data):
        bits[w] = int(v)
    return StateVector.basis(circuit.n, bits, cap)


def data_words(k: int) -> list[tuple[int, ...]]:
    return list(product((0, 1), repeat=k))


def _reference_index(sf: StandardForm) -> int:
    # P|0> = |x_P>: a basis state fixed by every signed secondary generator
    fix = solve_sign_fixup(sf)
    return _bits_to_index(fix.x, sf.n)


def _bits_to_index(bits: Iterable[int], n: int) -> int:
    index = 0
    for v in bits:
        index = (index << 1) | int(v)
    return index


def encode_oracle(sf: StandardForm, data: Sequence[int], cap: int = DEFAULT_CAP) -> StateVector:
    """Literal sum over all ``2**b`` primary products applied to ``N^c |ref>``.

    ``|ref>`` is ``|0...0>`` when every generator sign is +1; otherwise it is
    the basis state ``P|0...0>`` for the sign fix-up Pauli ``P``, which every
    signed secondary generator fixes.  Each Pauli is applied to basis
    states one term at a time; no circuit machinery is involved.
    """
    n = sf.n
    _check_cap(n, cap)
    if len(data) != sf.k:
        raise DimensionMismatch(f"need {sf.k} data bits, got {len(data)}")
    primary, _, seeds = classify(sf)
    phase, index = 1, _reference_index(sf)
    for c, seed in zip(data, seeds):
        if c:
            s, index = seed.apply_to_basis(index)
            phase *= s
    amps = np.zeros(1 << n)
    for a in product((0, 1), repeat=sf.b):
        ph, ix = phase, index
        # rightmost factor acts first: M_b ... M_1
        for aj, m in reversed(list(zip(a, primary))):
            if aj:
                s, ix = m.apply_to_basis(ix)
                ph *= s
        amps[ix] += ph
    return StateVector(n, amps / np.sqrt(2.0**sf.b))


def encode_projector_oracle(sf: StandardForm, data: Sequence[int], cap: int = DEFAULT_CAP) -> StateVector:
    """``2^(-b/2) (I + M_1) ... (I + M_b) N^c |ref>`` on dense vectors."""
    n = sf.n
    _check_cap(n, cap)
    if len(data) != sf.k:
        raise DimensionMismatch(f"need {sf.k} data bits, got {len(data)}")
    primary, _, seeds = classify(sf)
    state = StateVector.basis(n, _reference_index(sf), cap).amps
    for c, seed in zip(data, seeds):
        if c:
            state = apply_pauli_array(state, n, seed)
    for m in reversed(primary):
        state = state + apply_pauli_array(state, n, m)
    return StateVector(n, state / np.sqrt(2.0**sf.b))


@dataclass
class CodewordReport:
    residuals: list[float]

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)

    def passed(self, tol: float = TOL) -> bool:
        return self.max_residual <= tol


def check_codeword(state: StateVector, gs: GeneratorSet | Sequence[PauliString]) -> CodewordReport:
    """Residual ``||G s - s||`` for every (signed) generator ``G``."""
    gens = list(gs)
    res = []
    for g in gens:
        if g.n != state.n:
            raise DimensionMismatch(f"generator on {g.n} qubits vs {state.n}-qubit state")
        res.append(float(np.linalg.norm(apply_pauli_array(state.amps, state.n, g) - state.amps)))
    return CodewordReport(res)


def overlap_matrix(states: Sequence[StateVector]) -> np.ndarray:
    """Gram matrix of real inner products."""
    if not states:
        return np.zeros((0, 0))
    m = np.stack([s.amps for s in states], axis=1)
    return m.T @ m


def encode_all(circuit: EncodingCircuit, cap: int = DEFAULT_CAP) -> np.ndarray:
    """Encoder outputs for every data word as columns (word order of :func:`data_words`)."""
    _check_cap(circuit.n, cap)
    words = data_words(circuit.k)
    inputs = np.zeros((1 << circuit.n, len(words)))
    for col, c in enumerate(words):
        inputs[:, col] = input_state(circuit, c, cap).amps
    return apply_circuit_array(inputs, circuit, cap)
