"""Encoding gate arrays from a standard form.

The encoder maps ``|c> (x) |0...0> (x) |0...0>`` (data, ``r`` zero ancillas,
``b`` primary-control wires, in standard-form order) to the codeword

    2^(-b/2) * sum_a  M_1^a_1 ... M_b^a_b  N_1^c_1 ... N_k^c_k |0...0>

in three layers:

1. ``Q`` on every primary-control wire, giving the uniform sum over ``a``
   (``R`` instead where the primary generator carries sign -1).
2. Every seed column, then every primary column, applied as a Pauli
   controlled by the wire holding that column's identity entry.  Factors
   are ``CX``/``CY``/``CZ`` according to the column's (X, Z) bits.
3. ``X-fix`` gates, present only when some secondary generator carries
   sign -1.

The controlled form differs from the literal product above in one place:
when primary ``j`` is applied, primary-control wires of *later* columns
already hold their ``a`` value in the circuit but are still ``|0>`` in the
product.  A Z factor there must act as identity, so those CZ targets are
not emitted.  For the same reason the Z part of the diagonal entry never
contributes (it meets ``|0>`` before the X flips it).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Sequence

from .gf2 import solve
from .pauli import PauliString, symplectic_product
from .standard_form import StandardForm


class GateKind(str, enum.Enum):
    Q = "Q"
    R = "R"  # Q, then Z
    Z = "Z"
    CX = "CX"
    CY = "CY"  # controlled real Y = X Z
    CZ = "CZ"
    RINV = "Rinv"  # Z, then Q
    CYINV = "CYinv"  # controlled Y^T
    XFIX = "X-fix"
    ZFIX = "Z-fix"

    def __str__(self) -> str:
        return self.value


ONE_QUBIT = frozenset({GateKind.Q, GateKind.R, GateKind.Z, GateKind.RINV})
TWO_QUBIT = frozenset({GateKind.CX, GateKind.CY, GateKind.CZ, GateKind.CYINV})
FIXUP = frozenset({GateKind.XFIX, GateKind.ZFIX})

_INVERSE = {
    GateKind.R: GateKind.RINV,
    GateKind.RINV: GateKind.R,
    GateKind.CY: GateKind.CYINV,
    GateKind.CYINV: GateKind.CY,
}


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    target: int
    control: int | None = None

    def __post_init__(self):
        kind = GateKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind in TWO_QUBIT:
            if self.control is None:
                raise ValueError(f"{kind} needs a control wire")
            if self.control == self.target:
                raise ValueError(f"{kind} control and target coincide")
        elif self.control is not None:
            raise ValueError(f"{kind} is a one-qubit gate")

    def inverse(self) -> Gate:
        return Gate(_INVERSE.get(self.kind, self.kind), self.target, self.control)

    def relabel(self, mapping: Sequence[int]) -> Gate:
        control = None if self.control is None else mapping[self.control]
        return Gate(self.kind, mapping[self.target], control)

    def wires(self) -> tuple[int, ...]:
        return (self.target,) if self.control is None else (self.control, self.target)

    def __str__(self) -> str:
        if self.control is None:
            return f"{self.kind} {self.target}"
        return f"{self.kind} {self.control} {self.target}"


@dataclass(frozen=True)
class EncodingCircuit:
    """A gate list over ``n`` wires with the code's role bookkeeping.

    ``wire_roles[w]`` is ``"c<i>"`` (data, 1-based), ``"0"`` (zero ancilla)
    or ``"a<j>"`` (primary control, 1-based).  ``perm[q]`` is the wire that
    carries standard-form row ``q``; it is the identity for circuits kept in
    standard-form order.
    """

    n: int
    k: int
    r: int
    r1: int
    b: int
    gates: tuple[Gate, ...]
    wire_roles: tuple[str, ...]
    perm: tuple[int, ...]
    reversed_: bool = field(default=False, compare=True)

    @property
    def d(self) -> int:
        return self.n - self.k

    @property
    def data_wires(self) -> list[int]:
        return [self.wire_roles.index(f"c{i + 1}") for i in range(self.k)]

    @property
    def fixup(self) -> PauliString:
        """The trailing ``X-fix``/``Z-fix`` layer as one Pauli string."""
        xb = zb = 0
        for g in self.gates:
            if g.kind is GateKind.XFIX:
                xb ^= 1 << g.target
            elif g.kind is GateKind.ZFIX:
                zb ^= 1 << g.target
        return PauliString(self.n, xb, zb)

    def without_gate(self, index: int) -> EncodingCircuit:
        gates = self.gates[:index] + self.gates[index + 1:]
        return replace(self, gates=gates)

    def __len__(self) -> int:
        return len(self.gates)


def _wire_roles(k: int, r: int, b: int) -> list[str]:
    return [f"c{i + 1}" for i in range(k)] + ["0"] * r + [f"a{j + 1}" for j in range(b)]


def synthesize(
    sf: StandardForm,
    *,
    standard_order: bool = False,
    primary_order: Sequence[int] | None = None,
    fixup: bool = True,
) -> EncodingCircuit:
    """Build the encoder for ``sf``.

    Args:
        sf: the standard form to encode.
        standard_order: keep wires in standard-form order instead of
            relabelling them to the original qubit positions.
        primary_order: processing order of the primary columns (indices
            ``0..b-1``); defaults to ascending.
        fixup: repair generators with sign -1 (R gates plus X-fix
            layer).  Without it the circuit encodes the unsigned code.
    """
    n, k, r, b = sf.n, sf.k, sf.r, sf.b
    order = list(range(b)) if primary_order is None else list(primary_order)
    if sorted(order) != list(range(b)):
        raise ValueError("primary_order must be a permutation of range(b)")

    repair = solve_sign_fixup(sf, original_order=False) if fixup else PauliString.identity(n)
    gates: list[Gate] = []
    for j in range(b):
        wire = sf.primary_wire(j)
        # a Z after Q on a control wire commutes to the end of the circuit
        kind = GateKind.R if (repair.zbits >> wire) & 1 else GateKind.Q
        gates.append(Gate(kind, wire))

    for i in range(k):
        col = sf.x_seed.column(i)
        for q in range(n):
            if q != i and (col >> q) & 1:
                gates.append(Gate(GateKind.CX, q, i))

    # secondary columns emit nothing: they fix the input by construction
    pending = set(range(n - b, n))
    for j in order:
        wire = sf.primary_wire(j)
        pending.discard(wire)
        xc = sf.x_star.column(r + j)
        zc = sf.z_star.column(r + j)
        for q in range(n):
            if q == wire:
                continue
            xq, zq = (xc >> q) & 1, (zc >> q) & 1
            if xq and zq:
                gates.append(Gate(GateKind.CY, q, wire))
            elif xq:
                gates.append(Gate(GateKind.CX, q, wire))
            elif zq and q not in pending:
                gates.append(Gate(GateKind.CZ, q, wire))

    gates.extend(Gate(GateKind.XFIX, q) for q in range(n) if (repair.xbits >> q) & 1)

    circuit = EncodingCircuit(
        n, k, r, sf.r1, b, tuple(gates), tuple(_wire_roles(k, r, b)), tuple(range(n))
    )
    return circuit if standard_order else relabel(circuit, sf.perm)


def relabel(circuit: EncodingCircuit, mapping: Sequence[int]) -> EncodingCircuit:
    """Move wire ``w`` to ``mapping[w]``."""
    mapping = list(mapping)
    if sorted(mapping) != list(range(circuit.n)):
        raise ValueError("mapping must be a permutation of the wires")
    roles = [""] * circuit.n
    for w, role in enumerate(circuit.wire_roles):
        roles[mapping[w]] = role
    return replace(
        circuit,
        gates=tuple(g.relabel(mapping) for g in circuit.gates),
        wire_roles=tuple(roles),
        perm=tuple(mapping[w] for w in circuit.perm),
    )


def solve_sign_fixup(sf: StandardForm, original_order: bool = True) -> PauliString:
    """Pauli ``P`` that anticommutes exactly with the ``-1``-signed generators.

    Applying ``P`` to an encoder built from unsigned generators lands in the
    +1 eigenspace of the signed ones.  ``P`` is restricted so it costs few
    gates: its Z part lives on primary-control wires only (absorbed into
    ``R`` gates) and its X part has weight at most ``r``.  Such a ``P``
    commutes with every seed, so the data basis is untouched.  With all
    signs +1 it is the identity.
    """
    n, b, r = sf.n, sf.b, sf.r
    # unknowns: u (Z bits on the b control wires) then v (X bits, n wires)
    rows, rhs = [], []
    for j in range(sf.d):
        zc = sf.z_star.column(j)
        row = zc << b
        if j >= r:
            row |= 1 << (j - r)
        rows.append(row)
        rhs.append(1 if sf.signs[j] == -1 else 0)
    sol = solve(rows, rhs, b + n)
    if sol is None:
        raise AssertionError("sign fix-up system is inconsistent; standard form is corrupt")
    zbits = 0
    for j in range(b):
        if (sol >> j) & 1:
            zbits |= 1 << sf.primary_wire(j)
    p = PauliString(n, sol >> b, zbits)
    for j in range(sf.d):
        assert symplectic_product(sf.generator(j, False), p) == (sf.signs[j] == -1)
    for i in range(sf.k):
        assert symplectic_product(sf.seed(i, False), p) == 0
    return p.permuted(sf.perm) if original_order else p


def reverse(circuit: EncodingCircuit) -> EncodingCircuit:
    """The inverse circuit: gates reversed and individually inverted."""
    return replace(
        circuit,
        gates=tuple(g.inverse() for g in reversed(circuit.gates)),
        reversed_=not circuit.reversed_,
    )


@dataclass(frozen=True)
class CountReport:
    one_qubit: int
    two_qubit: int
    fixup: int
    two_qubit_bound: int
    total_bound: int

    @property
    def total(self) -> int:
        return self.one_qubit + self.two_qubit + self.fixup

    @property
    def two_qubit_ok(self) -> bool:
        return self.two_qubit <= self.two_qubit_bound

    @property
    def total_ok(self) -> bool:
        return self.total <= self.total_bound

    @property
    def ok(self) -> bool:
        return self.two_qubit_ok and self.total_ok

    def to_dict(self) -> dict:
        return {
            "one_qubit": self.one_qubit,
            "two_qubit": self.two_qubit,
            "fixup": self.fixup,
            "total": self.total,
            "two_qubit_bound": self.two_qubit_bound,
            "total_bound": self.total_bound,
            "within_bounds": self.ok,
        }


def count_report(circuit: EncodingCircuit) -> CountReport:
    one = sum(g.kind in ONE_QUBIT for g in circuit.gates)
    two = sum(g.kind in TWO_QUBIT for g in circuit.gates)
    fix = sum(g.kind in FIXUP for g in circuit.gates)
    n, k, b = circuit.n, circuit.k, circuit.b
    return CountReport(one, two, fix, circuit.r1 * k + (n - 1) * b, n * circuit.d)
