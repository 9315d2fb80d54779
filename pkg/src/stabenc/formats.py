"""Text formats: stabilizer files, circuit files and sparse state dumps.

Stabilizer file::

    # comment
    n 8
    XXXXXXXX
    -ZZZZZZZZ

Circuit file (0-based wires, one gate per line after the header)::

    stabenc-circuit 1
    n 8
    k 3
    r 1
    r1 1
    b 4
    roles c1 c2 c3 0 a1 a2 a3 a4
    perm 0 1 2 3 4 5 6 7
    fixup +IIIIIIII
    reversed 0
    gates 24
    Q 4
    CX 0 3
    ...

State file: one ``<bitstring> <amplitude>`` pair per line.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .pauli import PauliError, PauliString
from .synth import EncodingCircuit, Gate, GateKind, TWO_QUBIT

CIRCUIT_MAGIC = "stabenc-circuit 1"


class FormatError(ValueError):
    """Malformed input file; ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line, self.column = line, column


@dataclass
class StabilizerFile:
    n: int
    generators: list[PauliString]
    comments: list[str]


def parse_stabilizer(data: bytes | str) -> StabilizerFile:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    n: int | None = None
    gens: list[PauliString] = []
    comments: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        if line.split()[0] == "n":
            parts = line.split()
            if len(parts) != 2 or not parts[1].isdigit():
                raise FormatError("expected 'n <int>'", lineno)
            if n is not None or gens:
                raise FormatError("'n' directive must come first and only once", lineno)
            n = int(parts[1])
            continue
        indent = len(raw) - len(raw.lstrip())
        try:
            p = PauliString.from_string(line)
        except PauliError as exc:
            col = None if exc.position is None else exc.position + indent + 1
            raise FormatError(str(exc), lineno, col) from None
        if n is None:
            n = p.n
        elif p.n != n:
            raise FormatError(f"generator has length {p.n}, expected {n}", lineno)
        gens.append(p)
    if n is None:
        raise FormatError("no generators and no 'n' directive")
    return StabilizerFile(n, gens, comments)


def emit_stabilizer(n: int, generators, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"n {n}")
    lines.extend(str(g) for g in generators)
    return "\n".join(lines) + "\n"


def emit_circuit(circuit: EncodingCircuit) -> str:
    c = circuit
    lines = [
        CIRCUIT_MAGIC,
        f"n {c.n}",
        f"k {c.k}",
        f"r {c.r}",
        f"r1 {c.r1}",
        f"b {c.b}",
        "roles " + " ".join(c.wire_roles),
        "perm " + " ".join(str(w) for w in c.perm),
        f"fixup {c.fixup}",
        f"reversed {int(c.reversed_)}",
        f"gates {len(c.gates)}",
    ]
    lines.extend(str(g) for g in c.gates)
    return "\n".join(lines) + "\n"


_HEADER = ("n", "k", "r", "r1", "b", "roles", "perm", "fixup", "reversed", "gates")


def parse_circuit(data: bytes | str) -> EncodingCircuit:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    lines = [
        (i, ln.strip()) for i, ln in enumerate(text.splitlines(), start=1)
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines or lines[0][1] != CIRCUIT_MAGIC:
        raise FormatError(f"missing '{CIRCUIT_MAGIC}' header", lines[0][0] if lines else None)
    header: dict[str, list[str]] = {}
    pos = 1
    for key in _HEADER:
        if pos >= len(lines):
            raise FormatError(f"header ends before '{key}'")
        lineno, line = lines[pos]
        parts = line.split()
        if parts[0] != key:
            raise FormatError(f"expected '{key}', got '{parts[0]}'", lineno)
        header[key] = parts[1:]
        pos += 1
    try:
        n, k, r, r1, b = (int(header[key][0]) for key in ("n", "k", "r", "r1", "b"))
        count = int(header["gates"][0])
        perm = tuple(int(v) for v in header["perm"])
        reversed_ = bool(int(header["reversed"][0]))
    except (IndexError, ValueError):
        raise FormatError("malformed numeric header field") from None
    roles = tuple(header["roles"])
    if len(roles) != n or len(perm) != n:
        raise FormatError("roles/perm length does not match n")
    gates = []
    for lineno, line in lines[pos:]:
        gates.append(_parse_gate(line, lineno, n))
    if len(gates) != count:
        raise FormatError(f"header announces {count} gates, found {len(gates)}")
    circuit = EncodingCircuit(n, k, r, r1, b, tuple(gates), roles, perm, reversed_)
    fix = header["fixup"]
    if len(fix) != 1 or fix[0] != str(circuit.fixup):
        raise FormatError("fixup summary does not match the gate list")
    return circuit


def _parse_gate(line: str, lineno: int, n: int) -> Gate:
    parts = line.split()
    try:
        kind = GateKind(parts[0])
    except ValueError:
        raise FormatError(f"unknown gate kind {parts[0]!r}", lineno, 1) from None
    want = 3 if kind in TWO_QUBIT else 2
    if len(parts) != want:
        raise FormatError(f"{kind} takes {want - 1} wire index(es)", lineno)
    try:
        wires = [int(v) for v in parts[1:]]
    except ValueError:
        raise FormatError("wire indices must be integers", lineno) from None
    if any(not 0 <= w < n for w in wires):
        raise FormatError("wire index out of range", lineno)
    try:
        if kind in TWO_QUBIT:
            return Gate(kind, wires[1], wires[0])
        return Gate(kind, wires[0])
    except ValueError as exc:
        raise FormatError(str(exc), lineno) from None


def emit_state(amps: np.ndarray, n: int, tol: float = 1e-12) -> str:
    lines = []
    for i in np.flatnonzero(np.abs(amps) > tol):
        bits = format(int(i), f"0{n}b") if n else ""
        lines.append(f"{bits} {float(amps[i]):+}")
    return "\n".join(lines) + "\n"


def parse_state(data: bytes | str, n: int | None = None) -> tuple[int, np.ndarray]:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or set(parts[0]) - {"0", "1"}:
            raise FormatError("expected '<bitstring> <amplitude>'", lineno)
        try:
            amp = float(parts[1])
        except ValueError:
            raise FormatError("amplitude is not a number", lineno) from None
        if n is None:
            n = len(parts[0])
        elif len(parts[0]) != n:
            raise FormatError(f"bit string length {len(parts[0])}, expected {n}", lineno)
        entries.append((int(parts[0], 2), amp))
    if n is None:
        raise FormatError("empty state file")
    amps = np.zeros(1 << n)
    for index, amp in entries:
        amps[index] += amp
    return n, amps
