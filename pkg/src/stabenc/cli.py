"""Command-line front end.

Exit codes: 0 success, 1 invalid input or failed verification, 2 I/O
error, 3 simulator cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .formats import (
    FormatError,
    emit_circuit,
    emit_stabilizer,
    parse_circuit,
    parse_stabilizer,
    parse_state,
    emit_state,
)
from .pauli import InvalidGeneratorSet, validate_generator_set
from .pipeline import compile_code, verify
from .random_codes import gen_random_code
from .sim import DEFAULT_CAP, SimulationCapExceeded, apply_circuit_array, input_state
from .synth import reverse

EXIT_OK, EXIT_INVALID, EXIT_IO, EXIT_CAP = 0, 1, 2, 3


class _Exit(Exception):
    def __init__(self, code: int, payload: dict):
        self.code, self.payload = code, payload


def _read(path: str) -> bytes:
    try:
        return sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    except OSError as exc:
        raise _Exit(EXIT_IO, {"error": "IOError", "message": str(exc)}) from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise _Exit(EXIT_IO, {"error": "IOError", "message": str(exc)}) from None


def _load_code(path: str, standard_order: bool = False):
    try:
        sfile = parse_stabilizer(_read(path))
        gs = validate_generator_set(sfile.n, sfile.generators)
    except FormatError as exc:
        payload = {"error": "ParseError", "message": str(exc)}
        if exc.line is not None:
            payload["line"] = exc.line
        if exc.column is not None:
            payload["column"] = exc.column
        raise _Exit(EXIT_INVALID, payload) from None
    except InvalidGeneratorSet as exc:
        raise _Exit(EXIT_INVALID, exc.to_dict()) from None
    return compile_code(gs, standard_order=standard_order)


def _bits(text: str, k: int) -> list[int]:
    if len(text) != k or set(text) - {"0", "1"}:
        raise _Exit(EXIT_INVALID, {
            "error": "BadData", "message": f"expected {k} data bits, got {text!r}",
        })
    return [int(ch) for ch in text]


def cmd_compile(args) -> int:
    compiled = _load_code(args.input, args.standard_order)
    sf, counts = compiled.standard_form, compiled.counts
    if args.output:
        _write(args.output, emit_circuit(compiled.circuit))
    if args.json:
        out = {"standard_form": sf.to_dict(), "counts": counts.to_dict()}
        if not args.output:
            out["circuit"] = emit_circuit(compiled.circuit)
        print(json.dumps(out, indent=2, sort_keys=True))
        return EXIT_OK
    if not args.output:
        sys.stdout.write(emit_circuit(compiled.circuit))
        return EXIT_OK
    print(f"n={sf.n} d={sf.d} k={sf.k} r1={sf.r1} r2={sf.r2} b={sf.b}")
    print(f"one-qubit gates: {counts.one_qubit}")
    print(f"two-qubit gates: {counts.two_qubit} (bound {counts.two_qubit_bound})")
    print(f"fix-up gates:    {counts.fixup}")
    print(f"total:           {counts.total} (bound {counts.total_bound})")
    print("bounds: " + ("OK" if counts.ok else "EXCEEDED"))
    return EXIT_OK


def cmd_verify(args) -> int:
    compiled = _load_code(args.input)
    circuit = None
    if args.circuit:
        try:
            circuit = parse_circuit(_read(args.circuit))
        except FormatError as exc:
            raise _Exit(EXIT_INVALID, {"error": "ParseError", "message": str(exc)}) from None
    report = verify(compiled, circuit, cap=args.cap, seed=args.seed, skip_sim=args.skip_sim)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        status = "PASS" if report.passed else "FAIL"
        kind = "exhaustive" if report.exhaustive else "sampled"
        print(f"{status}: {report.words_checked} codewords checked ({kind})")
        if report.simulated:
            print(f"  max oracle distance:      {report.oracle_distance:.3e}")
            print(f"  max stabilizer residual:  {report.stabilizer_residual:.3e}")
            print(f"  max orthogonality error:  {report.orthogonality:.3e}")
            print(f"  max decode infidelity:    {report.decode_infidelity:.3e}")
        else:
            print("  simulation skipped")
        for problem in report.problems:
            print(f"  problem: {problem}")
    return EXIT_OK if report.passed else EXIT_INVALID


def cmd_encode(args) -> int:
    compiled = _load_code(args.input)
    circuit = compiled.circuit
    data = _bits(args.data, circuit.k)
    state = input_state(circuit, data, args.cap).amps
    out = apply_circuit_array(state, circuit, args.cap)
    _write(args.output, emit_state(out, circuit.n))
    return EXIT_OK


def cmd_decode(args) -> int:
    compiled = _load_code(args.input)
    circuit = compiled.circuit
    try:
        n, amps = parse_state(_read(args.state))
    except FormatError as exc:
        raise _Exit(EXIT_INVALID, {"error": "ParseError", "message": str(exc)}) from None
    if n != circuit.n:
        raise _Exit(EXIT_INVALID, {
            "error": "BadState", "message": f"state has {n} qubits, code has {circuit.n}",
        })
    back = apply_circuit_array(amps, reverse(circuit), args.cap)
    probs = back**2
    best = int(np.argmax(probs))
    bits = format(best, f"0{n}b") if n else ""
    data = "".join(bits[w] for w in circuit.data_wires)
    clean = input_state(circuit, [int(ch) for ch in data], args.cap).amps
    weight = float(probs[clean != 0].sum()) if circuit.k or n else 1.0
    if abs(1.0 - weight) > 1e-10:
        print(
            f"warning: input is not a codeword (ancilla-nonzero weight {1.0 - weight:.3e})",
            file=sys.stderr,
        )
    print(data)
    return EXIT_OK


def cmd_random(args) -> int:
    try:
        gs = gen_random_code(args.n, args.d, args.seed, negate_signs=args.negate_signs)
    except ValueError as exc:
        raise _Exit(EXIT_INVALID, {"error": "BadArguments", "message": str(exc)}) from None
    comment = f"random code n={args.n} d={args.d} seed={args.seed}"
    _write(args.output, emit_stabilizer(gs.n, gs.generators, [comment]))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stabenc", description="Compile stabilizer generators into encoding circuits."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compile", help="write the encoding circuit for a stabilizer file")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    p.add_argument("--standard-order", action="store_true",
                   help="keep wires in standard-form order")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("verify", help="simulate and check the encoder")
    p.add_argument("input")
    p.add_argument("--circuit", help="check this circuit file instead of recompiling")
    p.add_argument("--json", action="store_true")
    p.add_argument("--skip-sim", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("encode", help="print the codeword for a data word")
    p.add_argument("input")
    p.add_argument("data")
    p.add_argument("-o", "--output")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="recover data bits from a codeword state file")
    p.add_argument("input")
    p.add_argument("state")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("random", help="emit a random stabilizer file")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--negate-signs", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_random)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        print(json.dumps(exc.payload, sort_keys=True), file=sys.stderr)
        return exc.code
    except SimulationCapExceeded as exc:
        payload = {"error": "CapExceeded", "message": f"{exc}; rerun with --skip-sim or raise --cap"}
        print(json.dumps(payload, sort_keys=True), file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
