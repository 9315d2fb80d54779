"""Encoding circuits for stabilizer codes."""

from __future__ import annotations

from .gf2 import BitMatrix, rank, solve
from .pauli import (
    GeneratorSet,
    InvalidGeneratorSet,
    PauliError,
    PauliString,
    commutes,
    multiply,
    validate_generator_set,
)
from .pipeline import Compiled, VerifyReport, compile_code, verify
from .random_codes import gen_random_code
from .sim import (
    SimulationCapExceeded,
    StateVector,
    apply_circuit,
    check_codeword,
    encode_all,
    encode_oracle,
)
from .standard_form import StandardForm, compute_standard_form, verify_seed_conditions
from .synth import EncodingCircuit, Gate, GateKind, count_report, reverse, synthesize

__all__ = [
    "BitMatrix", "rank", "solve",
    "GeneratorSet", "InvalidGeneratorSet", "PauliError", "PauliString",
    "commutes", "multiply", "validate_generator_set",
    "Compiled", "VerifyReport", "compile_code", "verify",
    "gen_random_code",
    "SimulationCapExceeded", "StateVector", "apply_circuit", "check_codeword",
    "encode_all", "encode_oracle",
    "StandardForm", "compute_standard_form", "verify_seed_conditions",
    "EncodingCircuit", "Gate", "GateKind", "count_report", "reverse", "synthesize",
]
