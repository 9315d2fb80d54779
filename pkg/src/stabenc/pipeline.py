"""End-to-end compile and verification helpers."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .pauli import GeneratorSet
from .sim import (
    DEFAULT_CAP,
    TOL,
    _check_cap,
    apply_circuit_array,
    apply_pauli_array,
    encode_oracle,
    input_state,
)
from .standard_form import StandardForm, block_shape_problems, compute_standard_form, verify_seed_conditions
from .synth import CountReport, EncodingCircuit, count_report, reverse, synthesize

EXHAUSTIVE_K = 10
SAMPLED_WORDS = 64
ORTHO_SAMPLE = 64


@dataclass
class Compiled:
    generators: GeneratorSet
    standard_form: StandardForm
    circuit: EncodingCircuit
    counts: CountReport


def compile_code(gs: GeneratorSet, standard_order: bool = False) -> Compiled:
    sf = compute_standard_form(gs)
    circuit = synthesize(sf, standard_order=standard_order)
    return Compiled(gs, sf, circuit, count_report(circuit))


@dataclass
class VerifyReport:
    words_checked: int
    exhaustive: bool
    oracle_distance: float = 0.0
    stabilizer_residual: float = 0.0
    orthogonality: float = 0.0
    decode_infidelity: float = 0.0
    seed_conditions: bool = True
    block_shape: bool = True
    bounds: bool = True
    simulated: bool = True
    problems: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        if not (self.seed_conditions and self.block_shape and self.bounds):
            return False
        if not self.simulated:
            return True
        return max(
            self.oracle_distance,
            self.stabilizer_residual,
            self.orthogonality,
            self.decode_infidelity,
        ) <= TOL

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "simulated": self.simulated,
            "words_checked": self.words_checked,
            "exhaustive": self.exhaustive,
            "oracle_distance": self.oracle_distance,
            "stabilizer_residual": self.stabilizer_residual,
            "orthogonality": self.orthogonality,
            "decode_infidelity": self.decode_infidelity,
            "seed_conditions": self.seed_conditions,
            "block_shape": self.block_shape,
            "bounds": self.bounds,
            "problems": list(self.problems),
        }


def _words(k: int, seed: int) -> tuple[list[tuple[int, ...]], bool]:
    if k <= EXHAUSTIVE_K:
        return [tuple((w >> (k - 1 - i)) & 1 for i in range(k)) for w in range(1 << k)], True
    rng = np.random.default_rng(seed)
    return [tuple(int(v) for v in rng.integers(2, size=k)) for _ in range(SAMPLED_WORDS)], False


def verify(
    compiled: Compiled,
    circuit: EncodingCircuit | None = None,
    *,
    cap: int = DEFAULT_CAP,
    seed: int = 0,
    skip_sim: bool = False,
) -> VerifyReport:
    """Check a circuit against the brute-force codeword oracle.

    ``circuit`` defaults to the compiled one; pass a different circuit (for
    example one read back from a file) to check it against the same code.
    Data words are exhaustive for ``k <= 10``, otherwise 64 seeded samples.
    """
    sf = compiled.standard_form
    gs = compiled.generators
    circuit = compiled.circuit if circuit is None else circuit
    words, exhaustive = _words(sf.k, seed)
    report = VerifyReport(len(words), exhaustive)

    seeds = verify_seed_conditions(sf)
    report.seed_conditions = seeds.passed
    shape = block_shape_problems(sf)
    report.block_shape = not shape
    report.problems.extend(shape)
    counts = count_report(circuit)
    report.bounds = counts.ok
    if not seeds.passed:
        report.problems.append("seed conditions fail")
    if not counts.ok:
        report.problems.append("gate counts exceed bounds")
    if circuit.n != sf.n or circuit.k != sf.k:
        report.problems.append("circuit does not match the code dimensions")
        report.bounds = False
        return report
    if skip_sim:
        report.simulated = False
        return report
    _check_cap(sf.n, cap)

    n = sf.n
    inverse = reverse(circuit)
    chunk = max(1, (1 << 22) >> n)
    sample = []
    for start in range(0, len(words), chunk):
        batch = words[start:start + chunk]
        inputs = np.stack([input_state(circuit, w, cap).amps for w in batch], axis=1)
        out = apply_circuit_array(inputs, circuit, cap)
        for col, w in enumerate(batch):
            expected = encode_oracle(sf, w, cap).amps
            report.oracle_distance = max(
                report.oracle_distance, float(np.abs(out[:, col] - expected).max())
            )
        for g in gs:
            res = np.linalg.norm(apply_pauli_array(out, n, g) - out, axis=0)
            report.stabilizer_residual = max(report.stabilizer_residual, float(res.max()))
        back = apply_circuit_array(out, inverse, cap)
        fid = np.einsum("ij,ij->j", inputs, back) ** 2
        report.decode_infidelity = max(report.decode_infidelity, float((1.0 - fid).max()))
        for col in range(out.shape[1]):
            if len(sample) < ORTHO_SAMPLE:
                sample.append(out[:, col])
    if len(sample) > 1:
        m = np.stack(sample, axis=1)
        gram = m.T @ m
        off = gram - np.diag(np.diag(gram))
        report.orthogonality = float(np.abs(off).max())
        report.orthogonality = max(report.orthogonality, float(np.abs(np.diag(gram) - 1).max()))
    if report.oracle_distance > TOL:
        report.problems.append("circuit output differs from the oracle")
    if report.stabilizer_residual > TOL:
        report.problems.append("encoded states are not fixed by the generators")
    if report.orthogonality > TOL:
        report.problems.append("encoded states are not orthonormal")
    if report.decode_infidelity > TOL:
        report.problems.append("reversed circuit does not recover the data")
    return report
