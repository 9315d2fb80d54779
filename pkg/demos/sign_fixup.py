"""How negative generator signs are handled.

A code with ``-1`` signs is encoded by the unsigned circuit followed by a
Pauli ``P`` that anticommutes with exactly the negative generators.  The Z
part of ``P`` turns some ``Q`` gates into ``R`` gates; the X part becomes a
short trailing layer of ``X-fix`` gates.
"""

from __future__ import annotations

from stabenc import check_codeword, compile_code, validate_generator_set
from stabenc.sim import StateVector, encode_all
from stabenc.synth import solve_sign_fixup

for gens in (["-Z"], ["ZZ", "-XX"], ["-ZZI", "IZZ", "-XXX"]):
    gs = validate_generator_set(len(gens[0].lstrip("+-")), gens)
    compiled = compile_code(gs)
    p = solve_sign_fixup(compiled.standard_form)
    print("generators:", " ".join(str(g) for g in gs))
    print("  fix-up Pauli:", p)
    print("  gates:", ", ".join(str(g) for g in compiled.circuit.gates) or "(none)")
    states = encode_all(compiled.circuit)
    for col in range(states.shape[1]):
        s = StateVector(gs.n, states[:, col])
        print(f"  codeword {col}: {s.nonzero()}  residual {check_codeword(s, gs).max_residual:.1e}")
