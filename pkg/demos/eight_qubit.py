"""Walk through the eight-qubit code: standard form, circuit, codewords.

Run with ``python3 demos/eight_qubit.py``.
"""

from __future__ import annotations

import numpy as np

from stabenc import compile_code, encode_all, validate_generator_set
from stabenc.formats import emit_circuit

GENERATORS = ["XXXXXXXX", "ZZZZZZZZ", "XIXIZYZY", "XIYZXIYZ", "XZIYIYXZ"]

gs = validate_generator_set(8, GENERATORS)
compiled = compile_code(gs, standard_order=True)
sf = compiled.standard_form

print("block sizes (k, r1, r2, b):", sf.dims)
print("qubit order after elimination:", sf.perm)
print("\naugmented X matrix (seeds | secondary | primary):")
print(sf.x_full)
print("\naugmented Z matrix:")
print(sf.z_full)

print("\ncircuit, standard-form wire order:")
print(emit_circuit(compiled.circuit))
counts = compiled.counts
print(f"one-qubit {counts.one_qubit}, two-qubit {counts.two_qubit} "
      f"(bound {counts.two_qubit_bound}), total bound {counts.total_bound}")

# every data word becomes a 16-term superposition with amplitudes +-1/4
states = encode_all(compile_code(gs).circuit)
for col in range(states.shape[1]):
    amps = states[:, col]
    support = np.flatnonzero(np.abs(amps) > 1e-12)
    word = format(col, "03b")
    signs = "".join("+" if amps[i] > 0 else "-" for i in support)
    print(f"|{word}> -> {len(support)} terms, signs {signs}")
print("Gram matrix is identity:", np.allclose(states.T @ states, np.eye(8)))
