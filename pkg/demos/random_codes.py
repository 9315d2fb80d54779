"""Compile and verify a batch of random codes.

Each code is drawn by scrambling ``Z`` generators with random Clifford
conjugations, then checked against the brute-force codeword sum.
"""

from __future__ import annotations

import time

from stabenc import compile_code, gen_random_code, verify

start = time.perf_counter()
worst = 0.0
for seed in range(40):
    n = 2 + seed % 7
    d = 1 + seed % n
    gs = gen_random_code(n, d, seed, negate_signs=True)
    compiled = compile_code(gs)
    report = verify(compiled)
    c = compiled.counts
    worst = max(worst, report.oracle_distance, report.stabilizer_residual)
    print(
        f"seed {seed:2d}  n={n} d={d}  dims={compiled.standard_form.dims}  "
        f"gates {c.total:3d} <= {c.total_bound:3d}  {'PASS' if report.passed else 'FAIL'}"
    )
print(f"worst deviation {worst:.1e} in {time.perf_counter() - start:.2f} s")
