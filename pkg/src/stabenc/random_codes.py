"""Random stabilizer codes for property tests.

A code is drawn by starting from ``Z_0, ..., Z_{d-1}`` and conjugating the
whole generator set by random H, CNOT and CZ gates.  With the real
``Y = X Z`` convention the update rules are::

    H(q):       x_q <-> z_q,  sign flips if x_q = z_q = 1
    CNOT(c,t):  x_t ^= x_c,   z_c ^= z_t          (no sign change)
    CZ(a,b):    z_a ^= x_b,   z_b ^= x_a,  sign flips if x_a = x_b = 1
"""

from __future__ import annotations

import numpy as np

from .pauli import GeneratorSet, PauliString, validate_generator_set


def conjugate_h(p: PauliString, q: int) -> PauliString:
    x, z = (p.xbits >> q) & 1, (p.zbits >> q) & 1
    sign = -p.sign if x and z else p.sign
    mask = 1 << q
    xb = (p.xbits & ~mask) | (z << q)
    zb = (p.zbits & ~mask) | (x << q)
    return PauliString(p.n, xb, zb, sign)


def conjugate_cnot(p: PauliString, control: int, target: int) -> PauliString:
    if control == target:
        raise ValueError("CNOT needs distinct wires")
    xb, zb = p.xbits, p.zbits
    xb ^= ((xb >> control) & 1) << target
    zb ^= ((zb >> target) & 1) << control
    return PauliString(p.n, xb, zb, p.sign)


def conjugate_cz(p: PauliString, a: int, b: int) -> PauliString:
    if a == b:
        raise ValueError("CZ needs distinct wires")
    xa, xb_ = (p.xbits >> a) & 1, (p.xbits >> b) & 1
    zb = p.zbits ^ (xb_ << a) ^ (xa << b)
    sign = -p.sign if xa and xb_ else p.sign
    return PauliString(p.n, p.xbits, zb, sign)


def gen_random_code(
    n: int,
    d: int,
    seed: int | np.random.Generator | None = None,
    steps: int | None = None,
    negate_signs: bool = False,
) -> GeneratorSet:
    """Random valid generator set with ``d`` generators on ``n`` qubits.

    Args:
        n: qubit count.
        d: number of generators, ``0 <= d <= n``.
        seed: RNG seed or generator.
        steps: number of random conjugations; ``20 * n`` by default.
        negate_signs: additionally flip each generator's sign with
            probability 1/2.
    """
    if not 0 <= d <= n:
        raise ValueError(f"need 0 <= d <= n, got d={d}, n={n}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    gens = [PauliString(n, 0, 1 << i) for i in range(d)]
    steps = 20 * n if steps is None else steps
    for _ in range(steps):
        kind = rng.integers(3) if n > 1 else 0
        if kind == 0:
            q = int(rng.integers(n))
            gens = [conjugate_h(g, q) for g in gens]
        else:
            a, b = (int(v) for v in rng.choice(n, size=2, replace=False))
            op = conjugate_cnot if kind == 1 else conjugate_cz
            gens = [op(g, a, b) for g in gens]
    if negate_signs:
        flips = rng.integers(2, size=d)
        gens = [-g if f else g for g, f in zip(gens, flips)]
    return validate_generator_set(n, gens)
