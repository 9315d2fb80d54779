from __future__ import annotations

import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from stabenc.pauli import PauliString, commutes, validate_generator_set
from stabenc.random_codes import gen_random_code
from stabenc.sim import StateVector, check_codeword, encode_all
from stabenc.standard_form import StandardForm, compute_standard_form
from stabenc.synth import (
    EncodingCircuit,
    Gate,
    GateKind,
    count_report,
    relabel,
    reverse,
    solve_sign_fixup,
    synthesize,
)

from conftest import EQ8_X, EQ8_Z


def as_drawn(sf: StandardForm) -> EncodingCircuit:
    """Naive gate array: R wherever the diagonal Z entry is set, and a gate
    for every off-diagonal entry of every primary column."""
    gates = []
    for j in range(sf.b):
        w = sf.primary_wire(j)
        gates.append(Gate(GateKind.R if sf.z_star[w, sf.r + j] else GateKind.Q, w))
    for i in range(sf.k):
        for q in range(sf.n):
            if q != i and sf.x_seed[q, i]:
                gates.append(Gate(GateKind.CX, q, i))
    for j in range(sf.b):
        w, col = sf.primary_wire(j), sf.r + j
        for q in range(sf.n):
            if q == w:
                continue
            xq, zq = sf.x_star[q, col], sf.z_star[q, col]
            if xq or zq:
                kind = GateKind.CY if xq and zq else GateKind.CX if xq else GateKind.CZ
                gates.append(Gate(kind, q, w))
    base = synthesize(sf, standard_order=True)
    return EncodingCircuit(sf.n, sf.k, sf.r, sf.r1, sf.b, tuple(gates), base.wire_roles, base.perm)


def standard_generators(sf):
    return [sf.generator(j, original_order=False) for j in range(sf.d)]


def test_eq8_counts(eq8_form):
    c = synthesize(eq8_form, standard_order=True)
    rep = count_report(c)
    assert rep.one_qubit == 4
    assert rep.two_qubit == 20
    assert rep.fixup == 0
    assert (rep.two_qubit_bound, rep.total_bound) == (31, 40)
    assert rep.ok


def test_as_drawn_array_has_23_gates_but_does_not_encode(eq8_form):
    drawn = as_drawn(eq8_form)
    rep = count_report(drawn)
    assert (rep.one_qubit, rep.two_qubit) == (4, 23)
    kinds = [g.kind for g in drawn.gates[:4]]
    assert kinds == [GateKind.R, GateKind.Q, GateKind.R, GateKind.R]
    states = encode_all(drawn)
    worst = max(
        check_codeword(StateVector(8, states[:, i]), standard_generators(eq8_form)).max_residual
        for i in range(states.shape[1])
    )
    assert worst > 0.5


def test_eq8_circuit_fixes_generators(eq8_form):
    states = encode_all(synthesize(eq8_form, standard_order=True))
    for i in range(8):
        rep = check_codeword(StateVector(8, states[:, i]), standard_generators(eq8_form))
        assert rep.max_residual < 1e-10


def test_first_seed_column_is_single_cx(eq8_form):
    c = synthesize(eq8_form, standard_order=True)
    seed_gates = [g for g in c.gates if g.control == 0]
    assert seed_gates == [Gate(GateKind.CX, 3, 0)]
    assert c.wire_roles == ("c1", "c2", "c3", "0", "a1", "a2", "a3", "a4")


def test_empty_code_has_empty_circuit():
    sf = compute_standard_form(validate_generator_set(4, []))
    c = synthesize(sf)
    assert c.gates == ()
    assert count_report(c).to_dict()["total"] == 0
    assert reverse(c).gates == ()


def test_relabel_moves_roles(eight_qubit):
    sf = compute_standard_form(eight_qubit)
    plain = synthesize(sf, standard_order=True)
    moved = synthesize(sf)
    assert moved == relabel(plain, sf.perm)
    for q, wire in enumerate(sf.perm):
        assert moved.wire_roles[wire] == plain.wire_roles[q]


def test_gate_validation():
    with pytest.raises(ValueError):
        Gate(GateKind.CX, 1)
    with pytest.raises(ValueError):
        Gate(GateKind.CZ, 1, 1)
    with pytest.raises(ValueError):
        Gate(GateKind.Q, 1, 0)
    assert Gate(GateKind.R, 2).inverse() == Gate(GateKind.RINV, 2)
    assert Gate(GateKind.CY, 2, 0).inverse().inverse() == Gate(GateKind.CY, 2, 0)
    assert str(Gate(GateKind.CX, 3, 0)) == "CX 0 3"


def test_fixup_minus_z():
    sf = compute_standard_form(validate_generator_set(1, ["-Z"]))
    assert str(solve_sign_fixup(sf)) == "+X"
    c = synthesize(sf)
    out = encode_all(c)
    assert np.allclose(out[:, 0], [0, 1])


def test_fixup_identity_when_all_signs_positive(eight_qubit):
    sf = compute_standard_form(eight_qubit)
    assert solve_sign_fixup(sf) == PauliString.identity(8)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.data())
def test_fixup_anticommutes_with_negative_generators(n, data):
    d = data.draw(st.integers(1, n))
    gs = gen_random_code(n, d, data.draw(st.integers(0, 10**6)), negate_signs=True)
    sf = compute_standard_form(gs)
    p = solve_sign_fixup(sf)
    for j in range(sf.d):
        g = sf.generator(j)
        assert (not commutes(g, p)) == (sf.signs[j] == -1)
    assert bin(p.xbits).count("1") <= sf.r


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7), st.data())
def test_reverse_is_involution_and_counts_hold(n, data):
    d = data.draw(st.integers(0, n))
    gs = gen_random_code(n, d, data.draw(st.integers(0, 10**6)), negate_signs=data.draw(st.booleans()))
    sf = compute_standard_form(gs)
    c = synthesize(sf)
    assert reverse(reverse(c)) == c
    rep = count_report(c)
    assert rep.one_qubit == sf.b
    assert rep.two_qubit <= rep.two_qubit_bound
    assert rep.total <= rep.total_bound


@pytest.mark.parametrize("seed", range(6))
def test_primary_column_order_is_irrelevant(seed):
    gs = gen_random_code(6, 4, seed, negate_signs=True)
    sf = compute_standard_form(gs)
    ref = encode_all(synthesize(sf))
    for order in itertools.islice(itertools.permutations(range(sf.b)), 6):
        assert np.allclose(encode_all(synthesize(sf, primary_order=order)), ref, atol=1e-12)


@pytest.mark.parametrize("seed", range(6))
def test_gates_within_a_column_commute(seed):
    gs = gen_random_code(7, 4, seed)
    sf = compute_standard_form(gs)
    c = synthesize(sf, standard_order=True)
    ref = encode_all(c)
    # consecutive two-qubit gates sharing a control belong to one column
    groups = [list(g) for _, g in itertools.groupby(c.gates, key=lambda g: (g.control is None, g.control))]
    rng = random.Random(seed)
    for grp in groups:
        rng.shuffle(grp)
    shuffled = EncodingCircuit(c.n, c.k, c.r, c.r1, c.b, tuple(itertools.chain(*groups)), c.wire_roles, c.perm)
    assert np.allclose(encode_all(shuffled), ref, atol=1e-12)


def test_bad_primary_order(eq8_form):
    with pytest.raises(ValueError):
        synthesize(eq8_form, primary_order=[0, 1, 2, 2])


def test_without_fixup_ignores_signs():
    sf = compute_standard_form(validate_generator_set(1, ["-Z"]))
    c = synthesize(sf, fixup=False)
    assert c.gates == ()
    assert np.allclose(encode_all(c)[:, 0], [1, 0])
