from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from stabenc.formats import (
    FormatError,
    emit_circuit,
    emit_stabilizer,
    emit_state,
    parse_circuit,
    parse_stabilizer,
    parse_state,
)
from stabenc.random_codes import gen_random_code
from stabenc.standard_form import compute_standard_form
from stabenc.synth import reverse, synthesize

from conftest import EIGHT_QUBIT


def test_parse_eight_qubit_file():
    text = "# example\n" + "\n".join(EIGHT_QUBIT) + "\n"
    f = parse_stabilizer(text.encode())
    assert f.n == 8 and len(f.generators) == 5
    assert f.comments == ["example"]


def test_parse_n_only():
    f = parse_stabilizer(b"n 4\n")
    assert f.n == 4 and f.generators == []


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("XQX\n", 1, 2),
        ("# c\n  -XXQ\n", 2, 6),
        ("XX\nXXX\n", 2, None),
        ("XX\nn 2\n", 2, None),
        ("n two\n", 1, None),
    ],
)
def test_parse_errors(text, line, column):
    with pytest.raises(FormatError) as info:
        parse_stabilizer(text)
    assert info.value.line == line
    assert info.value.column == column


def test_empty_file_is_an_error():
    with pytest.raises(FormatError):
        parse_stabilizer("# nothing\n")


def test_stabilizer_round_trip():
    gs = gen_random_code(6, 4, 9, negate_signs=True)
    text = emit_stabilizer(gs.n, gs.generators, ["hello"])
    f = parse_stabilizer(text)
    assert f.n == 6 and tuple(f.generators) == gs.generators
    assert emit_stabilizer(f.n, f.generators, f.comments) == text


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 9), st.data())
def test_circuit_round_trip(n, data):
    d = data.draw(st.integers(0, n))
    gs = gen_random_code(n, d, data.draw(st.integers(0, 10**6)), negate_signs=data.draw(st.booleans()))
    c = synthesize(compute_standard_form(gs), standard_order=data.draw(st.booleans()))
    if data.draw(st.booleans()):
        c = reverse(c)
    text = emit_circuit(c)
    assert parse_circuit(text) == c
    assert emit_circuit(parse_circuit(text)) == text


def test_circuit_header_checks(eight_qubit):
    text = emit_circuit(synthesize(compute_standard_form(eight_qubit)))
    with pytest.raises(FormatError):
        parse_circuit(text.replace("stabenc-circuit 1", "circuit"))
    with pytest.raises(FormatError):
        parse_circuit(text.replace("gates 24", "gates 25"))
    with pytest.raises(FormatError):
        parse_circuit(text + "FOO 1\n")
    with pytest.raises(FormatError):
        parse_circuit(text + "CX 1 1\n")
    with pytest.raises(FormatError):
        parse_circuit(text + "Q 9\n")
    with pytest.raises(FormatError):
        parse_circuit(text.replace("fixup +IIIIIIII", "fixup +XIIIIIII"))


def test_state_round_trip():
    amps = np.zeros(8)
    amps[[1, 6]] = [0.6, -0.8]
    text = emit_state(amps, 3)
    assert text == "001 +0.6\n110 -0.8\n"
    n, back = parse_state(text)
    assert n == 3 and np.array_equal(back, amps)


@pytest.mark.parametrize("text", ["", "01 x\n", "01 1\n011 1\n", "0a 1\n"])
def test_state_parse_errors(text):
    with pytest.raises(FormatError):
        parse_state(text)
