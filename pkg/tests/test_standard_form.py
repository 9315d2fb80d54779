from __future__ import annotations

import itertools
import time

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from stabenc.gf2 import in_span
from stabenc.pauli import PauliString, multiply, validate_generator_set
from stabenc.random_codes import gen_random_code
from stabenc.standard_form import (
    StandardForm,
    block_shape_problems,
    classify,
    compute_standard_form,
    verify_seed_conditions,
)

from conftest import EQ8_X, EQ8_Z


def random_code_params():
    return st.integers(1, 10).flatmap(
        lambda n: st.tuples(st.just(n), st.integers(0, n), st.integers(0, 2**32 - 1), st.booleans())
    )


def group_element(gs, target: PauliString) -> bool:
    """Brute force: is ``target`` (with its sign) a product of generators?"""
    gens = list(gs)
    for mask in range(1 << len(gens)):
        acc = PauliString.identity(gs.n)
        for j, g in enumerate(gens):
            if (mask >> j) & 1:
                acc = multiply(acc, g)
        if acc == target:
            return True
    return False


def test_eight_qubit_dims(eight_qubit):
    start = time.perf_counter()
    sf = compute_standard_form(eight_qubit)
    elapsed = time.perf_counter() - start
    assert sf.dims == (3, 1, 0, 4)
    assert not block_shape_problems(sf)
    assert elapsed < 0.01


def test_eight_qubit_classify(eight_qubit):
    primary, secondary, seeds = classify(compute_standard_form(eight_qubit))
    assert (len(primary), len(secondary), len(seeds)) == (4, 1, 3)
    for s in seeds:
        assert s.zbits == 0


@pytest.mark.parametrize("n", [1, 3, 6])
def test_empty_code(n):
    sf = compute_standard_form(validate_generator_set(n, []))
    assert sf.dims == (n, 0, 0, 0)
    assert sf.perm == list(range(n))
    assert sf.x_star.cols == 0
    assert verify_seed_conditions(sf).passed


def test_zz_code():
    sf = compute_standard_form(validate_generator_set(2, ["ZZ"]))
    assert sf.dims == (1, 1, 0, 0)
    assert sf.z_star.column(0) == 0b11
    primary, secondary, seeds = classify(sf)
    assert primary == []
    assert [str(g) for g in secondary] == ["+ZZ"]
    assert [str(s) for s in seeds] == ["+XX"]


def test_full_rank_code_has_no_seeds():
    sf = compute_standard_form(validate_generator_set(2, ["XX", "ZZ"]))
    assert sf.k == 0
    assert classify(sf)[2] == []


def test_eq8_injected_passes_seed_conditions():
    sf = StandardForm.from_augmented(EQ8_X, EQ8_Z, k=3, r1=1, r2=0, b=4)
    report = verify_seed_conditions(sf)
    assert report.passed
    assert report.rank == report.expected_rank == 7


def test_zeroed_seed_column_fails_independence():
    sf = StandardForm.from_augmented(EQ8_X, EQ8_Z, k=3, r1=1, r2=0, b=4)
    for q in range(sf.n):
        sf.x_seed[q, 0] = 0
    report = verify_seed_conditions(sf)
    assert not report.independent
    assert report.rank == 6


def test_from_augmented_rejects_bad_shape():
    x = EQ8_X.copy()
    x[4, 7] = 1  # breaks the identity block
    with pytest.raises(ValueError):
        StandardForm.from_augmented(x, EQ8_Z, k=3, r1=1, r2=0, b=4)
    with pytest.raises(ValueError):
        StandardForm.from_augmented(EQ8_X, EQ8_Z, k=3, r1=1, r2=1, b=4)


@settings(max_examples=200, deadline=None)
@given(random_code_params())
def test_random_codes_reach_standard_form(params):
    n, d, seed, signed = params
    gs = gen_random_code(n, d, seed, negate_signs=signed)
    sf = compute_standard_form(gs)
    assert sf.k + sf.r1 + sf.r2 + sf.b == n
    assert sf.d == d
    assert block_shape_problems(sf) == []
    assert verify_seed_conditions(sf).passed
    # the Z matrix may fill up, but never beyond both n x d blocks
    assert sf.x_star.popcount() + sf.z_star.popcount() <= 2 * n * d
    primary, secondary, seeds = classify(sf)
    for s in seeds:
        assert all(multiply(s, g) == multiply(g, s) for g in secondary)


@settings(max_examples=80, deadline=None)
@given(random_code_params())
def test_standard_form_generators_stay_in_the_group(params):
    n, d, seed, signed = params
    gs = gen_random_code(n, d, seed, negate_signs=signed)
    sf = compute_standard_form(gs)
    originals = [g.symplectic() for g in gs]
    for j in range(sf.d):
        g = sf.generator(j)
        if d <= 6:
            assert group_element(gs, g)
        else:
            assert in_span(g.symplectic(), originals)


def test_standard_form_signs_follow_products():
    # -ZZ times ZI gives -IZ; the signed group must be preserved
    gs = validate_generator_set(2, ["-ZZ", "ZI"])
    sf = compute_standard_form(gs)
    for j in range(sf.d):
        assert group_element(gs, sf.generator(j))


def test_to_dict_is_json_ready(eight_qubit):
    import json

    data = compute_standard_form(eight_qubit).to_dict()
    assert json.loads(json.dumps(data))["b"] == 4
    assert np.array(data["x_star"]).shape == (8, 8)
