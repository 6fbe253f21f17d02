import numpy as np
import pytest

from oracles import hadamard_column_product
from symfun.boolfn import construct_family
from symfun.errors import NotFactorable
from symfun.factor import FactorResult, factor_state, hadamard_product
from symfun.statesim import StateVector, apply_oracle, hadamard_all, input_state, read_basis, sandwich


def sv(amps):
    m = len(amps).bit_length() - 1
    return StateVector(m, amps, m)


@pytest.mark.parametrize("amps,y,sign", [
    ([1, -1, 1, -1, 1, -1, 1, -1], 0b001, 1),
    ([1, -1, -1, 1, -1, 1, 1, -1], 0b111, 1),
    ([-1, -1], 0, -1),
])
def test_examples(amps, y, sign):
    # expected values come from the explicit product formula
    assert np.array_equal(hadamard_column_product(y, len(amps).bit_length() - 1, sign), amps)
    res = factor_state(sv(amps))
    assert (res.y, res.global_sign) == (y, sign)


def test_printed_vector_is_not_factorable():
    with pytest.raises(NotFactorable):
        factor_state(sv([1, -1, 1, 1, 1, -1, 1, -1]))


def test_rejects_wrong_scale_and_magnitudes():
    with pytest.raises(ValueError):
        factor_state(StateVector(1, [1, 1], 2))
    with pytest.raises(NotFactorable):
        factor_state(StateVector(2, [2, 0, 0, 0], 2))


@pytest.mark.parametrize("n", range(1, 11))
def test_round_trip(n):
    for y in range(1 << n):
        for sign in (1, -1):
            state = StateVector(n, hadamard_column_product(y, n, sign), n)
            assert factor_state(state) == FactorResult(n, y, sign)
            assert hadamard_product(y, n, sign) == state


@pytest.mark.parametrize("n", [1, 2, 3])
def test_round_trip_exhaustive_small(n):
    for y in range(1 << n):
        for sign in (1, -1):
            assert factor_state(hadamard_product(y, n, sign)) == FactorResult(n, y, sign)


def test_per_qubit_sign_is_unobservable():
    # -(1,-1) (x) -(1,1) is the same vector as (1,-1) (x) (1,1)
    a = np.kron(-np.array([1, -1]), -np.array([1, 1]))
    b = np.kron(np.array([1, -1]), np.array([1, 1]))
    assert np.array_equal(a, b)
    assert factor_state(sv(a.tolist())) == factor_state(sv(b.tolist()))


@pytest.mark.parametrize("n", range(1, 7))
def test_agrees_with_pipeline(n):
    for t in construct_family(n):
        for x in range(1 << n):
            mid = apply_oracle(hadamard_all(input_state(x, n)), t)
            res = factor_state(mid)
            ket = read_basis(sandwich(t, x))
            assert res.y >> 1 == ket.data and res.y & 1 == 1
            assert res.global_sign == ket.sign


def test_random_vectors_rejected():
    rng = np.random.default_rng(2024)
    rejected = 0
    for _ in range(1000):
        amps = rng.choice([-1, 1], size=256)
        try:
            factor_state(sv(amps.tolist()))
        except NotFactorable:
            rejected += 1
    assert rejected >= 990


def test_json():
    assert factor_state(sv([-1, 1])).to_json() == {"y": "1", "sign": "-1"}
