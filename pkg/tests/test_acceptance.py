"""Acceptance gate.  Every comparison is exact; timing budgets are medians of
warm repeated runs.  A PASS/FAIL line per criterion is printed in the
terminal summary (see conftest.py)."""

import statistics
import time
from pathlib import Path

import numpy as np
import pytest

from oracles import affine_table_values, hadamard_column_product
from symfun.boolfn import (
    Classification,
    TruthTable,
    capacity,
    classify,
    construct_family,
    format_table,
    from_affine,
    parity,
)
from symfun.errors import NotFactorable, PromiseViolated
from symfun.factor import FactorResult, factor_state
from symfun.identify import HiddenOracle, check_simon_invariance, identify_amplitude, identify_measured
from symfun.selftest import selftest
from symfun.statesim import BasisKet, StateVector, read_basis, sandwich
from symfun.synth import check_table5_structure, solve_function, solve_output, synthesize, table5_labels

criterion = pytest.mark.criterion


def median_seconds(fn, repeats=50):
    fn()
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


# psi column of each Table 1 function on input |0,0>: (index, value)
TABLE1 = {"0": (1, 1), "3": (5, 1), "5": (3, 1), "6": (7, 1),
          "9": (7, -1), "A": (3, -1), "C": (5, -1), "F": (1, -1)}


@criterion(1, "Table 1 reproduction (n=2, exact, < 1 ms)")
def test_table1_reproduction():
    fam = list(construct_family(2))
    assert [format_table(t, "hex") for t in fam] == list(TABLE1)
    for t in fam:
        k, v = TABLE1[format_table(t, "hex")]
        psi = [0] * 8
        psi[k] = v
        out = sandwich(t, 0)
        assert out.s == 0 and out.amps.tolist() == psi

    elapsed = median_seconds(lambda: [read_basis(sandwich(t, 0)) for t in fam])
    print(f"table 1 median runtime {elapsed * 1e3:.3f} ms")
    assert elapsed < 1e-3


@criterion(2, "Family construction matches Tables 2-4; |family| = 2^(n+1) for n <= 16")
def test_family_construction():
    f2 = construct_family(2)
    assert [format_table(t, "hex") for t in f2.positives] == ["0", "3", "5", "6"]
    assert [t.value for t in f2.positives] == [0, 3, 5, 6]

    f3 = construct_family(3)
    assert [format_table(t, "hex") for t in f3.positives] == ["00", "0F", "33", "3C", "55", "5A", "66", "69"]
    assert [t.bin() for t in f3.negatives] == [
        "10010110", "10011001", "10100101", "10101010", "11000011", "11001100", "11110000", "11111111"]
    # computed dec column; the printed "21" for 00110011 is not reproduced
    assert [format_table(t, "dec") for t in f3.positives] == ["0", "15", "51", "60", "85", "90", "102", "105"]
    assert format_table(TruthTable.from_hex("33"), "dec") != "21"

    f4 = construct_family(4)
    assert [format_table(t, "hex") for t in f4.positives] == [
        "0000", "00FF", "0F0F", "0FF0", "3333", "33CC", "3C3C", "3CC3",
        "5555", "55AA", "5A5A", "5AA5", "6666", "6699", "6969", "6996"]
    assert [t.value for t in f4.positives] == [
        0, 255, 3855, 4080, 13107, 13260, 15420, 15555,
        21845, 21930, 23130, 23205, 26214, 26265, 26985, 27030]

    for n in range(1, 17):
        fam = construct_family(n)
        assert len(fam) == 2 ** (n + 1)
        if n <= 12:
            values = [t.value for t in fam]
            assert len(set(values)) == len(values)
            assert all(classify(t) is not Classification.NEITHER for t in fam)
        else:
            # pattern generation only: distinct forms, spot-checked tables
            forms = {(a.mask, a.constant) for a in fam.affines()}
            assert len(forms) == len(fam)
            for i in (0, 1, len(fam) // 2 - 1, len(fam) // 2, len(fam) - 1):
                assert classify(fam[i]) is not Classification.NEITHER


@criterion(3, "Brute force: exactly 2^(n+1) members among all tables, n = 2, 3, 4 (n=4 < 10 s)")
def test_brute_force_gate():
    for n in (2, 3, 4):
        t0 = time.perf_counter()
        members = [v for v in range(1 << (1 << n))
                   if classify(TruthTable(n, v)) is not Classification.NEITHER]
        elapsed = time.perf_counter() - t0
        assert len(members) == 2 ** (n + 1)
        assert members == sorted(t.value for t in construct_family(n))
        assert members == affine_table_values(n)
        if n == 4:
            print(f"n=4 brute force {elapsed:.3f} s")
            assert elapsed < 10


@criterion(4, "Single-query identification for all n <= 10 (n=10 < 30 s); AND oracle rejected")
def test_single_query_identification():
    for n in range(1, 11):
        fam = construct_family(n)
        t0 = time.perf_counter()
        for i in range(len(fam)):
            af = fam.affine(i)
            tt = from_affine(af)
            amp = identify_amplitude(HiddenOracle.hiding(tt))
            assert (amp.mask, amp.constant, amp.query_count) == (af.mask, af.constant, 1)
            meas = identify_measured(HiddenOracle.hiding(tt), seed=i)
            assert (meas.mask, meas.constant, meas.query_count) == (af.mask, None, 1)
        elapsed = time.perf_counter() - t0
        if n == 10:
            print(f"n=10 identification {elapsed:.2f} s")
            assert elapsed < 30
    with pytest.raises(PromiseViolated):
        identify_amplitude(HiddenOracle.hiding(TruthTable.from_bin("0001")))


@criterion(5, "Design Problems A and B, by solver and by simulation")
def test_design_problems():
    af, tt, fid = solve_function("1000", "1110")
    assert format_table(tt, "hex") == "3C3C" and fid.letter == "g" and af.mask == 0b0110
    assert read_basis(sandwich(tt, 0b1000)) == BasisKet(5, 0b11101)

    y = solve_output("0000", TruthTable.from_hex("3333"))
    assert y == 0b0010
    assert read_basis(sandwich(TruthTable.from_hex("3333"), 0b0000)) == BasisKet(5, 0b00101)


@criterion(6, "Table 5 excerpt (192 cells) and structure clauses for n = 1..6")
def test_table5():
    lines = (Path(__file__).parent / "data" / "table5_excerpt.txt").read_text().splitlines()
    cols = [int(h[:-1], 2) for h in lines[0].split("\t")[1:]]
    labels = table5_labels(4)
    cells = 0
    for line in lines[1:]:
        head, *ids = line.split("\t")
        y = int(head[:-1], 2)
        for x, label in zip(cols, ids):
            assert labels[x][y] == label
            cells += 1
    assert cells == 192
    for n in range(1, 7):
        report = check_table5_structure(n)
        assert report.ok, report.violations


@criterion(7, "Flip-network predictions equal full simulation, exhaustive n <= 6")
def test_equivalence_theorem():
    for n in range(1, 7):
        for af in construct_family(n).affines():
            net = synthesize(af)
            tt = from_affine(af)
            for x in range(1 << n):
                for sign in (1, -1):
                    assert read_basis(sandwich(tt, x, sign)) == net.apply(x, sign)


@criterion(8, "Factoring round trip n <= 10; printed vector rejected; >= 99% random rejection")
def test_factoring():
    for n in range(1, 11):
        for y in range(1 << n):
            for sign in (1, -1):
                state = StateVector(n, hadamard_column_product(y, n, sign), n)
                assert factor_state(state) == FactorResult(n, y, sign)
    with pytest.raises(NotFactorable):
        factor_state(StateVector(3, [1, -1, 1, 1, 1, -1, 1, -1], 3))
    rng = np.random.default_rng(8)
    rejected = 0
    for _ in range(1000):
        try:
            factor_state(StateVector(8, rng.choice([-1, 1], size=256), 8))
        except NotFactorable:
            rejected += 1
    print(f"random rejection {rejected}/1000")
    assert rejected >= 990


@criterion(9, "Capacity sum equals 3^n for n <= 30")
def test_capacity():
    for n in range(1, 31):
        assert capacity(n) == 3**n


@criterion(10, "Affine shift law exhaustive n <= 6; the three named invariant cases")
def test_simon_invariance():
    for n in range(1, 7):
        for af in construct_family(n).affines():
            tt = from_affine(af)
            bits = tt.to_array()
            x = np.arange(1 << n)
            for shift in range(1 << n):
                assert np.array_equal(bits[x ^ shift], bits ^ parity(af.mask & shift))
    for text, shift in [("0011", 0b01), ("0101", 0b10), ("0110", 0b11)]:
        assert check_simon_invariance(TruthTable.from_bin(text), shift) is True


@criterion(11, "Self-test passes 512/512 at n=4; each fault type is detected")
def test_selftest_faults():
    clean = selftest(4)
    assert (clean.cases, clean.passed) == (512, 512)
    for fault in ("drop-stage:2", "skip-swap:5", "flip-sign:9"):
        report = selftest(4, fault)
        print(report.summary())
        assert len(report.failures) >= 1
