"""Circuit execution against the brute-force permutation superposition."""

import math
from itertools import combinations, permutations

import numpy as np
import pytest

from laughlin.circuit import build_circuit
from laughlin.simulate import oracle_state, run, state_tolerance, verify
from laughlin.states import (
    ResourceLimitError,
    index_of,
    max_amplitude_distance,
    swap_wires,
)


def brute_sign(elems):
    n = len(elems)
    inv = sum(1 for x in range(n) for y in range(x + 1, n) if elems[x] > elems[y])
    return (-1) ** inv


def test_run_n2_singlet():
    final = run(build_circuit(2)).final
    r = 1 / math.sqrt(2)
    assert np.abs(final.amps - np.array([0, r, -r, 0])).max() <= 1e-15


def test_run_n3_amplitudes():
    final = run(build_circuit(3)).final
    r = 1 / math.sqrt(6)
    expected = np.zeros(27, dtype=complex)
    expected[5] = +r  # |012>
    expected[7] = -r  # |021>
    expected[11] = -r  # |102>
    expected[15] = +r  # |120>
    expected[19] = +r  # |201>
    expected[21] = -r  # |210>
    assert np.abs(final.amps - expected).max() <= 1e-15


def test_run_n3_sym_all_positive():
    final = run(build_circuit(3, "sym")).final
    r = 1 / math.sqrt(6)
    nonzero = np.nonzero(np.abs(final.amps) > 1e-12)[0]
    assert len(nonzero) == 6
    assert np.abs(final.amps[nonzero] - r).max() <= 1e-14


def test_oracle_n2():
    st = oracle_state(2)
    r = 1 / math.sqrt(2)
    assert np.abs(st.amps - np.array([0, r, -r, 0])).max() == 0.0


def test_oracle_n4_signs_match_parity():
    st = oracle_state(4)
    weight = 1 / math.sqrt(24)
    nonzero = np.nonzero(np.abs(st.amps) > 0)[0]
    assert len(nonzero) == 24
    for elems in permutations(range(4)):
        got = st.amps[index_of(elems, 4)]
        assert got == brute_sign(elems) * weight


@pytest.mark.parametrize("n", range(2, 7))
def test_oracle_support(n):
    for mode in ("antisym", "sym"):
        st = oracle_state(n, mode)
        nonzero = np.abs(st.amps[np.abs(st.amps) > 0])
        assert len(nonzero) == math.factorial(n)
        assert np.abs(nonzero - 1 / math.sqrt(math.factorial(n))).max() <= 1e-12


def test_oracle_bounds():
    with pytest.raises(ValueError):
        oracle_state(1)
    with pytest.raises(ValueError):
        oracle_state(9)
    with pytest.raises(ValueError):
        oracle_state(3, "weird")


@pytest.mark.parametrize("n", range(2, 7))
def test_verify_antisym(n):
    result = verify(n)
    assert result.ok and result.distance <= state_tolerance(n)
    assert result.phase is None


@pytest.mark.parametrize("n", range(2, 7))
def test_verify_sym_variants(n):
    assert verify(n, "sym").ok
    rev = verify(n, "sym_reversed")
    assert rev.ok
    assert rev.phase is not None and abs(abs(rev.phase) - 1.0) <= 1e-12


@pytest.mark.parametrize("n", range(2, 7))
def test_exchange_symmetry_of_outputs(n):
    anti = run(build_circuit(n)).final
    symm = run(build_circuit(n, "sym")).final
    for a, b in combinations(range(n), 2):
        flipped = swap_wires(anti, a, b)
        assert np.abs(flipped.amps + anti.amps).max() <= 1e-10
        flipped = swap_wires(symm, a, b)
        assert np.abs(flipped.amps - symm.amps).max() <= 1e-10


@pytest.mark.parametrize("n", range(2, 7))
def test_snapshots(n):
    c = build_circuit(n)
    trace = run(c, snapshots=True)
    assert len(trace.snapshots) == len(c.gates)
    for idx, state in trace.snapshots:
        assert abs(state.norm() - 1.0) <= 1e-11
    last_idx, last_state = trace.snapshots[-1]
    assert last_idx == len(c.gates) - 1
    assert max_amplitude_distance(last_state, trace.final) == 0.0
    assert run(c).snapshots is None


@pytest.mark.parametrize("n", range(2, 8))
def test_norm_preservation(n):
    final = run(build_circuit(n)).final
    assert abs(final.norm() - 1.0) <= 1e-11


@pytest.mark.slow
def test_norm_preservation_n8():
    final = run(build_circuit(8)).final
    assert abs(final.norm() - 1.0) <= 1e-11


def test_resource_guard():
    with pytest.raises(ResourceLimitError, match=str(12**12)):
        run(build_circuit(12))
    # override admits the build (but not the default-guard run)
    assert run(build_circuit(4), max_amplitudes=4**4).final.n == 4


def test_report_line_format():
    line = verify(3).report_line()
    assert line.startswith("n=3 variant=antisym distance=")
    assert "tolerance=1.0e-10" in line and line.endswith("pass=true")
    rev = verify(3, "sym_reversed").report_line()
    assert "phase=" in rev
