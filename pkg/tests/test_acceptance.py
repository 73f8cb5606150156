"""Acceptance suite: one test per criterion, at the stated tolerances.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS line per
criterion (including its wall-clock time); a failed assertion marks the
criterion FAILED in the pytest report.
"""

import math
import time
from itertools import combinations

import numpy as np
import pytest

from laughlin.analysis import (
    binomial_entropy,
    bipartite_entropy,
    coordinate_check,
    entropy_trace,
)
from laughlin.circuit import build_circuit, closed_form_counts, counts
from laughlin.compiler import BINARY, UNARY, Encoding, cost_report, gray_path, verify_compiled
from laughlin.perm import canonical_reduced_decomposition, max_permutation
from laughlin.simulate import run, verify
from laughlin.states import max_amplitude_distance


class _Stopwatch:
    def __init__(self, label):
        self.label = label
        self.start = time.perf_counter()

    def done(self):
        elapsed = time.perf_counter() - self.start
        print(f"ACCEPTANCE {self.label}: PASS ({elapsed:.2f}s)")


def test_criterion_01_oracle_equivalence():
    sw = _Stopwatch("01 oracle equivalence n=2..7")
    for n in range(2, 8):
        tol = 1e-10 if n <= 6 else 1e-9
        result = verify(n)
        assert result.distance <= tol, (n, result.distance)
    sw.done()


def test_criterion_02_gate_counts():
    sw = _Stopwatch("02 gate counts, closed forms to n=64")
    for n in range(2, 11):
        structural = counts(build_circuit(n))
        closed = closed_form_counts(n)
        assert structural == closed, n
    # closed forms against the recursive counting, up to n=64
    v, depth, w = 1, 1, 1
    for n in range(2, 65):
        if n > 2:
            v = v + (n - 1)
            depth = depth + 2
            w = w + (n - 1) ** 2
        closed = closed_form_counts(n)
        assert closed.v_gates == v == n * (n - 1) // 2
        assert closed.depth == depth == 2 * n - 3
        assert closed.w_factors == w == n * (n - 1) * (2 * n - 1) // 6
    sw.done()


def test_criterion_03_optimality_tie_out():
    sw = _Stopwatch("03 optimality tie-out n=2..10")
    for n in range(2, 11):
        word = canonical_reduced_decomposition(max_permutation(n))
        assert len(word) == counts(build_circuit(n)).v_gates, n
    sw.done()


def _random_subsets(rng, n, k, count=3):
    """k-subsets of range(n), non-contiguous whenever such subsets exist."""
    subsets = []
    while len(subsets) < count:
        subset = sorted(rng.choice(n, size=k, replace=False).tolist())
        if k >= 2 and subset[-1] - subset[0] == k - 1:
            continue  # contiguous; a non-contiguous choice exists for k >= 2
        subsets.append(subset)
    return subsets


def test_criterion_04_entropy_formula():
    sw = _Stopwatch("04 entropy formula n=2..6, all cuts + random subsets")
    rng = np.random.default_rng(2024)
    for n in range(2, 7):
        state = run(build_circuit(n)).final
        for k in range(1, n):
            expected = binomial_entropy(n, k)
            got = bipartite_entropy(state, range(k))
            assert abs(got - expected) <= 1e-8, (n, k, got)
            for subset in _random_subsets(rng, n, k):
                got = bipartite_entropy(state, subset)
                assert abs(got - expected) <= 1e-8, (n, k, subset, got)
    sw.done()


def test_criterion_05_per_gate_increments():
    sw = _Stopwatch("05 per-gate entropy increments n=2..6")
    for n in range(2, 7):
        circuit = build_circuit(n)
        for k in range(1, n):
            trace = entropy_trace(circuit, k)
            for step in trace.steps:
                if step.gate_k == k:
                    expected = math.log2(step.stage / (step.stage - k))
                    assert abs(step.delta - expected) <= 1e-8, (n, k, step)
                else:
                    assert abs(step.delta) <= 1e-8, (n, k, step)
    sw.done()


def test_criterion_06_saturation_bound():
    sw = _Stopwatch("06 saturation bound n<=64")
    for n in range(2, 65):
        for k in range(1, n // 2 + 1):
            bound = k * math.log2(n)
            entropy = binomial_entropy(n, k)
            assert entropy <= bound + 1e-12, (n, k)
            if k == 1:
                assert abs(entropy - bound) <= 1e-12, n
    sw.done()


def test_criterion_07_coordinate_proportionality():
    sw = _Stopwatch("07 coordinate-space proportionality n=2..5, 5 seeds")
    for n in range(2, 6):
        state = run(build_circuit(n)).final
        for seed in range(5):
            result = coordinate_check(state, samples=10, rng_seed=seed)
            assert result.max_relative_spread <= 1e-8, (n, seed, result)
    sw.done()


def test_criterion_08_compilation_fidelity():
    sw = _Stopwatch("08 compilation fidelity binary n=2..6, unary n=2..4")
    for n in range(2, 7):
        result = verify_compiled(n, Encoding(BINARY, n))
        assert result.ok and result.distance <= 1e-9, (BINARY, n, result.distance)
    for n in range(2, 5):
        result = verify_compiled(n, Encoding(UNARY, n))
        assert result.ok and result.distance <= 1e-9, (UNARY, n, result.distance)
    # the printed five-row walk of the (3,5) exchange
    path = gray_path("011101", "101011")
    rows = list(path.steps) + [path.dest]
    assert rows == ["011101", "111101", "101101", "101001", "101011"]
    sw.done()


def test_criterion_09_arity_scaling():
    sw = _Stopwatch("09 control-arity scaling n=4..64")
    sizes = [4, 8, 16, 32, 64]
    models = {
        BINARY: lambda n: n**3 * math.log2(n) ** 2,
        UNARY: lambda n: float(n**3),
    }
    for kind, model in models.items():
        arity = [cost_report(n, kind).total_control_arity for n in sizes]
        for (n_small, n_big, a_small, a_big) in zip(sizes, sizes[1:], arity, arity[1:]):
            got = a_big / a_small
            predicted = model(n_big) / model(n_small)
            assert predicted / 1.5 <= got <= predicted * 1.5, (kind, n_big, got, predicted)
    sw.done()


def test_criterion_10_symmetrization_variants():
    sw = _Stopwatch("10 symmetrization variants n=2..6")
    for n in range(2, 7):
        sym = verify(n, "sym")
        assert sym.ok and sym.distance <= 1e-10, (n, sym.distance)
        # reversed-input construction equals the sym output up to one global phase
        sym_state = run(build_circuit(n, "sym")).final
        rev_state = run(build_circuit(n, "sym_reversed")).final
        anchor = int(np.argmax(np.abs(sym_state.amps)))
        phase = rev_state.amps[anchor] / sym_state.amps[anchor]
        phase /= abs(phase)
        rev_state.amps *= np.conj(phase)
        assert max_amplitude_distance(rev_state, sym_state) <= 1e-10, n
    sw.done()
