#!/usr/bin/env python3
"""Benchmark the compiled gate kernels against the NumPy fallback.

Two workloads dominated by the hot loops:

  * qudit: every W factor of the full antisymmetrization circuit applied to
    the dense n**n register (default n=7; 823543 amplitudes, 91 factors).
  * qubit: the compiled binary-encoding program for n qudits applied to the
    2**(n*r) register (default n=6; 18 qubits, 659 multi-controlled ops).

Usage: python benchmarks/bench_kernels.py [--qudit-n 7] [--qubit-n 6]
       [--repeats 3]
"""

import argparse
import time
from math import sqrt

import numpy as np

from laughlin.circuit import build_circuit
from laughlin.compiler import Encoding, compile_circuit, _2x2_entries
from laughlin.kernels import available_backends, get_backend
from laughlin.states import basis_state


def qudit_workload(n):
    """Returns (initial amplitudes, gate arg tuples) for the full circuit."""
    circuit = build_circuit(n)
    init = basis_state(circuit.input_digits, d=n).amps
    gates = []
    for gate in circuit.gates:
        for w in gate.factors:
            p = float(w.p)
            gates.append((n, n, w.wire_a, w.wire_b, w.i, w.j, sqrt(p), sqrt(1 - p), 1.0))
    return init, gates


def run_qudit(backend, init, gates):
    amps = init.copy()
    t0 = time.perf_counter()
    for args in gates:
        backend.apply_w_fiber(amps, *args)
    return time.perf_counter() - t0, amps


def qubit_workload(n):
    """Returns (qubit count, op arg tuples) for the compiled binary program."""
    encoding = Encoding("binary", n)
    program = compile_circuit(build_circuit(n), encoding)
    nq = encoding.total_qubits
    ops = []
    for op in list(program.prep) + list(program.ops):
        t_pos = nq - 1 - op.target
        fixed = sorted([(nq - 1 - q, pol) for q, pol in op.controls] + [(t_pos, 0)])
        ins_pos = np.array([p for p, _ in fixed], dtype=np.intp)
        ins_val = np.array([v for _, v in fixed], dtype=np.intp)
        ops.append((ins_pos, ins_val, t_pos) + _2x2_entries(op))
    return nq, ops


def run_qubit(backend, nq, ops):
    amps = np.zeros(1 << nq, dtype=np.complex128)
    amps[0] = 1.0
    t0 = time.perf_counter()
    for ins_pos, ins_val, t_pos, m00, m01, m10, m11 in ops:
        backend.apply_mc_2x2(amps, nq, ins_pos, ins_val, t_pos, m00, m01, m10, m11)
    return time.perf_counter() - t0, amps


def best_of(fn, repeats):
    times, result = [], None
    for _ in range(repeats):
        elapsed, result = fn()
        times.append(elapsed)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--qudit-n", type=int, default=7)
    ap.add_argument("--qubit-n", type=int, default=6)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    if "cython" not in backends:
        print("note: compiled kernels not built; timing the fallback only")

    init, gates = qudit_workload(args.qudit_n)
    print(
        f"\nqudit workload: n={args.qudit_n} "
        f"({len(init)} amplitudes, {len(gates)} W factors)"
    )
    results = {}
    for name in backends:
        elapsed, amps = best_of(lambda: run_qudit(get_backend(name), init, gates), args.repeats)
        results[name] = (elapsed, amps)
        print(f"  {name:>7}: {elapsed * 1e3:9.2f} ms")
    if len(results) == 2:
        assert np.array_equal(results["numpy"][1], results["cython"][1]), "backends disagree"
        print(f"  speedup: {results['numpy'][0] / results['cython'][0]:.2f}x (identical output)")

    nq, ops = qubit_workload(args.qubit_n)
    print(f"\nqubit workload: n={args.qubit_n} binary ({nq} qubits, {len(ops)} ops)")
    results = {}
    for name in backends:
        elapsed, amps = best_of(lambda: run_qubit(get_backend(name), nq, ops), args.repeats)
        results[name] = (elapsed, amps)
        print(f"  {name:>7}: {elapsed * 1e3:9.2f} ms")
    if len(results) == 2:
        assert np.array_equal(results["numpy"][1], results["cython"][1]), "backends disagree"
        print(f"  speedup: {results['numpy'][0] / results['cython'][0]:.2f}x (identical output)")


if __name__ == "__main__":
    main()
