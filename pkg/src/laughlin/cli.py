"""Command-line front end.

Commands: build, simulate, verify, entropy, coordcheck, compile, qverify,
counts, optimality. Every report is a single machine-parseable key=value
line; ``--json`` switches to structured output with the same fields.

Exit codes: 0 success, 1 check failed, 2 usage/domain error, 3 I/O error,
4 resource guard exceeded.
"""

import argparse
import io
import json
import sys

from . import analysis, compiler, simulate
from .circuit import (
    ANTISYM,
    VARIANTS,
    build_circuit,
    closed_form_counts,
    counts,
    emit_circuit,
    optimality_check,
)
from .compiler import (
    DEFAULT_MAX_QUBITS,
    ENCODINGS,
    Encoding,
    compile_circuit,
    cost_report,
    emit_program,
    verify_compiled,
)
from .perm import reversal_word_length
from .states import DEFAULT_MAX_AMPLITUDES, ResourceLimitError, dump_amplitudes

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_RESOURCE = 4


def _write_output(text: str, out_path):
    if out_path is None:
        sys.stdout.write(text)
        return
    with open(out_path, "w") as fh:
        fh.write(text)


def _emit(record: dict, line: str, as_json: bool):
    print(json.dumps(record) if as_json else line)


def cmd_build(args) -> int:
    circuit = build_circuit(args.n, args.variant)
    if args.json:
        doc = {
            "n": circuit.n,
            "variant": circuit.variant,
            "input": list(circuit.input_digits),
            "gates": [
                {"stage": g.stage, "k": g.k, "wires": list(g.wires), "p": f"1/{g.k + 1}"}
                for g in circuit.gates
            ],
        }
        _write_output(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        _write_output(emit_circuit(circuit), args.out)
    return EXIT_OK


def cmd_simulate(args) -> int:
    circuit = build_circuit(args.n, args.variant)
    trace = simulate.run(circuit, max_amplitudes=args.max_amplitudes)
    tol = args.tol if args.tol is not None else 1e-12
    if args.json:
        import numpy as np

        from .states import digits_of

        state = trace.final
        entries = [
            {
                "digits": list(digits_of(int(k), state.n, state.d)),
                "re": float(state.amps[k].real),
                "im": float(state.amps[k].imag),
            }
            for k in np.nonzero(np.abs(state.amps) > tol)[0]
        ]
        doc = {"n": state.n, "d": state.d, "tol": tol, "amplitudes": entries}
        _write_output(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        buf = io.StringIO()
        dump_amplitudes(trace.final, buf, tol=tol)
        _write_output(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    result = simulate.verify(
        args.n, args.variant, tol=args.tol, max_amplitudes=args.max_amplitudes
    )
    record = {
        "n": result.n,
        "variant": result.variant,
        "distance": result.distance,
        "tolerance": result.tolerance,
        "pass": result.ok,
    }
    if result.phase is not None:
        record["phase"] = [result.phase.real, result.phase.imag]
    _emit(record, result.report_line(), args.json)
    return EXIT_OK if result.ok else EXIT_CHECK_FAILED


def cmd_entropy(args) -> int:
    if not 1 <= args.k <= args.n - 1:
        raise ValueError(f"cut k={args.k} outside 1..{args.n - 1}")
    circuit = build_circuit(args.n, args.variant)
    trace = analysis.entropy_trace(circuit, args.k, max_amplitudes=args.max_amplitudes)
    measured = trace.final_entropy
    expected = analysis.binomial_entropy(args.n, args.k)
    record = {
        "n": args.n,
        "k": args.k,
        "variant": args.variant,
        "S": measured,
        "expected": expected,
    }
    if args.trace:
        record["trace"] = [
            {
                "gate": s.gate_index,
                "stage": s.stage,
                "k": s.gate_k,
                "S": s.entropy,
                "dS": s.delta,
                "dS_expected": s.delta_expected,
            }
            for s in trace.steps
        ]
    line = (
        f"n={args.n} k={args.k} variant={args.variant} "
        f"S={measured:.8f} expected={expected:.8f}"
    )
    if args.json:
        print(json.dumps(record))
    else:
        print(line)
        if args.trace:
            for s in trace.steps:
                print(s.report_line())
    return EXIT_OK


def cmd_coordcheck(args) -> int:
    circuit = build_circuit(args.n, args.variant)
    state = simulate.run(circuit, max_amplitudes=args.max_amplitudes).final
    result = analysis.coordinate_check(state, samples=args.samples, rng_seed=args.seed)
    threshold = args.tol if args.tol is not None else 1e-8
    ok = result.max_relative_spread <= threshold
    record = {
        "n": result.n,
        "variant": args.variant,
        "samples": result.samples,
        "seed": result.seed,
        "max_relative_spread": result.max_relative_spread,
        "threshold": threshold,
        "pass": ok,
    }
    line = (
        f"{result.report_line()} variant={args.variant} "
        f"threshold={threshold:.1e} pass={str(ok).lower()}"
    )
    _emit(record, line, args.json)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_compile(args) -> int:
    encoding = Encoding(args.encoding, args.n)
    program = compile_circuit(build_circuit(args.n, args.variant), encoding)
    if args.json:
        doc = {
            "qubits": encoding.total_qubits,
            "encoding": encoding.kind,
            "n": encoding.n,
            "r": encoding.r,
            "prep": [{"kind": op.kind, "t": op.target} for op in program.prep],
            "ops": [
                {
                    "kind": op.kind,
                    "t": op.target,
                    "c": [list(c) for c in op.controls],
                    **({"theta": op.theta, "dag": int(op.dagger)} if op.kind == compiler.MC_ROT else {}),
                }
                for op in program.ops
            ],
        }
        _write_output(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        _write_output(emit_program(program), args.out)
    return EXIT_OK


def cmd_qverify(args) -> int:
    result = verify_compiled(
        args.n,
        Encoding(args.encoding, args.n),
        tol=args.tol if args.tol is not None else 1e-9,
        max_qubits=args.max_qubits,
        max_amplitudes=args.max_amplitudes,
    )
    record = {
        "n": result.n,
        "encoding": result.encoding,
        "qubits": result.qubits,
        "distance": result.distance,
        "tolerance": result.tolerance,
        "pass": result.ok,
    }
    _emit(record, result.report_line(), args.json)
    return EXIT_OK if result.ok else EXIT_CHECK_FAILED


def cmd_counts(args) -> int:
    if args.n_max < 2:
        raise ValueError(f"--n-max must be >= 2, got {args.n_max}")
    rows = []
    all_match = True
    for n in range(2, args.n_max + 1):
        closed = closed_form_counts(n)
        row = {
            "n": n,
            "v_gates": closed.v_gates,
            "w_factors": closed.w_factors,
            "depth": closed.depth,
        }
        if n <= 10:
            structural = counts(build_circuit(n))
            row["structural"] = True
            row["match"] = structural == closed
        else:
            row["structural"] = False
            row["match"] = True
        all_match = all_match and row["match"]
        rows.append(row)
    if args.json:
        print(json.dumps(rows))
    else:
        for row in rows:
            print(
                f"n={row['n']} v_gates={row['v_gates']} w_factors={row['w_factors']} "
                f"depth={row['depth']} structural={str(row['structural']).lower()} "
                f"match={str(row['match']).lower()}"
            )
    return EXIT_OK if all_match else EXIT_CHECK_FAILED


def cmd_optimality(args) -> int:
    if not 2 <= args.n_max <= 10:
        raise ValueError(f"--n-max must be in 2..10, got {args.n_max}")
    rows = []
    all_match = True
    for n in range(2, args.n_max + 1):
        match = optimality_check(n)
        rows.append(
            {
                "n": n,
                "word_length": reversal_word_length(n),
                "v_gates": counts(build_circuit(n)).v_gates,
                "match": match,
            }
        )
        all_match = all_match and match
    if args.json:
        print(json.dumps(rows))
    else:
        for row in rows:
            print(
                f"n={row['n']} word_length={row['word_length']} "
                f"v_gates={row['v_gates']} match={str(row['match']).lower()}"
            )
    return EXIT_OK if all_match else EXIT_CHECK_FAILED


def _add_common(sub, n_flag=True):
    if n_flag:
        sub.add_argument("-n", type=int, required=True, help="particle count")
    sub.add_argument("--json", action="store_true", help="structured output")
    sub.add_argument("--tol", type=float, default=None, help="tolerance override")
    sub.add_argument(
        "--max-amplitudes",
        type=int,
        default=DEFAULT_MAX_AMPLITUDES,
        help="qudit statevector guard (default 8^8)",
    )
    sub.add_argument(
        "--max-qubits",
        type=int,
        default=DEFAULT_MAX_QUBITS,
        help="qubit statevector guard (default 22)",
    )


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laughlin",
        description="Exact preparation circuit for the filling-fraction-one "
        "Laughlin state: build, simulate, verify, analyze, compile.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("build", help="write the circuit in text form")
    _add_common(p)
    p.add_argument("--variant", choices=VARIANTS, default=ANTISYM)
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_build)

    p = subs.add_parser("simulate", help="run the circuit and dump amplitudes")
    _add_common(p)
    p.add_argument("--variant", choices=VARIANTS, default=ANTISYM)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_simulate)

    p = subs.add_parser("verify", help="compare circuit output to the brute-force state")
    _add_common(p)
    p.add_argument("--variant", choices=VARIANTS, default=ANTISYM)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("entropy", help="bipartite entropy of the circuit output")
    _add_common(p)
    p.add_argument("-k", type=int, required=True, help="wires in the left block")
    p.add_argument("--variant", choices=VARIANTS, default=ANTISYM)
    p.add_argument("--trace", action="store_true", help="per-gate entropy lines")
    p.set_defaults(func=cmd_entropy)

    p = subs.add_parser("coordcheck", help="coordinate-space proportionality check")
    _add_common(p)
    p.add_argument("--variant", choices=VARIANTS, default=ANTISYM)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_coordcheck)

    p = subs.add_parser("compile", help="lower to qubit IR")
    _add_common(p)
    p.add_argument("--encoding", choices=ENCODINGS, required=True)
    p.add_argument("--variant", choices=VARIANTS, default=ANTISYM)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_compile)

    p = subs.add_parser("qverify", help="simulate the compiled IR and cross-check")
    _add_common(p)
    p.add_argument("--encoding", choices=ENCODINGS, required=True)
    p.set_defaults(func=cmd_qverify)

    p = subs.add_parser("counts", help="gate totals vs closed forms")
    _add_common(p, n_flag=False)
    p.add_argument("--n-max", type=int, default=10)
    p.set_defaults(func=cmd_counts)

    p = subs.add_parser("optimality", help="reduced-word lower bound tie-out")
    _add_common(p, n_flag=False)
    p.add_argument("--n-max", type=int, default=10)
    p.set_defaults(func=cmd_optimality)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


def entry():  # console_scripts hook
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
