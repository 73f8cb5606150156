"""Lowering of the qudit circuit to qubit gates via Gray-code routing.

Each qudit value is stored either in binary (r = ceil(log2 n) qubits per
wire, most significant bit leftmost) or in unary (n qubits per wire, one-hot
from the left). A W gate on a wire pair mixes exactly the two encoded basis
strings enc(i)+enc(j) and enc(j)+enc(i). It compiles to:

  * a forward chain of multi-controlled bit flips walking enc(i)+enc(j)
    along a Gray path toward enc(j)+enc(i), stopping one bit short,
  * one multi-controlled rotation on that remaining (pivot) bit, with the
    2x2 block [[cos(t/2), sin(t/2)], [-sin(t/2), cos(t/2)]], p = cos^2(t/2),
    transposed when the walked string lands on the pivot=1 branch,
  * the forward chain reversed.

In the binary encoding every compiled op is controlled on all other 2r-1
qubits of the wire pair; in the unary encoding only the 4 qubits holding
positions i and j of either wire participate, so each W needs just 3
distinct flip gates plus the rotation. Multi-controlled ops are terminal:
cost is reported as total control arity, not expanded into two-qubit gates.
"""

import re
from dataclasses import dataclass
from math import acos, ceil, cos, log2, sin, sqrt
from typing import Iterable

import numpy as np

from . import kernels
from .circuit import Circuit, build_circuit
from .simulate import oracle_state
from .states import (
    ANTISYM,
    DEFAULT_MAX_AMPLITUDES,
    QuditState,
    ResourceLimitError,
    SYM,
    WGate,
    digits_of,
)

BINARY = "binary"
UNARY = "unary"
ENCODINGS = (BINARY, UNARY)

DEFAULT_MAX_QUBITS = 22


@dataclass(frozen=True)
class Encoding:
    """Qudit-to-qubit register map: ``r`` qubits per wire, ``n`` wires."""

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in ENCODINGS:
            raise ValueError(f"kind must be one of {ENCODINGS}, got {self.kind!r}")
        if self.n < 2:
            raise ValueError(f"n={self.n} below the minimum of 2")

    @property
    def r(self) -> int:
        if self.kind == BINARY:
            return max(1, ceil(log2(self.n)))
        return self.n

    @property
    def total_qubits(self) -> int:
        return self.n * self.r


def encode_value(v: int, e: Encoding) -> str:
    """Bit string for one qudit value: binary MSB-left, unary one-hot."""
    if not 0 <= v < e.n:
        raise ValueError(f"value {v} outside 0..{e.n - 1}")
    if e.kind == BINARY:
        return format(v, f"0{e.r}b")
    return "".join("1" if t == v else "0" for t in range(e.n))


@dataclass(frozen=True)
class GrayPath:
    """Bit-flip walk from ``source`` toward ``dest``, stopping at the pivot.

    ``steps`` holds the visited strings starting with ``source``; every
    consecutive pair differs in one bit, and the last step differs from
    ``dest`` only at ``pivot`` (a 0-based position into the strings).
    """

    steps: tuple[str, ...]
    pivot: int
    source: str
    dest: str


def gray_path(src: str, dst: str) -> GrayPath:
    """Flip differing bits left to right; the rightmost differing bit is the pivot."""
    if len(src) != len(dst):
        raise ValueError(f"length mismatch: {src!r} vs {dst!r}")
    if src == dst:
        raise ValueError(f"degenerate path: source equals destination {src!r}")
    differing = [x for x in range(len(src)) if src[x] != dst[x]]
    pivot = differing[-1]
    steps = [src]
    current = list(src)
    for x in differing[:-1]:
        current[x] = dst[x]
        steps.append("".join(current))
    return GrayPath(steps=tuple(steps), pivot=pivot, source=src, dest=dst)


FLIP = "flip"
MC_FLIP = "mc_flip"
MC_ROT = "mc_rot"


@dataclass(frozen=True)
class QubitOp:
    """One IR op: bare X, multi-controlled X, or multi-controlled rotation.

    Controls are (qubit, polarity) pairs; polarity 0 fires on |0>, 1 on |1>.
    For rotations, p = cos^2(theta/2); ``dagger`` transposes the 2x2 block.
    """

    kind: str
    target: int
    controls: tuple[tuple[int, int], ...] = ()
    theta: float = 0.0
    dagger: bool = False

    def __post_init__(self):
        qubits = [q for q, _ in self.controls]
        if len(set(qubits)) != len(qubits) or self.target in qubits:
            raise ValueError(f"controls {self.controls} must be distinct and exclude target {self.target}")


@dataclass(frozen=True)
class QubitProgram:
    """Encoded input preparation (X flips) plus the compiled gate sequence."""

    encoding: Encoding
    prep: tuple[QubitOp, ...]
    ops: tuple[QubitOp, ...]


def _pair_qubits(g: WGate, e: Encoding) -> tuple[list[int], str, str]:
    """Participating absolute qubits plus source/dest strings for one W gate."""
    if g.j >= e.n:
        raise ValueError(f"gate values ({g.i}, {g.j}) exceed encoding for n={e.n}")
    r = e.r
    if e.kind == BINARY:
        qubits = [g.wire_a * r + t for t in range(r)] + [g.wire_b * r + t for t in range(r)]
        src = encode_value(g.i, e) + encode_value(g.j, e)
        dst = encode_value(g.j, e) + encode_value(g.i, e)
    else:
        # only the one-hot positions i and j of either wire participate
        qubits = [
            g.wire_a * r + g.i,
            g.wire_a * r + g.j,
            g.wire_b * r + g.i,
            g.wire_b * r + g.j,
        ]
        src, dst = "1001", "0110"
    return qubits, src, dst


def compile_w(g: WGate, e: Encoding) -> list[QubitOp]:
    """Compile one W gate to mc-flips along the Gray path plus one rotation."""
    qubits, src, dst = _pair_qubits(g, e)
    path = gray_path(src, dst)
    forward = []
    for t in range(len(path.steps) - 1):
        before, after = path.steps[t], path.steps[t + 1]
        flip_at = next(x for x in range(len(src)) if before[x] != after[x])
        controls = tuple(
            (qubits[x], int(before[x])) for x in range(len(src)) if x != flip_at
        )
        forward.append(QubitOp(kind=MC_FLIP, target=qubits[flip_at], controls=controls))
    last = path.steps[-1]
    controls = tuple(
        (qubits[x], int(last[x])) for x in range(len(src)) if x != path.pivot
    )
    # the walked |ij> image lands on the pivot-0 or pivot-1 branch; the
    # rotation block is transposed so the net action matches the gate sign
    dagger = (last[path.pivot] == "1") != (g.sign == SYM)
    rotation = QubitOp(
        kind=MC_ROT,
        target=qubits[path.pivot],
        controls=controls,
        theta=2.0 * acos(sqrt(float(g.p))),
        dagger=dagger,
    )
    return forward + [rotation] + list(reversed(forward))


def compile_circuit(c: Circuit, e: Encoding) -> QubitProgram:
    """Prep flips for the encoded input, then every W factor compiled in order."""
    if c.n != e.n:
        raise ValueError(f"circuit n={c.n} does not match encoding n={e.n}")
    prep = []
    for wire, value in enumerate(c.input_digits):
        bits = encode_value(value, e)
        for x, ch in enumerate(bits):
            if ch == "1":
                prep.append(QubitOp(kind=FLIP, target=wire * e.r + x))
    ops = []
    for gate in c.gates:
        for w in gate.factors:
            ops.extend(compile_w(w, e))
    return QubitProgram(encoding=e, prep=tuple(prep), ops=tuple(ops))


def _2x2_entries(op: QubitOp) -> tuple[float, float, float, float]:
    if op.kind in (FLIP, MC_FLIP):
        return 0.0, 1.0, 1.0, 0.0
    c, s = cos(op.theta / 2.0), sin(op.theta / 2.0)
    if op.dagger:
        s = -s
    return c, s, -s, c


def _apply_op(amps: np.ndarray, nq: int, op: QubitOp):
    # qubit q (0 = leftmost/most significant) lives at bit position nq-1-q
    t_pos = nq - 1 - op.target
    fixed = sorted([(nq - 1 - q, pol) for q, pol in op.controls] + [(t_pos, 0)])
    ins_pos = np.array([p for p, _ in fixed], dtype=np.intp)
    ins_val = np.array([v for _, v in fixed], dtype=np.intp)
    m00, m01, m10, m11 = _2x2_entries(op)
    kernels.apply_mc_2x2(amps, nq, ins_pos, ins_val, t_pos, m00, m01, m10, m11)


def simulate_program(
    p: QubitProgram, max_qubits: int = DEFAULT_MAX_QUBITS
) -> np.ndarray:
    """Dense 2**q statevector after prep and all ops on |0...0>."""
    q = p.encoding.total_qubits
    if q > max_qubits:
        raise ResourceLimitError(
            f"program needs {q} qubits (2**{q} amplitudes), over the limit of "
            f"{max_qubits}; raise max_qubits to override"
        )
    amps = np.zeros(1 << q, dtype=np.complex128)
    amps[0] = 1.0
    for op in p.prep:
        _apply_op(amps, q, op)
    for op in p.ops:
        _apply_op(amps, q, op)
    return amps


def encoded_index(digits: Iterable[int], e: Encoding) -> int:
    """Qubit basis-state index of an encoded digit string."""
    bits = "".join(encode_value(v, e) for v in digits)
    return int(bits, 2)


def embed_state(state: QuditState, e: Encoding) -> np.ndarray:
    """Map a qudit statevector into the encoded qubit space."""
    if state.n != e.n:
        raise ValueError(f"state has {state.n} wires, encoding expects {e.n}")
    out = np.zeros(1 << e.total_qubits, dtype=np.complex128)
    for k in np.nonzero(np.abs(state.amps) > 0)[0]:
        digits = digits_of(int(k), state.n, state.d)
        out[encoded_index(digits, e)] = state.amps[k]
    return out


@dataclass
class CompiledVerifyResult:
    n: int
    encoding: str
    qubits: int
    distance: float
    tolerance: float
    ok: bool

    def report_line(self) -> str:
        return (
            f"n={self.n} encoding={self.encoding} qubits={self.qubits} "
            f"distance={self.distance:.6e} tolerance={self.tolerance:.1e} "
            f"pass={str(self.ok).lower()}"
        )


def verify_compiled(
    n: int,
    e: Encoding,
    tol: float = 1e-9,
    max_qubits: int = DEFAULT_MAX_QUBITS,
    max_amplitudes: int = DEFAULT_MAX_AMPLITUDES,
) -> CompiledVerifyResult:
    """Cross-simulator check: compiled program vs the embedded oracle state."""
    program = compile_circuit(build_circuit(n, ANTISYM), e)
    produced = simulate_program(program, max_qubits=max_qubits)
    reference = embed_state(oracle_state(n, ANTISYM, max_amplitudes=max_amplitudes), e)
    distance = float(np.abs(produced - reference).max())
    return CompiledVerifyResult(
        n=n,
        encoding=e.kind,
        qubits=e.total_qubits,
        distance=distance,
        tolerance=tol,
        ok=distance <= tol,
    )


@dataclass(frozen=True)
class CostReport:
    """Structural compilation cost; arity growth tracks the CNOT scaling."""

    n: int
    encoding: str
    compiled_w: int
    mc_ops: int
    total_control_arity: int


def cost_report(n: int, kind: str) -> CostReport:
    """Count compiled ops and control arity without materializing the IR.

    Every mc op carries 2r-1 controls (binary) or 3 (unary); a W gate whose
    encoded pair strings differ in ``d2`` bits costs 2*(d2-1)+1 ops.
    """
    e = Encoding(kind, n)
    circuit = build_circuit(n)
    arity = 2 * e.r - 1 if kind == BINARY else 3
    compiled_w = 0
    mc_ops = 0
    for gate in circuit.gates:
        for w in gate.factors:
            compiled_w += 1
            if kind == BINARY:
                d2 = 2 * bin(w.i ^ w.j).count("1")
            else:
                d2 = 4
            mc_ops += 2 * (d2 - 1) + 1
    return CostReport(
        n=n,
        encoding=kind,
        compiled_w=compiled_w,
        mc_ops=mc_ops,
        total_control_arity=arity * mc_ops,
    )


# --- qubit IR text format ----------------------------------------------------

_QHEADER_RE = re.compile(r"^qprog qubits=(\d+) encoding=(\w+) n=(\d+) r=(\d+)$")
_X_RE = re.compile(r"^x t=(\d+)$")
_MCX_RE = re.compile(r"^mcx c=([\d:,]+) t=(\d+)$")
_MCRY_RE = re.compile(r"^mcry c=([\d:,]+) t=(\d+) theta=(\S+) dag=([01])$")


def _emit_controls(controls) -> str:
    return ",".join(f"{q}:{pol}" for q, pol in controls)


def _parse_controls(text: str) -> tuple[tuple[int, int], ...]:
    out = []
    for part in text.split(","):
        q, pol = part.split(":")
        if pol not in ("0", "1"):
            raise ValueError(f"bad control polarity in {part!r}")
        out.append((int(q), int(pol)))
    return tuple(out)


def emit_program(p: QubitProgram) -> str:
    """Serialize to the one-op-per-line IR; theta keeps 17 significant digits."""
    e = p.encoding
    lines = [f"qprog qubits={e.total_qubits} encoding={e.kind} n={e.n} r={e.r}"]
    for op in p.prep:
        lines.append(f"x t={op.target}")
    for op in p.ops:
        if op.kind == MC_FLIP:
            lines.append(f"mcx c={_emit_controls(op.controls)} t={op.target}")
        elif op.kind == MC_ROT:
            lines.append(
                f"mcry c={_emit_controls(op.controls)} t={op.target} "
                f"theta={format(op.theta, '.17g')} dag={int(op.dagger)}"
            )
        else:
            lines.append(f"x t={op.target}")
    return "\n".join(lines) + "\n"


def parse_program(text: str) -> QubitProgram:
    """Parse :func:`emit_program` output; leading bare X lines are the prep."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty program text")
    m = _QHEADER_RE.match(lines[0])
    if not m:
        raise ValueError(f"bad header line: {lines[0]!r}")
    qubits, kind, n, r = int(m.group(1)), m.group(2), int(m.group(3)), int(m.group(4))
    e = Encoding(kind, n)
    if e.r != r or e.total_qubits != qubits:
        raise ValueError(
            f"header claims qubits={qubits} r={r}, encoding implies "
            f"qubits={e.total_qubits} r={e.r}"
        )
    prep: list[QubitOp] = []
    ops: list[QubitOp] = []
    in_prep = True
    for ln in lines[1:]:
        m = _X_RE.match(ln)
        if m:
            op = QubitOp(kind=FLIP, target=int(m.group(1)))
            (prep if in_prep else ops).append(op)
            continue
        in_prep = False
        m = _MCX_RE.match(ln)
        if m:
            ops.append(
                QubitOp(
                    kind=MC_FLIP,
                    target=int(m.group(2)),
                    controls=_parse_controls(m.group(1)),
                )
            )
            continue
        m = _MCRY_RE.match(ln)
        if m:
            ops.append(
                QubitOp(
                    kind=MC_ROT,
                    target=int(m.group(2)),
                    controls=_parse_controls(m.group(1)),
                    theta=float(m.group(3)),
                    dagger=m.group(4) == "1",
                )
            )
            continue
        raise ValueError(f"unrecognized IR line: {ln!r}")
    for op in prep + ops:
        if op.target >= qubits or any(q >= qubits for q, _ in op.controls):
            raise ValueError(f"op touches qubits outside 0..{qubits - 1}: {op}")
    return QubitProgram(encoding=e, prep=tuple(prep), ops=tuple(ops))
