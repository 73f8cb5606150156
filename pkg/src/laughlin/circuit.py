"""Recursive antisymmetrization circuit built from V gates of W factors.

The register starts in the product state |0, 1, ..., n-1>. The circuit grows
stage by stage: stage s extends the (s-1)-particle superposition to s
particles by sweeping the new value s-1 leftward with the adjacent-wire
gates V_{s-1}, ..., V_1, where V_k acts on wires (k-1, k) with common weight
p = 1/(k+1) and bundles the commuting exchange rotations W_{i, s-1} for
i = 0..s-2. Gate totals obey

    v_gates(n) = n(n-1)/2      w_factors(n) = n(n-1)(2n-1)/6
    depth(n)   = 2n-3          (unit-time V gates, ASAP schedule)

Three variants share the structure: ``antisym`` (the target state),
``sym`` (equal-sign superposition via the flipped gate sign), and
``sym_reversed`` (reversed input |n-1, ..., 0> with exchanged gate values
W_{n-1-j, n-1-i}, which hits only the positive branch of each rotation).
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .perm import reversal_word_length
from .states import ANTISYM, SYM, WGate

SYM_REVERSED = "sym_reversed"
VARIANTS = (ANTISYM, SYM, SYM_REVERSED)

#: Build guard: circuit construction is cheap, but downstream consumers
#: (compiler cost reports) cap at this size.
MAX_BUILD_N = 64


@dataclass(frozen=True)
class VGate:
    """Stage-s gate on wires (k-1, k): commuting W_{., s-1} factors, p = 1/(k+1)."""

    stage: int
    k: int
    factors: tuple[WGate, ...]

    @property
    def wires(self) -> tuple[int, int]:
        return (self.k - 1, self.k)

    @property
    def p(self) -> Fraction:
        return Fraction(1, self.k + 1)


@dataclass(frozen=True)
class Circuit:
    """Ordered V-gate program with its product-state input."""

    n: int
    variant: str
    gates: tuple[VGate, ...]
    input_digits: tuple[int, ...]


def _factor_values(n: int, stage: int, variant: str) -> list[tuple[int, int]]:
    """Value pairs (i, j) of the W factors that a stage-s V gate bundles."""
    pairs = [(i, stage - 1) for i in range(stage - 1)]
    if variant == SYM_REVERSED:
        # relabel v -> n-1-v; order each pair so the stored i < j
        pairs = [(n - 1 - j, n - 1 - i) for (i, j) in pairs]
    return pairs


def _make_v_gate(n: int, stage: int, k: int, variant: str) -> VGate:
    p = Fraction(1, k + 1)
    sign = SYM if variant == SYM else ANTISYM
    factors = tuple(
        WGate(wire_a=k - 1, wire_b=k, i=i, j=j, p=p, sign=sign)
        for (i, j) in _factor_values(n, stage, variant)
    )
    return VGate(stage=stage, k=k, factors=factors)


def build_circuit(n: int, variant: str = ANTISYM) -> Circuit:
    """Construct the n-particle circuit; gates are listed in execution order.

    Stage s contributes V_{s-1}, V_{s-2}, ..., V_1 (the rightmost factor of
    the operator product acts first).
    """
    if n < 2:
        raise ValueError(f"n={n} below the minimum of 2 particles")
    if n > MAX_BUILD_N:
        raise ValueError(f"n={n} above the build limit of {MAX_BUILD_N}")
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    gates = []
    for stage in range(2, n + 1):
        for k in range(stage - 1, 0, -1):
            gates.append(_make_v_gate(n, stage, k, variant))
    if variant == SYM_REVERSED:
        input_digits = tuple(range(n - 1, -1, -1))
    else:
        input_digits = tuple(range(n))
    return Circuit(n=n, variant=variant, gates=tuple(gates), input_digits=input_digits)


@dataclass(frozen=True)
class CircuitCounts:
    v_gates: int
    w_factors: int
    depth: int


def asap_depth(gates: Iterable[VGate]) -> int:
    """Schedule length with each V gate one time unit, greedy earliest-slot."""
    frontier: dict[int, int] = {}
    depth = 0
    for g in gates:
        a, b = g.wires
        slot = max(frontier.get(a, 0), frontier.get(b, 0)) + 1
        frontier[a] = frontier[b] = slot
        depth = max(depth, slot)
    return depth


def counts(c: Circuit) -> CircuitCounts:
    """Structural gate totals measured from the built circuit."""
    return CircuitCounts(
        v_gates=len(c.gates),
        w_factors=sum(len(g.factors) for g in c.gates),
        depth=asap_depth(c.gates),
    )


def closed_form_counts(n: int) -> CircuitCounts:
    """The closed-form totals n(n-1)/2, n(n-1)(2n-1)/6, 2n-3."""
    if n < 2:
        raise ValueError(f"n={n} below the minimum of 2 particles")
    return CircuitCounts(
        v_gates=n * (n - 1) // 2,
        w_factors=n * (n - 1) * (2 * n - 1) // 6,
        depth=2 * n - 3,
    )


def optimality_check(n: int) -> bool:
    """Gate count matches the reduced-word length of the maximum permutation.

    The output superposition contains the fully reversed ordering, whose
    minimal adjacent-transposition word has n(n-1)/2 letters, so no circuit
    of two-wire exchange gates can be shorter.
    """
    if not 2 <= n <= 10:
        raise ValueError(f"n={n} outside 2..10")
    return reversal_word_length(n) == counts(build_circuit(n)).v_gates


# --- circuit text format ---------------------------------------------------

_HEADER_RE = re.compile(r"^laughlin n=(\d+) variant=(\w+)$")
_INPUT_RE = re.compile(r"^input ((?:\d+ )*\d+)$")
_V_RE = re.compile(r"^v stage=(\d+) k=(\d+) wires=(\d+),(\d+) p=1/(\d+)$")


def emit_circuit(c: Circuit) -> str:
    """Serialize to the one-gate-per-line text format, execution order."""
    lines = [f"laughlin n={c.n} variant={c.variant}"]
    lines.append("input " + " ".join(str(a) for a in c.input_digits))
    for g in c.gates:
        lines.append(
            f"v stage={g.stage} k={g.k} wires={g.k - 1},{g.k} p=1/{g.k + 1}"
        )
    return "\n".join(lines) + "\n"


def parse_circuit(text: str) -> Circuit:
    """Parse :func:`emit_circuit` output; rejects malformed or inconsistent lines."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty circuit text")
    m = _HEADER_RE.match(lines[0])
    if not m:
        raise ValueError(f"bad header line: {lines[0]!r}")
    n, variant = int(m.group(1)), m.group(2)
    if n < 2:
        raise ValueError(f"n={n} below the minimum of 2 particles")
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if len(lines) < 2:
        raise ValueError("missing input line")
    m = _INPUT_RE.match(lines[1])
    if not m:
        raise ValueError(f"bad input line: {lines[1]!r}")
    input_digits = tuple(int(x) for x in m.group(1).split())
    expected_input = tuple(range(n - 1, -1, -1)) if variant == SYM_REVERSED else tuple(range(n))
    if input_digits != expected_input:
        raise ValueError(
            f"input {input_digits} does not match variant {variant} (expected {expected_input})"
        )
    gates = []
    for ln in lines[2:]:
        m = _V_RE.match(ln)
        if not m:
            raise ValueError(f"bad gate line: {ln!r}")
        stage, k, wa, wb, denom = (int(m.group(x)) for x in range(1, 6))
        if not 2 <= stage <= n:
            raise ValueError(f"stage {stage} outside 2..{n}: {ln!r}")
        if not 1 <= k <= stage - 1:
            raise ValueError(f"k={k} outside 1..{stage - 1}: {ln!r}")
        if (wa, wb) != (k - 1, k):
            raise ValueError(f"wires {wa},{wb} inconsistent with k={k}: {ln!r}")
        if denom != k + 1:
            raise ValueError(f"weight 1/{denom} must equal 1/{k + 1}: {ln!r}")
        gates.append(_make_v_gate(n, stage, k, variant))
    return Circuit(n=n, variant=variant, gates=tuple(gates), input_digits=input_digits)
