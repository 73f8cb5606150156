"""Dense statevector over n qudits with exact two-qudit exchange rotations.

A register of n qudits of local dimension d holds d**n complex amplitudes,
indexed in mixed radix with wire 0 most significant, matching the reading
order of kets |a_1, ..., a_n>. The only entangling gate is the exchange
rotation W_ij(p), which acts on the two-dimensional fiber spanned by |ij>
and |ji> on a wire pair:

    W|ij> = sqrt(p) |ij> -+ sqrt(1-p) |ji>
    W|ji> = sqrt(p) |ji> +- sqrt(1-p) |ij>

(upper signs: antisymmetrizing gate, lower: symmetrizing) and as the
identity on every other basis state.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import sqrt
from typing import Iterable, Sequence, TextIO, Union

import numpy as np

from . import kernels

#: Amplitude budget of the default guard rail: an 8-qudit register at d=8.
DEFAULT_MAX_AMPLITUDES = 8**8

ANTISYM = "antisym"
SYM = "sym"
GATE_SIGNS = (ANTISYM, SYM)


class ResourceLimitError(RuntimeError):
    """A requested register or simulation exceeds the configured guard."""


def check_register_size(n: int, d: int, max_amplitudes: int = DEFAULT_MAX_AMPLITUDES):
    """Reject registers whose d**n amplitude count exceeds the guard."""
    needed = d**n
    if needed > max_amplitudes:
        raise ResourceLimitError(
            f"register of {n} qudits at d={d} needs {needed} amplitudes, "
            f"over the limit of {max_amplitudes}; raise max_amplitudes to override"
        )


@dataclass
class QuditState:
    """n-wire qudit statevector; ``amps`` has shape (d**n,), complex128."""

    n: int
    d: int
    amps: np.ndarray

    def __post_init__(self):
        if self.amps.shape != (self.d**self.n,):
            raise ValueError(
                f"amplitude array has shape {self.amps.shape}, "
                f"expected ({self.d**self.n},) for n={self.n}, d={self.d}"
            )

    def copy(self) -> "QuditState":
        return QuditState(self.n, self.d, self.amps.copy())

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))


@dataclass(frozen=True)
class WGate:
    """Exchange rotation W_ij(p) on a wire pair, values i < j, weight p."""

    wire_a: int
    wire_b: int
    i: int
    j: int
    p: Union[Fraction, float]
    sign: str = ANTISYM

    def __post_init__(self):
        if not 0 <= self.wire_a < self.wire_b:
            raise ValueError(f"need 0 <= wire_a < wire_b, got ({self.wire_a}, {self.wire_b})")
        if not 0 <= self.i < self.j:
            raise ValueError(f"need 0 <= i < j, got ({self.i}, {self.j})")
        if not 0 <= self.p <= 1:
            raise ValueError(f"weight p={self.p} outside [0, 1]")
        if self.sign not in GATE_SIGNS:
            raise ValueError(f"sign must be one of {GATE_SIGNS}, got {self.sign!r}")


def index_of(digits: Sequence[int], d: int) -> int:
    """Mixed-radix index of a digit string, wire 0 most significant."""
    x = 0
    for a in digits:
        x = x * d + a
    return x


def digits_of(index: int, n: int, d: int) -> tuple[int, ...]:
    """Inverse of :func:`index_of`."""
    out = []
    for _ in range(n):
        out.append(index % d)
        index //= d
    return tuple(reversed(out))


def basis_state(
    digits: Sequence[int],
    d: int | None = None,
    max_amplitudes: int = DEFAULT_MAX_AMPLITUDES,
) -> QuditState:
    """Computational basis state |digits>; d defaults to the wire count."""
    digits = tuple(digits)
    n = len(digits)
    if n == 0:
        raise ValueError("need at least one wire")
    if d is None:
        d = n
    for w, a in enumerate(digits):
        if not 0 <= a < d:
            raise ValueError(f"digit {a} at wire {w} outside 0..{d - 1}")
    check_register_size(n, d, max_amplitudes)
    amps = np.zeros(d**n, dtype=np.complex128)
    amps[index_of(digits, d)] = 1.0
    return QuditState(n, d, amps)


def _check_gate_fits(state: QuditState, g: WGate):
    if g.wire_b >= state.n:
        raise ValueError(f"gate wires ({g.wire_a}, {g.wire_b}) exceed {state.n} wires")
    if g.j >= state.d:
        raise ValueError(f"gate values ({g.i}, {g.j}) exceed local dimension {state.d}")


def apply_w_inplace(amps: np.ndarray, n: int, d: int, g: WGate):
    """Apply a W gate directly on an amplitude array (no copy)."""
    p = float(g.p)
    sign = 1.0 if g.sign == ANTISYM else -1.0
    kernels.apply_w_fiber(
        amps, n, d, g.wire_a, g.wire_b, g.i, g.j, sqrt(p), sqrt(1.0 - p), sign
    )


def apply_w(state: QuditState, g: WGate) -> QuditState:
    """Return the state with one exchange rotation applied."""
    _check_gate_fits(state, g)
    out = state.copy()
    apply_w_inplace(out.amps, out.n, out.d, g)
    return out


def swap_wires(state: QuditState, a: int, b: int) -> QuditState:
    """Exchange two wires: amplitude of (..x_a..x_b..) moves to (..x_b..x_a..)."""
    if a == b or not (0 <= a < state.n and 0 <= b < state.n):
        raise ValueError(f"invalid wire pair ({a}, {b}) for {state.n} wires")
    cube = state.amps.reshape([state.d] * state.n)
    return QuditState(state.n, state.d, cube.swapaxes(a, b).reshape(-1).copy())


def _check_same_shape(a: QuditState, b: QuditState):
    if (a.n, a.d) != (b.n, b.d):
        raise ValueError(
            f"shape mismatch: ({a.n} wires, d={a.d}) vs ({b.n} wires, d={b.d})"
        )


def inner_product(a: QuditState, b: QuditState) -> complex:
    """<a|b> = sum conj(a_k) b_k."""
    _check_same_shape(a, b)
    return complex(np.vdot(a.amps, b.amps))


def max_amplitude_distance(a: QuditState, b: QuditState) -> float:
    """max_k |a_k - b_k|: the amplitude-wise verification metric."""
    _check_same_shape(a, b)
    return float(np.abs(a.amps - b.amps).max())


def dump_amplitudes(state: QuditState, out: TextIO, tol: float = 1e-12):
    """Write the nonzero-amplitude dump: one tab-separated record per entry.

    Header line ``n=<n> d=<d> tol=<tol>``; each record holds the digit string
    (comma-separated), the real part and the imaginary part.
    """
    out.write(f"n={state.n} d={state.d} tol={tol:g}\n")
    for k in np.nonzero(np.abs(state.amps) > tol)[0]:
        digits = ",".join(str(a) for a in digits_of(int(k), state.n, state.d))
        amp = state.amps[k]
        out.write(f"{digits}\t{amp.real:.17g}\t{amp.imag:.17g}\n")


def load_amplitudes(lines: Iterable[str]) -> QuditState:
    """Rebuild a state from :func:`dump_amplitudes` output (dropped entries stay 0)."""
    it = iter(lines)
    try:
        header = next(it).split()
    except StopIteration:
        raise ValueError("empty amplitude dump") from None
    fields = dict(part.split("=", 1) for part in header)
    n, d = int(fields["n"]), int(fields["d"])
    amps = np.zeros(d**n, dtype=np.complex128)
    for line in it:
        line = line.strip()
        if not line:
            continue
        digit_str, re_str, im_str = line.split("\t")
        digits = tuple(int(x) for x in digit_str.split(","))
        amps[index_of(digits, d)] = float(re_str) + 1j * float(im_str)
    return QuditState(n, d, amps)
