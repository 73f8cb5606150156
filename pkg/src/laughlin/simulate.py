"""Circuit execution and brute-force verification oracles.

``run`` plays a circuit's W factors on the dense register. ``oracle_state``
builds the target superposition directly: over all n! permutations
(a_1, ..., a_n) of 0..n-1, amplitude sign(P)/sqrt(n!) (antisymmetric) or
+1/sqrt(n!) (symmetric), with the identity permutation carrying +1.
``verify`` compares the two routes amplitude-wise.
"""

from dataclasses import dataclass
from math import factorial, sqrt
from typing import Optional

import numpy as np

from .circuit import SYM_REVERSED, VARIANTS, Circuit, build_circuit
from .states import (
    ANTISYM,
    DEFAULT_MAX_AMPLITUDES,
    SYM,
    QuditState,
    apply_w_inplace,
    basis_state,
    check_register_size,
    index_of,
    max_amplitude_distance,
)
from .perm import enumerate_permutations, parity


@dataclass
class RunTrace:
    """Final state plus optional per-V-gate snapshots (gate index, state)."""

    final: QuditState
    snapshots: Optional[list[tuple[int, QuditState]]] = None


def run(
    c: Circuit,
    snapshots: bool = False,
    max_amplitudes: int = DEFAULT_MAX_AMPLITUDES,
) -> RunTrace:
    """Apply every W factor of every V gate, in order, to the input state."""
    state = basis_state(c.input_digits, d=c.n, max_amplitudes=max_amplitudes)
    shots = [] if snapshots else None
    for idx, gate in enumerate(c.gates):
        for w in gate.factors:
            apply_w_inplace(state.amps, state.n, state.d, w)
        if snapshots:
            shots.append((idx, state.copy()))
    return RunTrace(final=state, snapshots=shots)


def oracle_state(
    n: int,
    sign_mode: str = ANTISYM,
    max_amplitudes: int = DEFAULT_MAX_AMPLITUDES,
) -> QuditState:
    """Brute-force n-particle superposition over all permutation basis states."""
    if not 2 <= n <= 8:
        raise ValueError(f"n={n} outside 2..8 for brute-force enumeration")
    if sign_mode not in (ANTISYM, SYM):
        raise ValueError(f"sign_mode must be {ANTISYM!r} or {SYM!r}, got {sign_mode!r}")
    check_register_size(n, n, max_amplitudes)
    amps = np.zeros(n**n, dtype=np.complex128)
    weight = 1.0 / sqrt(factorial(n))
    for perm in enumerate_permutations(n):
        sign = parity(perm) if sign_mode == ANTISYM else 1
        amps[index_of(perm.elems, n)] = sign * weight
    return QuditState(n, n, amps)


def state_tolerance(n: int) -> float:
    """Amplitude equality tolerance: double precision over O(n^3) rotations."""
    return 1e-10 if n <= 6 else 1e-9


@dataclass
class VerifyResult:
    n: int
    variant: str
    distance: float
    tolerance: float
    ok: bool
    #: Global phase factored out before comparing (sym_reversed only).
    phase: Optional[complex] = None

    def report_line(self) -> str:
        line = (
            f"n={self.n} variant={self.variant} distance={self.distance:.6e} "
            f"tolerance={self.tolerance:.1e} pass={str(self.ok).lower()}"
        )
        if self.phase is not None:
            line += f" phase={self.phase.real:+.6f}{self.phase.imag:+.6f}j"
        return line


def verify(
    n: int,
    variant: str = ANTISYM,
    tol: Optional[float] = None,
    max_amplitudes: int = DEFAULT_MAX_AMPLITUDES,
) -> VerifyResult:
    """Compare the circuit output against the brute-force superposition.

    ``antisym`` and ``sym`` are compared amplitude-wise with no phase
    freedom. ``sym_reversed`` is compared to the symmetric target up to one
    global phase, which is measured and reported rather than assumed.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    tolerance = state_tolerance(n) if tol is None else tol
    produced = run(build_circuit(n, variant), max_amplitudes=max_amplitudes).final
    reference = oracle_state(
        n, SYM if variant != ANTISYM else ANTISYM, max_amplitudes=max_amplitudes
    )
    phase = None
    if variant == SYM_REVERSED:
        anchor = int(np.argmax(np.abs(reference.amps)))
        raw = produced.amps[anchor] / reference.amps[anchor]
        phase = complex(raw / abs(raw))
        reference = QuditState(reference.n, reference.d, reference.amps * phase)
    distance = max_amplitude_distance(produced, reference)
    return VerifyResult(
        n=n,
        variant=variant,
        distance=distance,
        tolerance=tolerance,
        ok=distance <= tolerance,
        phase=phase,
    )
