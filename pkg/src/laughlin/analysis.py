"""Entanglement and coordinate-space analysis of the prepared states.

Bipartite von Neumann entropy is measured in bits from the Schmidt spectrum
of the reshaped statevector. For the antisymmetrized n-particle output, any
k wires carry exactly log2 C(n, k) bits; along the circuit, the gate V_k of
stage s raises the entropy across the first-k cut by log2(s/(s-k)) and
leaves every other cut unchanged. Single wires are maximally entangled
(log2 n bits); larger subsets stay below the k*log2(n) ceiling.

The coordinate-space cross-check reconstructs the first-quantized wave
function from the amplitudes using the angular-momentum orbitals

    phi_l(z) = z**l * exp(-|z|**2 / 2) / sqrt(pi * l!)

and tests proportionality to the Vandermonde-times-Gaussian form
prod_{i<j} (z_i - z_j) * exp(-sum |z_j|**2 / 2).
"""

from dataclasses import dataclass
from math import comb, factorial, log2, pi, sqrt

import numpy as np

from .circuit import Circuit
from .simulate import run
from .states import DEFAULT_MAX_AMPLITUDES, QuditState, digits_of

#: Schmidt coefficients at or below this are numerical zeros (0 log 0 = 0).
SCHMIDT_CUTOFF = 1e-14


def bipartite_entropy(state: QuditState, subset) -> float:
    """Von Neumann entropy (bits) of the reduced state on ``subset`` wires.

    The subset may be non-contiguous; the state is reshaped by an index
    permutation, never mutated. Requires a nonempty proper subset.
    """
    wires = sorted(set(subset))
    if not wires or len(wires) == len(set(range(state.n))):
        raise ValueError(f"subset {subset} must be a nonempty proper subset of wires")
    if any(not 0 <= w < state.n for w in wires):
        raise ValueError(f"subset {subset} has wires outside 0..{state.n - 1}")
    rest = [w for w in range(state.n) if w not in wires]
    cube = state.amps.reshape([state.d] * state.n)
    matrix = cube.transpose(wires + rest).reshape(state.d ** len(wires), -1)
    sigma = np.linalg.svd(matrix, compute_uv=False)
    lam = sigma[sigma > SCHMIDT_CUTOFF] ** 2
    return float(-(lam * np.log2(lam)).sum()) + 0.0 if lam.size else 0.0


@dataclass(frozen=True)
class EntropyStep:
    gate_index: int
    stage: int
    gate_k: int
    entropy: float
    delta: float
    delta_expected: float

    def report_line(self) -> str:
        return (
            f"gate={self.gate_index} stage={self.stage} k={self.gate_k} "
            f"S={self.entropy:.8f} dS={self.delta:.8f} "
            f"dS_expected={self.delta_expected:.8f}"
        )


@dataclass(frozen=True)
class EntropyTrace:
    """Entropy across the first-``cut`` wires after each V gate."""

    cut: int
    steps: tuple[EntropyStep, ...]

    @property
    def final_entropy(self) -> float:
        return self.steps[-1].entropy if self.steps else 0.0


def expected_gate_delta(stage: int, gate_k: int, cut: int) -> float:
    """log2(stage/(stage-cut)) for a gate sitting on the cut, else 0."""
    return log2(stage / (stage - cut)) if gate_k == cut else 0.0


def entropy_trace(
    c: Circuit, cut: int, max_amplitudes: int = DEFAULT_MAX_AMPLITUDES
) -> EntropyTrace:
    """Per-gate entropy of the first-``cut`` wire block along the circuit."""
    if not 1 <= cut <= c.n - 1:
        raise ValueError(f"cut {cut} outside 1..{c.n - 1}")
    trace = run(c, snapshots=True, max_amplitudes=max_amplitudes)
    subset = list(range(cut))
    steps = []
    previous = 0.0  # product-state input carries no entanglement
    for (idx, snapshot), gate in zip(trace.snapshots, c.gates):
        entropy = bipartite_entropy(snapshot, subset)
        steps.append(
            EntropyStep(
                gate_index=idx,
                stage=gate.stage,
                gate_k=gate.k,
                entropy=entropy,
                delta=entropy - previous,
                delta_expected=expected_gate_delta(gate.stage, gate.k, cut),
            )
        )
        previous = entropy
    return EntropyTrace(cut=cut, steps=tuple(steps))


def binomial_entropy(n: int, k: int) -> float:
    """log2 C(n, k) bits, from the exact integer binomial."""
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    return log2(comb(n, k))


def saturation_gap(n: int, k: int) -> float:
    """k*log2(n) - log2 C(n, k) >= 0; zero exactly at k=1."""
    if not 1 <= k <= n / 2:
        raise ValueError(f"k={k} outside 1..n/2 for n={n}")
    return k * log2(n) - binomial_entropy(n, k)


def fock_darwin(l: int, z: complex) -> complex:
    """Angular-momentum orbital phi_l(z) = z**l exp(-|z|^2/2)/sqrt(pi l!)."""
    if l < 0:
        raise ValueError(f"angular momentum l={l} must be >= 0")
    return z**l * np.exp(-abs(z) ** 2 / 2.0) / sqrt(pi * factorial(l))


def vandermonde_gaussian(zs: np.ndarray) -> complex:
    """prod_{i<j} (z_i - z_j) * exp(-sum |z_j|^2 / 2)."""
    n = len(zs)
    prod = 1.0 + 0.0j
    for i in range(n):
        for j in range(i + 1, n):
            prod *= zs[i] - zs[j]
    return complex(prod * np.exp(-np.sum(np.abs(zs) ** 2) / 2.0))


def reconstruct_amplitude(state: QuditState, zs: np.ndarray) -> complex:
    """First-quantized amplitude: sum over basis states of amp * prod phi."""
    total = 0.0 + 0.0j
    for k in np.nonzero(np.abs(state.amps) > 0)[0]:
        digits = digits_of(int(k), state.n, state.d)
        term = state.amps[k]
        for w, l in enumerate(digits):
            term *= fock_darwin(l, zs[w])
        total += term
    return complex(total)


@dataclass(frozen=True)
class CoordinateCheckResult:
    n: int
    samples: int
    seed: int
    max_relative_spread: float

    def report_line(self) -> str:
        return (
            f"n={self.n} samples={self.samples} seed={self.seed} "
            f"max_relative_spread={self.max_relative_spread:.6e}"
        )


def coordinate_check(
    state: QuditState, samples: int = 10, rng_seed: int = 0
) -> CoordinateCheckResult:
    """Spread of reconstructed-amplitude / Vandermonde-Gaussian ratios.

    Draws ``samples`` coordinate tuples from a complex Gaussian (unit total
    variance per point), resampling any draw with two points closer than
    1e-6. Reports max over draws of |ratio - ratio_0| / |ratio_0|; for the
    antisymmetrized output the ratio is an exact constant.
    """
    if samples < 2:
        raise ValueError(f"need samples >= 2, got {samples}")
    rng = np.random.default_rng(rng_seed)
    ratios = []
    while len(ratios) < samples:
        zs = (rng.standard_normal(state.n) + 1j * rng.standard_normal(state.n)) / sqrt(2)
        if min(
            abs(zs[i] - zs[j])
            for i in range(state.n)
            for j in range(i + 1, state.n)
        ) < 1e-6:
            continue  # coincident points: Vandermonde reference degenerates
        ratios.append(reconstruct_amplitude(state, zs) / vandermonde_gaussian(zs))
    anchor = ratios[0]
    spread = max(abs(r - anchor) / abs(anchor) for r in ratios)
    return CoordinateCheckResult(
        n=state.n, samples=samples, seed=rng_seed, max_relative_spread=spread
    )
