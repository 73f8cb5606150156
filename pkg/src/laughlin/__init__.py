"""Exact qudit circuit for the filling-fraction-one Laughlin state.

The package builds the recursive antisymmetrization circuit, simulates it on
a dense qudit register, verifies the output against brute-force permutation
superpositions, measures how entanglement accumulates gate by gate, and
lowers the circuit to qubit-level multi-controlled gates through Gray-code
routing in binary or unary encodings.
"""

from . import kernels
from .analysis import (
    CoordinateCheckResult,
    EntropyStep,
    EntropyTrace,
    binomial_entropy,
    bipartite_entropy,
    coordinate_check,
    entropy_trace,
    expected_gate_delta,
    fock_darwin,
    saturation_gap,
    vandermonde_gaussian,
)
from .circuit import (
    SYM_REVERSED,
    VARIANTS,
    Circuit,
    CircuitCounts,
    VGate,
    asap_depth,
    build_circuit,
    closed_form_counts,
    counts,
    emit_circuit,
    optimality_check,
    parse_circuit,
)
from .compiler import (
    BINARY,
    ENCODINGS,
    UNARY,
    CompiledVerifyResult,
    CostReport,
    Encoding,
    GrayPath,
    QubitOp,
    QubitProgram,
    compile_circuit,
    compile_w,
    cost_report,
    embed_state,
    emit_program,
    encode_value,
    encoded_index,
    gray_path,
    parse_program,
    simulate_program,
    verify_compiled,
)
from .perm import (
    Permutation,
    ReducedWord,
    apply_word,
    canonical_reduced_decomposition,
    enumerate_permutations,
    inversion_count,
    max_permutation,
    parity,
    reversal_word_length,
)
from .simulate import RunTrace, VerifyResult, oracle_state, run, state_tolerance, verify
from .states import (
    ANTISYM,
    DEFAULT_MAX_AMPLITUDES,
    SYM,
    QuditState,
    ResourceLimitError,
    WGate,
    apply_w,
    basis_state,
    digits_of,
    dump_amplitudes,
    index_of,
    inner_product,
    load_amplitudes,
    max_amplitude_distance,
    swap_wires,
)

__version__ = "0.1.0"
