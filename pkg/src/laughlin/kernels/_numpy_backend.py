"""Vectorized NumPy gate kernels (fallback backend).

Same call signatures as the compiled backend in ``_cykernels``. All kernels
mutate the amplitude array in place; callers own copy semantics.
"""

import numpy as np


def apply_w_fiber(amps, n, d, wire_a, wire_b, val_i, val_j, sp, sq, sign):
    """Rotate every (i,j)/(j,i) amplitude pair of a two-qudit exchange gate.

    Touches exactly the 2*d**(n-2) amplitudes whose digits at ``wire_a`` and
    ``wire_b`` are (val_i, val_j) or (val_j, val_i):

        new_ij =        sp * ij + sign * sq * ji
        new_ji = -sign * sq * ij +        sp * ji

    with sp = sqrt(p), sq = sqrt(1-p); sign is +1 for the antisymmetrizing
    gate and -1 for the symmetrizing one.
    """
    stride_a = d ** (n - 1 - wire_a)
    stride_b = d ** (n - 1 - wire_b)
    bases = np.zeros(1, dtype=np.intp)
    for w in range(n):
        if w == wire_a or w == wire_b:
            continue
        stride = d ** (n - 1 - w)
        bases = (bases[:, None] + np.arange(d, dtype=np.intp)[None, :] * stride).ravel()
    idx_ij = bases + val_i * stride_a + val_j * stride_b
    idx_ji = bases + val_j * stride_a + val_i * stride_b
    u = amps[idx_ij]
    v = amps[idx_ji]
    amps[idx_ij] = sp * u + sign * sq * v
    amps[idx_ji] = -sign * sq * u + sp * v


def apply_mc_2x2(amps, nq, ins_pos, ins_val, t_pos, m00, m01, m10, m11):
    """Apply a real 2x2 matrix on a target bit, restricted by control bits.

    ``ins_pos``/``ins_val`` list every fixed bit position (controls plus the
    target with value 0) in ascending order of bit position; positions count
    from the least significant bit. The matrix acts on the (target=0,
    target=1) amplitude pair of every index matching the controls.
    """
    nfree = nq - len(ins_pos)
    g = np.arange(1 << nfree, dtype=np.intp)
    for pos, val in zip(ins_pos, ins_val):
        g = ((g >> pos) << (pos + 1)) | (g & ((1 << int(pos)) - 1)) | (int(val) << pos)
    hi = g | (1 << t_pos)
    u = amps[g]
    v = amps[hi]
    amps[g] = m00 * u + m01 * v
    amps[hi] = m10 * u + m11 * v
