# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled gate kernels: the hot inner loops of the statevector simulators.

Semantics match ``_numpy_backend`` exactly; both backends are exercised by
the same test suite and compared by ``benchmarks/bench_kernels.py``.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def apply_w_fiber(double complex[::1] amps, int n, int d, int wire_a, int wire_b,
                  int val_i, int val_j, double sp, double sq, double sign):
    """Rotate every (i,j)/(j,i) amplitude pair of a two-qudit exchange gate."""
    cdef Py_ssize_t stride_a = 1, stride_b = 1
    cdef int w
    for w in range(n - 1 - wire_a):
        stride_a *= d
    for w in range(n - 1 - wire_b):
        stride_b *= d

    # strides of the n-2 spectator wires, most significant first
    cdef Py_ssize_t[::1] strides = np.empty(max(n - 2, 1), dtype=np.intp)
    cdef Py_ssize_t[::1] counters = np.zeros(max(n - 2, 1), dtype=np.intp)
    cdef Py_ssize_t total = 1, stride = 1
    cdef int m = n - 3
    for w in range(n - 1, -1, -1):
        if w != wire_a and w != wire_b:
            strides[m] = stride
            m -= 1
            total *= d
        stride *= d

    cdef Py_ssize_t x = val_i * stride_a + val_j * stride_b
    cdef Py_ssize_t delta = (val_j - val_i) * (stride_a - stride_b)
    cdef Py_ssize_t t, k
    cdef double complex u, v
    for t in range(total):
        u = amps[x]
        v = amps[x + delta]
        amps[x] = sp * u + sign * sq * v
        amps[x + delta] = -sign * sq * u + sp * v
        # odometer over the spectator digits
        k = n - 3
        while k >= 0:
            counters[k] += 1
            x += strides[k]
            if counters[k] < d:
                break
            x -= strides[k] * d
            counters[k] = 0
            k -= 1


def apply_mc_2x2(double complex[::1] amps, int nq, Py_ssize_t[::1] ins_pos,
                 Py_ssize_t[::1] ins_val, int t_pos,
                 double m00, double m01, double m10, double m11):
    """Apply a real 2x2 matrix on a target bit, restricted by control bits."""
    cdef Py_ssize_t nfixed = ins_pos.shape[0]
    cdef Py_ssize_t nfree = nq - nfixed
    cdef Py_ssize_t tmask = (<Py_ssize_t> 1) << t_pos
    cdef Py_ssize_t g, x, f, pos
    cdef double complex u, v
    for g in range((<Py_ssize_t> 1) << nfree):
        x = g
        for f in range(nfixed):
            pos = ins_pos[f]
            x = ((x >> pos) << (pos + 1)) | (x & (((<Py_ssize_t> 1) << pos) - 1)) | (ins_val[f] << pos)
        u = amps[x]
        v = amps[x | tmask]
        amps[x] = m00 * u + m01 * v
        amps[x | tmask] = m10 * u + m11 * v
