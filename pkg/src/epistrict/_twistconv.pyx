# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled twisted-convolution kernel for chord coefficients.

Computes out[u] = sum_{v+w=u (folded)} cf[v] cg[w] alpha^{v_b w_a - v_a w_b}
with the (-1)^{b} / (-1)^{a} aliasing signs, alpha = exp(i pi / N), on the
centered label range r_j = j - N//2.  Mirrors the NumPy fallback in
moyal/twisted.py element for element.
"""

import numpy as np

cimport cython
cimport numpy as cnp

cnp.import_array()


def twisted_convolution(cnp.complex128_t[:, ::1] cf not None,
                        cnp.complex128_t[:, ::1] cg not None):
    cdef Py_ssize_t n = cf.shape[0]
    if cf.shape[1] != n or cg.shape[0] != n or cg.shape[1] != n:
        raise ValueError("coefficient arrays must be square and same size")
    cdef Py_ssize_t j0 = n // 2
    cdef Py_ssize_t two_n = 2 * n
    out_arr = np.zeros((n, n), dtype=np.complex128)
    cdef cnp.complex128_t[:, ::1] out = out_arr
    # alpha^e for e in [0, 2N): alpha = exp(i pi / n) has order 2N
    alpha_arr = np.exp(1j * np.pi * np.arange(two_n) / n)
    cdef cnp.complex128_t[::1] alpha = alpha_arr

    cdef Py_ssize_t ai, bi, ci, di, ui, uj
    cdef long va, vb, wa, wb, ua, ub, ka, kb, e
    cdef cnp.complex128_t c, phase

    for ai in range(n):
        va = ai - j0
        for bi in range(n):
            vb = bi - j0
            c = cf[ai, bi]
            if c == 0:
                continue
            for ci in range(n):
                wa = ci - j0
                ua = va + wa
                ka = 0
                if ua < -j0:
                    ka = 1
                elif ua > n - 1 - j0:
                    ka = -1
                ua += ka * n
                ui = ua + j0
                for di in range(n):
                    wb = di - j0
                    ub = vb + wb
                    kb = 0
                    if ub < -j0:
                        kb = 1
                    elif ub > n - 1 - j0:
                        kb = -1
                    ub += kb * n
                    uj = ub + j0
                    # phase exponent mod 2N, including aliasing signs
                    e = vb * wa - va * wb + n * (ka * (vb + wb) + kb * ua)
                    e %= two_n
                    if e < 0:
                        e += two_n
                    out[ui, uj] = out[ui, uj] + c * cg[ci, di] * alpha[e]
    return out_arr
