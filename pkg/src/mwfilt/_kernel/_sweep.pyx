# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled sweep kernel. Mirrors _sweep_py.sweep_kernel exactly: same branch
codes, same cascade order, same conversion formulas."""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"

DEF PI = 3.141592653589793


def sweep_kernel(cnp.int32_t[::1] codes,
                 cnp.float64_t[::1] l_nh,
                 cnp.float64_t[::1] c_nf,
                 cnp.float64_t[::1] f_ghz,
                 double rs_ohm,
                 double rl_ohm):
    cdef Py_ssize_t m = f_ghz.shape[0]
    cdef Py_ssize_t nb = codes.shape[0]
    cdef cnp.ndarray s21_arr = np.empty(m, dtype=np.complex128)
    cdef cnp.ndarray s11_arr = np.empty(m, dtype=np.complex128)
    cdef cnp.ndarray det_arr = np.empty(m, dtype=np.complex128)
    cdef double complex[::1] s21 = s21_arr
    cdef double complex[::1] s11 = s11_arr
    cdef double complex[::1] det = det_arr

    cdef Py_ssize_t i, t
    cdef int code, res
    cdef double w, x, ln, cn
    cdef double complex a, b, c, d, z, y, den, dt
    cdef double rt = (rs_ohm * rl_ohm) ** 0.5

    for i in range(m):
        w = 2.0 * PI * f_ghz[i]
        a = 1.0
        b = 0.0
        c = 0.0
        d = 1.0
        dt = 1.0
        for t in range(nb):
            code = codes[t]
            res = code & 3
            ln = l_nh[t]
            cn = c_nf[t]
            if res == 0:
                x = w * ln
            elif res == 1:
                x = -1.0 / (w * cn)
            elif res == 2:
                x = w * ln - 1.0 / (w * cn)
            else:
                x = -1.0 / (w * cn - 1.0 / (w * ln))
            if code < 4:
                z = x * 1j
                b = a * z + b
                d = c * z + d
                dt = dt * (1.0 - z * 0.0)
            else:
                y = (-1.0 / x) * 1j
                a = a + b * y
                c = c + d * y
                dt = dt * (1.0 - 0.0 * y)
        # det(prod M_i) = prod det(M_i); a*d - b*c of the cascaded entries
        # loses the unit determinant to cancellation near branch resonances.
        det[i] = dt
        den = a * rl_ohm + b + c * rs_ohm * rl_ohm + d * rs_ohm
        s21[i] = 2.0 * rt / den
        s11[i] = (a * rl_ohm + b - c * rs_ohm * rl_ohm - d * rs_ohm) / den

    return s21_arr, s11_arr, det_arr
