# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled stabilizer tableau kernels.

Same contract as the pure-numpy module: (2n, n) uint8 x/z bit matrices with
destabilizer rows first, (2n,) sign bits. Selected at import when available.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

IMPL = "cython"


cdef inline int _g(int x1, int z1, int x2, int z2) nogil:
    if x1 == 0 and z1 == 0:
        return 0
    if x1 == 1 and z1 == 1:
        return z2 - x2
    if x1 == 1:
        return z2 * (2 * x2 - 1)
    return x2 * (1 - 2 * z2)


cdef void _rowsum(cnp.uint8_t[:, ::1] x, cnp.uint8_t[:, ::1] z,
                  cnp.uint8_t[::1] r, Py_ssize_t h, Py_ssize_t i) nogil:
    cdef Py_ssize_t n = x.shape[1]
    cdef Py_ssize_t j
    cdef long total = 2 * r[h] + 2 * r[i]
    for j in range(n):
        total += _g(x[i, j], z[i, j], x[h, j], z[h, j])
        x[h, j] ^= x[i, j]
        z[h, j] ^= z[i, j]
    total %= 4
    if total < 0:
        total += 4
    r[h] = <cnp.uint8_t>(total // 2)


def rowsum(cnp.uint8_t[:, ::1] x, cnp.uint8_t[:, ::1] z,
           cnp.uint8_t[::1] r, Py_ssize_t h, Py_ssize_t i):
    _rowsum(x, z, r, h, i)


def gate_h(cnp.uint8_t[:, ::1] x, cnp.uint8_t[:, ::1] z,
           cnp.uint8_t[::1] r, Py_ssize_t q):
    cdef Py_ssize_t i
    cdef cnp.uint8_t tmp
    for i in range(x.shape[0]):
        r[i] ^= x[i, q] & z[i, q]
        tmp = x[i, q]
        x[i, q] = z[i, q]
        z[i, q] = tmp


def gate_s(cnp.uint8_t[:, ::1] x, cnp.uint8_t[:, ::1] z,
           cnp.uint8_t[::1] r, Py_ssize_t q):
    cdef Py_ssize_t i
    for i in range(x.shape[0]):
        r[i] ^= x[i, q] & z[i, q]
        z[i, q] ^= x[i, q]


def gate_x(cnp.uint8_t[:, ::1] x, cnp.uint8_t[:, ::1] z,
           cnp.uint8_t[::1] r, Py_ssize_t q):
    cdef Py_ssize_t i
    for i in range(x.shape[0]):
        r[i] ^= z[i, q]


def gate_y(cnp.uint8_t[:, ::1] x, cnp.uint8_t[:, ::1] z,
           cnp.uint8_t[::1] r, Py_ssize_t q):
    cdef Py_ssize_t i
    for i in range(x.shape[0]):
        r[i] ^= x[i, q] ^ z[i, q]


def gate_z(cnp.uint8_t[:, ::1] x, cnp.uint8_t[:, ::1] z,
           cnp.uint8_t[::1] r, Py_ssize_t q):
    cdef Py_ssize_t i
    for i in range(x.shape[0]):
        r[i] ^= x[i, q]


def gate_cnot(cnp.uint8_t[:, ::1] x, cnp.uint8_t[:, ::1] z,
              cnp.uint8_t[::1] r, Py_ssize_t a, Py_ssize_t b):
    cdef Py_ssize_t i
    for i in range(x.shape[0]):
        r[i] ^= x[i, a] & z[i, b] & (x[i, b] ^ z[i, a] ^ 1)
        x[i, b] ^= x[i, a]
        z[i, a] ^= z[i, b]


def gate_cz(cnp.uint8_t[:, ::1] x, cnp.uint8_t[:, ::1] z,
            cnp.uint8_t[::1] r, Py_ssize_t a, Py_ssize_t b):
    gate_h(x, z, r, b)
    gate_cnot(x, z, r, a, b)
    gate_h(x, z, r, b)


def det_outcome(cnp.uint8_t[:, ::1] x, cnp.uint8_t[:, ::1] z,
                cnp.uint8_t[::1] r, Py_ssize_t q):
    cdef Py_ssize_t n = x.shape[1]
    cdef Py_ssize_t i, j
    for i in range(n, 2 * n):
        if x[i, q]:
            return -1
    sx_arr = np.zeros(n, dtype=np.uint8)
    sz_arr = np.zeros(n, dtype=np.uint8)
    cdef cnp.uint8_t[::1] sx = sx_arr
    cdef cnp.uint8_t[::1] sz = sz_arr
    cdef long total
    cdef int sr = 0
    for i in range(n):
        if x[i, q]:
            total = 2 * sr + 2 * r[n + i]
            for j in range(n):
                total += _g(x[n + i, j], z[n + i, j], sx[j], sz[j])
                sx[j] ^= x[n + i, j]
                sz[j] ^= z[n + i, j]
            total %= 4
            if total < 0:
                total += 4
            sr = <int>(total // 2)
    return sr


def measure(cnp.uint8_t[:, ::1] x, cnp.uint8_t[:, ::1] z,
            cnp.uint8_t[::1] r, Py_ssize_t q, double rand):
    cdef Py_ssize_t n = x.shape[1]
    cdef Py_ssize_t p = -1
    cdef Py_ssize_t i, j
    for i in range(n, 2 * n):
        if x[i, q]:
            p = i
            break
    if p < 0:
        return det_outcome(x, z, r, q)
    for i in range(2 * n):
        if i != p and x[i, q]:
            _rowsum(x, z, r, i, p)
    for j in range(n):
        x[p - n, j] = x[p, j]
        z[p - n, j] = z[p, j]
        x[p, j] = 0
        z[p, j] = 0
    r[p - n] = r[p]
    z[p, q] = 1
    cdef int outcome = 1 if rand < 0.5 else 0
    r[p] = <cnp.uint8_t>outcome
    return outcome


def pauli_sign(cnp.uint8_t[:, ::1] x, cnp.uint8_t[:, ::1] z,
               cnp.uint8_t[::1] r, cnp.uint8_t[::1] px, cnp.uint8_t[::1] pz):
    cdef Py_ssize_t n = x.shape[1]
    cdef Py_ssize_t i, j
    cdef int parity
    for i in range(n, 2 * n):
        parity = 0
        for j in range(n):
            parity ^= (x[i, j] & pz[j]) ^ (z[i, j] & px[j])
        if parity:
            return 0
    sx_arr = np.zeros(n, dtype=np.uint8)
    sz_arr = np.zeros(n, dtype=np.uint8)
    cdef cnp.uint8_t[::1] sx = sx_arr
    cdef cnp.uint8_t[::1] sz = sz_arr
    cdef long total
    cdef int sr = 0
    for i in range(n):
        parity = 0
        for j in range(n):
            parity ^= (x[i, j] & pz[j]) ^ (z[i, j] & px[j])
        if parity:
            total = 2 * sr + 2 * r[n + i]
            for j in range(n):
                total += _g(x[n + i, j], z[n + i, j], sx[j], sz[j])
                sx[j] ^= x[n + i, j]
                sz[j] ^= z[n + i, j]
            total %= 4
            if total < 0:
                total += 4
            sr = <int>(total // 2)
    for j in range(n):
        if sx[j] != px[j] or sz[j] != pz[j]:
            raise AssertionError("tableau inconsistency: commuting Pauli not in group")
    return -1 if sr else 1
