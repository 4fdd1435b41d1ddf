# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled statevector kernels; same contract as _kernels_py."""

import numpy as np

cimport numpy as cnp

ctypedef double complex cplx


def apply_1q(cnp.ndarray[cplx, ndim=1] amps, int b, cnp.ndarray[cplx, ndim=2] u):
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t half = n >> 1
    cdef Py_ssize_t i, i0, i1
    cdef Py_ssize_t low_mask = (<Py_ssize_t>1 << b) - 1
    cdef Py_ssize_t bit = <Py_ssize_t>1 << b
    cdef cplx u00 = u[0, 0], u01 = u[0, 1], u10 = u[1, 0], u11 = u[1, 1]
    cdef cplx a0, a1
    for i in range(half):
        i0 = ((i >> b) << (b + 1)) | (i & low_mask)
        i1 = i0 | bit
        a0 = amps[i0]
        a1 = amps[i1]
        amps[i0] = u00 * a0 + u01 * a1
        amps[i1] = u10 * a0 + u11 * a1


def apply_2q(cnp.ndarray[cplx, ndim=1] amps, int b_hi, int b_lo,
             cnp.ndarray[cplx, ndim=2] u):
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t hi = <Py_ssize_t>1 << b_hi
    cdef Py_ssize_t lo = <Py_ssize_t>1 << b_lo
    cdef Py_ssize_t i, j, k
    cdef Py_ssize_t idx[4]
    cdef cplx v[4]
    cdef cplx w
    for i in range(n):
        if (i & hi) or (i & lo):
            continue
        idx[0] = i
        idx[1] = i | lo
        idx[2] = i | hi
        idx[3] = i | hi | lo
        for j in range(4):
            v[j] = amps[idx[j]]
        for j in range(4):
            w = 0
            for k in range(4):
                w = w + u[j, k] * v[k]
            amps[idx[j]] = w


def apply_3q(cnp.ndarray[cplx, ndim=1] amps, int b2, int b1, int b0,
             cnp.ndarray[cplx, ndim=2] u):
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t m2 = <Py_ssize_t>1 << b2
    cdef Py_ssize_t m1 = <Py_ssize_t>1 << b1
    cdef Py_ssize_t m0 = <Py_ssize_t>1 << b0
    cdef Py_ssize_t i, j, k, off
    cdef Py_ssize_t idx[8]
    cdef cplx v[8]
    cdef cplx w
    for i in range(n):
        if (i & m2) or (i & m1) or (i & m0):
            continue
        for j in range(8):
            off = 0
            if j & 4:
                off |= m2
            if j & 2:
                off |= m1
            if j & 1:
                off |= m0
            idx[j] = i | off
            v[j] = amps[idx[j]]
        for j in range(8):
            w = 0
            for k in range(8):
                w = w + u[j, k] * v[k]
            amps[idx[j]] = w


def branch_probability(cnp.ndarray[cplx, ndim=1] amps, int b):
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t bit = <Py_ssize_t>1 << b
    cdef double p = 0.0
    cdef Py_ssize_t i
    cdef cplx a
    for i in range(n):
        if i & bit:
            a = amps[i]
            p += a.real * a.real + a.imag * a.imag
    return p


def collapse(cnp.ndarray[cplx, ndim=1] amps, int b, int outcome, double prob):
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t bit = <Py_ssize_t>1 << b
    cdef double scale = 1.0 / (prob ** 0.5)
    cdef Py_ssize_t i
    for i in range(n):
        if ((i & bit) != 0) == (outcome != 0):
            amps[i] = amps[i] * scale
        else:
            amps[i] = 0
