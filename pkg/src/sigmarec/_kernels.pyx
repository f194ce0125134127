# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled implementations of the hot kernels.

Signature-compatible with :mod:`sigmarec._pykernels`.  The divisor
sieve and the figurate recurrences run on C int64 arrays (exact well
beyond any max_n that fits in memory; a hard guard refuses inputs
anywhere near the overflow analysis bound).  The partition and series
kernels keep Python integer objects for the values, so they stay exact
at any size; the speedup there comes from C loop control and direct
list access.
"""

from cpython.list cimport PyList_GET_ITEM, PyList_SET_ITEM
from libc.stdlib cimport free, malloc

COMPILED = True

# Intermediate sums in the int64 kernels are bounded by
# ~sqrt(2 n) * sigma(n) + n, which stays below 2**63 for any n up to
# this guard by a factor of more than 10**4.
INT64_GUARD_MAX_N = 1_000_000_000


cdef long long* _as_i64_array(object seq, Py_ssize_t n) except NULL:
    # never malloc(0): its return value is platform-defined
    cdef long long* arr = <long long*> malloc(
        (n if n > 0 else 1) * sizeof(long long))
    if arr == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    try:
        for i in range(n):
            arr[i] = seq[i]
    except BaseException:
        free(arr)
        raise
    return arr


def divisor_sieve(max_n, modulus, weights):
    """Harmonic divisor sieve on an int64 array; see the pure twin."""
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    if max_n > INT64_GUARD_MAX_N:
        raise ValueError("beyond the int64 kernel guard; use the pure lane")
    if modulus < 1 or len(weights) != modulus:
        raise ValueError("weights must have exactly one entry per residue")

    cdef long long N = max_n
    cdef long long mod = modulus
    cdef long long* w = _as_i64_array(weights, mod)
    cdef long long* vals = <long long*> malloc((N + 1) * sizeof(long long))
    if vals == NULL:
        free(w)
        raise MemoryError()
    cdef long long d, m, wd
    try:
        for m in range(N + 1):
            vals[m] = 0
        for d in range(1, N + 1):
            wd = w[d % mod] * d
            if wd == 0:
                continue
            m = d
            while m <= N:
                vals[m] += wd
                m += d
        return [vals[m] for m in range(N + 1)]
    finally:
        free(vals)
        free(w)


def figurate_recurrence(max_n, offsets, signs, hit_factor):
    """Bottom-up int64 recurrence table; see the pure twin."""
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    if max_n > INT64_GUARD_MAX_N:
        raise ValueError("beyond the int64 kernel guard; use the pure lane")

    cdef long long N = max_n
    cdef Py_ssize_t nsupp = len(offsets)
    cdef long long hit = hit_factor
    cdef long long* offs = _as_i64_array(offsets, nsupp)
    cdef long long* sgn = NULL
    cdef long long* vals = NULL
    cdef long long n, acc, off
    cdef Py_ssize_t j
    try:
        sgn = _as_i64_array(signs, nsupp)
        vals = <long long*> malloc((N + 1) * sizeof(long long))
        if vals == NULL:
            raise MemoryError()
        vals[0] = 0
        for n in range(1, N + 1):
            acc = 0
            j = 0
            while j < nsupp:
                off = offs[j]
                if off > n:
                    break
                if off == n:
                    acc += hit * sgn[j] * n
                else:
                    acc += sgn[j] * vals[n - off]
                j += 1
            vals[n] = acc
        return [vals[n] for n in range(N + 1)]
    finally:
        free(offs)
        if sgn != NULL:
            free(sgn)
        if vals != NULL:
            free(vals)


def partition_series(max_n, offsets, signs):
    """Partition counts p(0..max_n); Python integers, exact at any size."""
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")

    cdef Py_ssize_t N = max_n
    cdef Py_ssize_t nsupp = len(offsets)
    cdef long long* offs = _as_i64_array(offsets, nsupp)
    cdef long long* sgn = NULL
    cdef list vals = [0] * (N + 1)
    cdef Py_ssize_t n, j
    cdef long long off
    cdef object acc
    try:
        sgn = _as_i64_array(signs, nsupp)
        vals[0] = 1
        for n in range(1, N + 1):
            acc = 0
            j = 0
            while j < nsupp:
                off = offs[j]
                if off > n:
                    break
                if sgn[j] > 0:
                    acc = acc + <object> PyList_GET_ITEM(vals, n - off)
                else:
                    acc = acc - <object> PyList_GET_ITEM(vals, n - off)
                j += 1
            vals[n] = acc
        return vals
    finally:
        free(offs)
        if sgn != NULL:
            free(sgn)


def convolve_series(list a, list b, order):
    """Cauchy product truncated to ``order``; Python integers."""
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    cdef Py_ssize_t N = order
    cdef list out = [0] * (N + 1)
    cdef Py_ssize_t i, j, hi
    cdef object ai, bj, cur
    for i in range(min(la, N + 1)):
        ai = <object> PyList_GET_ITEM(a, i)
        if not ai:
            continue
        hi = min(N - i, lb - 1)
        for j in range(hi + 1):
            bj = <object> PyList_GET_ITEM(b, j)
            if bj:
                cur = <object> PyList_GET_ITEM(out, i + j)
                out[i + j] = cur + ai * bj
    return out


def invert_series(list a):
    """Inverse of a unit series; forward recurrence, Python integers."""
    cdef object a0 = a[0]
    if a0 != 1 and a0 != -1:
        raise ValueError(f"constant term must be +1 or -1, got {a0}")
    cdef Py_ssize_t n1 = len(a)
    cdef list b = [0] * n1
    b[0] = a0
    cdef Py_ssize_t n, k
    cdef object s, ak
    cdef bint negate = a0 == 1
    for n in range(1, n1):
        s = 0
        for k in range(1, n + 1):
            ak = <object> PyList_GET_ITEM(a, k)
            if ak:
                s = s + ak * <object> PyList_GET_ITEM(b, n - k)
        b[n] = -s if negate else s
    return b


def binomial_factor(list coeffs, exponent, sign):
    """In-place multiply by (1 + sign * q**exponent); Python integers."""
    if exponent < 1:
        raise ValueError(f"exponent must be >= 1, got {exponent}")
    if sign != 1 and sign != -1:
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    cdef Py_ssize_t e = exponent
    cdef Py_ssize_t n
    cdef bint add = sign == 1
    cdef object cur, src
    for n in range(len(coeffs) - 1, e - 1, -1):
        cur = <object> PyList_GET_ITEM(coeffs, n)
        src = <object> PyList_GET_ITEM(coeffs, n - e)
        coeffs[n] = cur + src if add else cur - src
