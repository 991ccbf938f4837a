# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled batch-enumeration kernel.

Twin of _enum_py.enumerate_batch_vectors with the identical contract.
All arithmetic is signed 64-bit; enumeration.py routes any batch whose
intermediate values could overflow to the pure kernel instead, so this
module may assume its inputs fit.
"""

from libc.math cimport sqrt
from libc.stdint cimport int64_t
from libc.stdlib cimport free, malloc


cdef int64_t _isqrt(int64_t x) noexcept:
    if x <= 0:
        return 0
    cdef int64_t r = <int64_t>sqrt(<double>x)
    while r > 0 and r * r > x:
        r -= 1
    while (r + 1) * (r + 1) <= x:
        r += 1
    return r


cdef void _emit(int n, int64_t* j, int nprior, const int64_t* consts,
                const int64_t* coeffs, int64_t step, list out):
    cdef int r, i
    cdef int64_t s
    for r in range(nprior):
        s = consts[r]
        for i in range(n):
            s += coeffs[r * n + i] * j[i]
        if s > 0:
            return
    out.append(tuple([j[i] * step for i in range(n)]))


cdef void _dfs(int depth, int64_t remaining, int64_t cap, int n, int64_t* j,
               int nprior, const int64_t* consts, const int64_t* coeffs,
               int64_t step, list out):
    cdef int64_t r, v, sq, brk
    cdef int64_t slots
    if depth == n - 1:
        r = _isqrt(remaining)
        if r * r == remaining and r <= cap:
            j[depth] = r
            _emit(n, j, nprior, consts, coeffs, step, out)
        return
    v = _isqrt(remaining)
    if v > cap:
        v = cap
    slots = n - depth
    # v*v*slots < remaining, rewritten division-side to stay in range
    brk = (remaining + slots - 1) / slots - 1
    while v >= 0:
        sq = v * v
        if sq <= brk:
            break
        j[depth] = v
        _dfs(depth + 1, remaining - sq, v, n, j, nprior, consts, coeffs,
             step, out)
        v -= 1


def enumerate_batch_vectors(n, target, step, prior_consts, prior_coeffs):
    """Spatial parts of candidate roots for one batch.

    Yields every tuple (k_1, ..., k_n) with
      k_1 >= k_2 >= ... >= k_n >= 0,
      step | k_i for all i,
      k_1^2 + ... + k_n^2 = target,
      prior_consts[r] + sum_i prior_coeffs[r][i] * k_i <= 0 for every r,
    as a list in lexicographically decreasing order.
    """
    cdef int cn = n
    cdef int64_t tgt = target
    cdef int64_t stp = step
    cdef int nprior = len(prior_consts)
    cdef int r, i
    if stp > 1:
        if tgt % (stp * stp):
            return []
        tgt //= stp * stp
    out = []
    cdef int64_t* buf = <int64_t*> malloc(
        (cn + nprior + nprior * cn) * sizeof(int64_t))
    if buf == NULL:
        raise MemoryError()
    cdef int64_t* j = buf
    cdef int64_t* consts = buf + cn
    cdef int64_t* coeffs = consts + nprior
    try:
        for r in range(nprior):
            consts[r] = prior_consts[r]
            row = prior_coeffs[r]
            for i in range(cn):
                coeffs[r * cn + i] = row[i] * stp
        _dfs(0, tgt, _isqrt(tgt), cn, j, nprior, consts, coeffs, stp, out)
    finally:
        free(buf)
    return out
