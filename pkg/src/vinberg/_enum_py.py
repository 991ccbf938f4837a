"""Reference batch-enumeration kernel in pure Python.

The compiled kernel in _enum_cy implements exactly the same contract;
enumeration.py picks one at import time.  Keep the two in lockstep.
"""

from math import isqrt


def enumerate_batch_vectors(n, target, step, prior_consts, prior_coeffs):
    """Spatial parts of candidate roots for one batch.

    Yields every tuple (k_1, ..., k_n) with
      k_1 >= k_2 >= ... >= k_n >= 0,
      step | k_i for all i,
      k_1^2 + ... + k_n^2 = target,
      prior_consts[r] + sum_i prior_coeffs[r][i] * k_i <= 0 for every r,
    as a list in lexicographically decreasing order.
    """
    if step > 1:
        sq = step * step
        if target % sq:
            return []
        target //= sq
        prior_coeffs = [[c * step for c in row] for row in prior_coeffs]
    priors = list(zip(prior_consts, prior_coeffs))
    out = []
    j = [0] * n

    def emit():
        for base, row in priors:
            s = base
            for a, b in zip(row, j):
                s += a * b
            if s > 0:
                return
        out.append(tuple(x * step for x in j))

    def dfs(depth, remaining, cap):
        if depth == n - 1:
            r = isqrt(remaining)
            if r * r == remaining and r <= cap:
                j[depth] = r
                emit()
            return
        v = isqrt(remaining)
        if v > cap:
            v = cap
        slots = n - depth
        while v >= 0:
            sq = v * v
            if sq * slots < remaining:
                break
            j[depth] = v
            dfs(depth + 1, remaining - sq, v)
            v -= 1

    dfs(0, target, isqrt(target))
    return out
