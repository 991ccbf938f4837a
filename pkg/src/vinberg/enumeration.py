"""Batch candidate enumeration with kernel selection.

The hot loop lives in _enum_cy (compiled) when available, falling back to
the pure-Python twin _enum_py.  Set VINBERG_PURE_KERNEL=1 to force the
fallback.  Batches whose numbers could overflow signed 64-bit arithmetic
are routed to the pure kernel regardless of selection.
"""

from __future__ import annotations

import os
from math import isqrt

from vinberg import _enum_py

_kernel = _enum_py
_backend = "pure"
if not os.environ.get("VINBERG_PURE_KERNEL"):
    try:
        from vinberg import _enum_cy

        _kernel = _enum_cy
        _backend = "compiled"
    except ImportError:
        pass

# headroom below 2^63 for the dot products the kernel accumulates
_INT64_SAFE = 2**61


def kernel_backend() -> str:
    """Either "compiled" or "pure"."""
    return _backend


def _fits_int64(n, target, step, consts, coeffs) -> bool:
    big_c = max((abs(c) for c in consts), default=0)
    big_a = max((abs(a) for row in coeffs for a in row), default=0)
    worst = big_c + n * big_a * step * (isqrt(target) + 1)
    return target < _INT64_SAFE and worst < _INT64_SAFE


def enumerate_batch(form, k0, m, prior_roots) -> list[tuple[int, ...]]:
    """Candidate roots with first coordinate k0 and norm m.

    Candidates satisfy the root divisibility conditions, have non-increasing
    nonnegative spatial coordinates (the initial chamber), and inner product
    <= 0 with every vector of prior_roots.  Ordered lexicographically
    decreasing in the spatial part.
    """
    target = m + form.p * k0 * k0
    # norm p or 2p forces p | k_i for i >= 1; norms 1 and 2 impose nothing
    step = form.p if m % form.p == 0 else 1
    consts = [-form.p * k0 * r[0] for r in prior_roots]
    coeffs = [list(r[1:]) for r in prior_roots]
    kern = _kernel
    if kern is not _enum_py and not _fits_int64(form.n, target, step, consts, coeffs):
        kern = _enum_py
    vecs = kern.enumerate_batch_vectors(form.n, target, step, consts, coeffs)
    return [(k0, *v) for v in vecs]
