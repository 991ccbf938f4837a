"""Independent brute-force re-implementations used to cross-check the package.

Each oracle recomputes its answer from first principles: reflections as
exact rational matrices, candidate enumeration as full box scans, root
classes by widening the shift window far past the claimed period.  None
of them share code with the fast paths they check.
"""

import math
from fractions import Fraction
from itertools import product
from math import isqrt


def reflection_matrix(form, r):
    """The reflection in r^perp as an exact rational matrix."""
    m = form.norm(r)
    dim = form.dim
    cols = []
    for j in range(dim):
        unit = tuple(1 if k == j else 0 for k in range(dim))
        ip = form.inner_product(r, unit)
        cols.append([
            (1 if i == j else 0) - Fraction(2 * ip * r[i], m) for i in range(dim)
        ])
    return [[cols[j][i] for j in range(dim)] for i in range(dim)]


def reflection_is_integral(form, r):
    """Root test via integrality of the reflection matrix."""
    if form.norm(r) <= 0:
        return False
    return all(x.denominator == 1 for row in reflection_matrix(form, r) for x in row)


def reflection_preserves_form(form, r):
    """R^T F R == F for the reflection in r, checked exactly."""
    R = reflection_matrix(form, r)
    F = form.form_matrix
    dim = form.dim
    for i in range(dim):
        for j in range(dim):
            s = sum(R[k][i] * F[k][l] * R[l][j] for k in range(dim) for l in range(dim))
            if s != F[i][j]:
                return False
    return True


def brute_force_accepted(form, max_height):
    """Greedy root acceptance re-derived with full box enumeration.

    Batches are all (k0, m) with k0 >= 1, m an admissible root norm and
    k0^2/m <= max_height, in strictly increasing height order; within a
    batch, candidates are every integer vector with first coordinate k0
    and norm m (no symmetry assumptions), scanned in lexicographically
    decreasing spatial order, accepted when the reflection is integral
    and the vector has inner product <= 0 with everything accepted so far.
    """
    batches = []
    for m in form.admissible_root_norms:
        k0 = 1
        while Fraction(k0 * k0, m) <= max_height:
            batches.append((Fraction(k0 * k0, m), k0, m))
            k0 += 1
    batches.sort()
    heights = [b[0] for b in batches]
    assert len(set(heights)) == len(heights), "batch heights must never tie"

    accepted = list(form.initial_roots())
    for _, k0, m in batches:
        target = m + form.p * k0 * k0
        if target < 0:
            continue
        bound = isqrt(target)
        cands = []
        for spatial in product(range(bound, -bound - 1, -1), repeat=form.n):
            if sum(x * x for x in spatial) != target:
                continue
            v = (k0,) + spatial
            if not reflection_is_integral(form, v):
                continue
            cands.append(v)
        cands.sort(key=lambda v: v[1:], reverse=True)
        for v in cands:
            if all(form.inner_product(v, a) <= 0 for a in accepted):
                accepted.append(v)
    return accepted


def root_class_witness_window(form, quot, coords, factor=10):
    """Smallest |t| in [-factor*m, factor*m) making lift + t e a root.

    The fast path claims the property is periodic in t with period m; this
    oracle searches a window far wider and reports what it finds, so a
    missed witness outside [0, m) would show up as a disagreement.
    """
    m = quot.class_norm(coords)
    if m <= 0:
        return None
    x = quot.lift(coords)
    e = quot.e
    for t in sorted(range(-factor * m, factor * m), key=lambda s: (abs(s), s)):
        v = tuple(a + t * b for a, b in zip(x, e))
        if math.gcd(*v) != 1:
            continue  # roots are primitive
        if form.norm(v) == m and reflection_is_integral(form, v):
            return t
    return None
