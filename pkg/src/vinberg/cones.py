"""Exact polyhedral cone computations via the double description method.

A cone {y : a . y <= 0 for all a} in Q^d is carried as generators split
into lines (the lineality space) and rays, all scaled to primitive integer
vectors.  Adjacency of rays is decided algebraically, by the rank of the
common tight constraint set, so redundant rays can never corrupt the
result; they only cost a little time at the sizes that occur here.
"""

from __future__ import annotations

from fractions import Fraction

from vinberg import linalg


def primitive_vector(v) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector."""
    den = 1
    for x in v:
        d = Fraction(x).denominator
        den = den * d // linalg.gcd_int(den, d)
    w = [int(Fraction(x) * den) for x in v]
    g = linalg.vec_content(w)
    if g > 1:
        w = [x // g for x in w]
    return tuple(w)


def _dot(a, v):
    return sum(x * y for x, y in zip(a, v))


def cone_generators(constraints, dim) -> tuple[list, list]:
    """Generators (lines, rays) of {y in Q^dim : a . y <= 0 for all a}."""
    lines = [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
    rays: list[tuple] = []
    processed: list[tuple] = []

    for a in constraints:
        a = tuple(a)
        pivot_idx = next((i for i, l in enumerate(lines) if _dot(a, l) != 0), None)
        if pivot_idx is not None:
            pivot = lines.pop(pivot_idx)
            pv = _dot(a, pivot)
            s = 1 if pv > 0 else -1
            # project every other generator onto the hyperplane a . y = 0;
            # the scaling factor s*pv is positive, so ray directions survive
            lines = [
                l if _dot(a, l) == 0 else primitive_vector(
                    [s * pv * x - s * _dot(a, l) * y for x, y in zip(l, pivot)]
                )
                for l in lines
            ]
            rays = [
                r if _dot(a, r) == 0 else primitive_vector(
                    [s * pv * x - s * _dot(a, r) * y for x, y in zip(r, pivot)]
                )
                for r in rays
            ]
            # the pivot line itself survives as the ray pointing inside
            rays.append(pivot if pv < 0 else tuple(-x for x in pivot))
        else:
            neg = [r for r in rays if _dot(a, r) < 0]
            zero = [r for r in rays if _dot(a, r) == 0]
            pos = [r for r in rays if _dot(a, r) > 0]
            tight = {
                r: [c for c in processed if _dot(c, r) == 0] for r in rays
            }
            new_rays = neg + zero
            for rp in pos:
                tp = set(map(tuple, tight[rp]))
                for rn in neg:
                    common = [c for c in tight[rn] if tuple(c) in tp]
                    # rays span a 2-face exactly when the common tight
                    # constraints cut the space down to lineality plus a plane
                    if len(rays) > 2 and linalg.rank(common) != dim - len(lines) - 2:
                        continue
                    vp, vn = _dot(a, rp), _dot(a, rn)
                    new_rays.append(
                        primitive_vector([vp * x - vn * y for x, y in zip(rn, rp)])
                    )
            rays = new_rays
        processed.append(a)

    seen = set()
    unique = []
    for r in rays:
        if r not in seen and any(r):
            seen.add(r)
            unique.append(r)
    return sorted(lines), sorted(unique)


def cone_is_trivial(constraints, dim) -> bool:
    """Whether the cone {a . y <= 0} is exactly the origin."""
    lines, rays = cone_generators(constraints, dim)
    return not lines and not rays
