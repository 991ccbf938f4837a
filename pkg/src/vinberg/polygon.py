"""Norm/angle sequences of rank-2 chambers.

A finite-volume chamber for n = 2 is a hyperbolic polygon.  Walking its
walls in cyclic order gives a symbol: one entry per wall carrying the
wall's norm and the angle to the next wall, written pi/k by its integer k
(with "inf" for walls meeting at an ideal vertex).  The symbol is reduced
to a canonical rotation and direction, compressed by its cyclic period,
and the corresponding lattice rotation of the chamber is computed when one
exists.
"""

from __future__ import annotations

from vinberg import linalg
from vinberg.diagram import DIVERGENT, PARALLEL, build_diagram
from vinberg.errors import ConsistencyError
from vinberg.forms import Form

# edge kind -> angle denominator (pi / k); orthogonal walls carry kind None
_ANGLE = {None: 2, "simple": 3, "double": 4, "triple": 6, PARALLEL: "inf"}


def wall_cycle(form: Form, roots) -> list[int]:
    """Indices of the polygon walls in cyclic order.

    Two walls are consecutive when they meet in the closed hyperbolic
    plane, which for an acute-angled polygon means any angle short of
    divergence.  Every wall of a finite-volume polygon has exactly two
    such neighbours; anything else means the roots do not bound a polygon.
    """
    if form.n != 2:
        raise ValueError("norm/angle sequences are defined for n = 2 only")
    d = build_diagram(form, roots)
    count = len(roots)
    meet = {i: [] for i in range(count)}
    for i in range(count):
        for j in range(i + 1, count):
            if d.kind(i, j) != DIVERGENT:
                meet[i].append(j)
                meet[j].append(i)
    if any(len(v) != 2 for v in meet.values()):
        raise ConsistencyError("chamber walls do not close into a polygon")
    cycle = [0, min(meet[0])]
    while len(cycle) < count:
        prev, cur = cycle[-2], cycle[-1]
        nxt = meet[cur][0] if meet[cur][1] == prev else meet[cur][1]
        cycle.append(nxt)
    prev, cur = cycle[-2], cycle[-1]
    if (meet[cur][0] if meet[cur][1] == prev else meet[cur][1]) != cycle[0]:
        raise ConsistencyError("chamber walls do not close into a polygon")
    return cycle


def norm_angle_sequence(form: Form, roots) -> list[tuple]:
    """Symbol entries (norm_i, angle_i) along the wall cycle.

    angle_i describes the corner between wall i and wall i+1; the integer
    k stands for pi/k, the string "inf" for an ideal corner.
    """
    cycle = wall_cycle(form, roots)
    d = build_diagram(form, roots)
    seq = []
    for s, i in enumerate(cycle):
        j = cycle[(s + 1) % len(cycle)]
        seq.append((form.norm(roots[i]), _ANGLE[d.kind(i, j)]))
    return seq


def canonical_symbol(seq) -> dict:
    """Least cyclic rotation over both directions, compressed by period."""
    variants = []
    n = len(seq)
    for base in (list(seq), list(reversed([(m, seq[(i - 1) % n][1]) for i, (m, _) in enumerate(seq)]))):
        # reversing the walk flips each angle to the one before the wall
        for r in range(n):
            variants.append(tuple(base[r:] + base[:r]))
    best = min(variants, key=_symbol_key)
    period = n
    for k in range(1, n + 1):
        if n % k == 0 and best[:k] * (n // k) == best:
            period = k
            break
    return {
        "entries": [list(e) for e in best],
        "period_entries": [list(e) for e in best[:period]],
        "repeat": n // period,
        "text": format_symbol(best[:period], n // period),
    }


def _symbol_key(entries):
    return [(m, 0 if a == "inf" else a) for m, a in entries]


def format_symbol(entries, repeat=1) -> str:
    body = " ".join(f"{m}_{a}" for m, a in entries)
    if repeat > 1:
        return f"({body})^{repeat}"
    return body


def rotation_symmetry(form: Form, roots) -> dict | None:
    """Lattice rotation realizing the symbol's cyclic period, if any.

    For a symbol with repeat r > 1 the candidate map shifts the wall cycle
    by len/r.  It is determined by three independent walls; returned only
    if it maps every wall correctly, is integral, and preserves the form.
    """
    cycle = wall_cycle(form, roots)
    seq = norm_angle_sequence(form, roots)
    sym = canonical_symbol(seq)
    if sym["repeat"] <= 1:
        return None
    n = len(cycle)
    shift = n // sym["repeat"]
    walls = [roots[i] for i in cycle]
    A = [[walls[j][i] for j in range(3)] for i in range(form.dim)]
    if linalg.det(A) == 0:
        return None
    B = [[walls[(j + shift) % n][i] for j in range(3)] for i in range(form.dim)]
    T = linalg.mat_mul(B, linalg.mat_inv(A))
    if any(x.denominator != 1 for row in T for x in row):
        return None
    T = [[int(x) for x in row] for row in T]
    for j in range(n):
        image = tuple(sum(T[i][k] * walls[j][k] for k in range(form.dim)) for i in range(form.dim))
        if image != walls[(j + shift) % n]:
            return None
    F = form.form_matrix
    if linalg.mat_mul(linalg.mat_mul(linalg.transpose(T), F), T) != F:
        return None
    order = 1
    power = T
    identity = linalg.identity(form.dim)
    while power != identity and order <= 2 * n:
        power = linalg.mat_mul(power, T)
        order += 1
    return {
        "matrix": [list(row) for row in T],
        "shift": shift,
        "order": order if power == identity else None,
    }
