"""Infinite-order chamber symmetries from vertex frames.

A chamber that never closes up can still be proved infinite by exhibiting
a symmetry: an integral isometry of the form carrying one ordinary vertex
of the chamber, together with its complete wall set, to another.  Such a
map sends the chamber to itself (two chambers of one hyperplane
arrangement that share a germ coincide), so if it has infinite order the
wall set cannot be finite.

Partial search states suffice for this argument when two facts are
certified exactly:

1. The corner really lies in the closure of the full chamber, not just
   the part cut out so far.  Any wall separating the corner from the
   control vertex crosses the geodesic between them, which bounds its
   batch height; completing the ladder strictly past that bound rules
   every such wall out.

2. The corner's wall set is complete.  The walls through an ordinary
   vertex are facets of the cone cut out by all lattice roots orthogonal
   to it, a finite computation in the definite lattice x^perp cap L that
   does not depend on the search state at all.

Order is decided exactly from the characteristic polynomial: an integer
matrix has finite order iff every irreducible factor is cyclotomic and
the matrix is semisimple (the squarefree part annihilates it).
"""

from __future__ import annotations

from fractions import Fraction

from vinberg import cones, linalg
from vinberg.errors import ConsistencyError
from vinberg.forms import Form

try:  # factorization of integer polynomials; only needed on this route
    import sympy
except ImportError:  # pragma: no cover
    sympy = None


def _units(dim):
    return [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]


def chamber_corners(form: Form, roots) -> list[dict]:
    """Ordinary vertices of the partial chamber cut out by the given roots.

    Corners are the negative-norm extreme rays of the cone on the
    non-positive side of every root, as primitive future-pointing vectors,
    each with the indices of all roots orthogonal to it.  Sorted by vector.
    """
    dim = form.dim
    units = _units(dim)
    rows = [tuple(form.inner_product(r, u) for u in units) for r in roots]
    lines, rays = cones.cone_generators(rows, dim)
    if lines:
        return []
    corners = []
    for ray in sorted(cones.primitive_vector(y) for y in rays):
        if form.norm(ray) >= 0 or ray[0] <= 0:
            continue
        orth = [
            i for i in range(len(roots)) if form.inner_product(roots[i], ray) == 0
        ]
        if linalg.rank([list(roots[i]) for i in orth]) < form.n:
            continue
        corners.append({"vector": ray, "orthogonal": orth})
    return corners


def null_corner_vector(form: Form, walls):
    """Primitive generator of the line orthogonal to n independent walls,
    oriented toward the future light cone.

    The walls of a chamber meeting at a corner (ordinary or ideal) pin the
    corner down as this line; its generator has norm < 0 for an ordinary
    vertex and 0 for an ideal one.  A positive-norm line means the walls
    do not bound a corner, which is an error.
    """
    dim = form.dim
    units = _units(dim)
    rows = [[form.inner_product(w, u) for u in units] for w in walls]
    line = linalg.integer_kernel(rows)
    if len(line) != 1:
        raise ValueError("walls must cut out a line")
    v = tuple(line[0])
    if form.norm(v) > 0:
        raise ValueError("orthogonal line has positive norm; not a corner")
    if v[0] < 0:
        v = tuple(-x for x in v)
    assert v[0] > 0, "non-positive norm forces a nonzero first coordinate"
    return v


def corner_height_bound(form: Form, corner) -> Fraction:
    """Max batch height of a wall separating the corner from the control
    vertex.

    A separating wall hyperplane crosses the geodesic between the two
    points, so its distance from the control vertex is at most the length
    of that geodesic; rewriting both sides through inner products turns
    the distance cap into a height cap.  Completing the batch ladder
    strictly beyond the bound certifies the corner lies in the closure of
    the full chamber.
    """
    q = -form.norm(corner)
    if q <= 0 or corner[0] <= 0:
        raise ValueError("corner must be future-pointing and timelike")
    s = form.p * corner[0]  # -<corner, v0>
    return Fraction(s * s - form.p * q, form.p * form.p * q)


def orient_root(form: Form, v):
    """The representative of {v, -v} whose half-space contains the chamber.

    The chamber closure contains the control vertex, so a root not
    orthogonal to it points the right way iff their inner product is
    negative.  Roots orthogonal to the control vertex split as positive or
    negative combinations of the initial simple system; the positive ones
    bound the chamber.
    """
    if v[0] != 0:
        return v if v[0] > 0 else tuple(-x for x in v)
    initial = form.initial_roots()
    mat = [[e[j] for e in initial] for j in range(1, form.dim)]
    coeffs = linalg.solve(mat, list(v[1:]))
    if coeffs is None:
        raise ConsistencyError("root outside the span of the initial system")
    if all(c >= 0 for c in coeffs):
        return v
    if all(c <= 0 for c in coeffs):
        return tuple(-x for x in v)
    raise ConsistencyError("root is a mixed combination of the initial system")


def vertex_walls(form: Form, corner) -> list:
    """Complete oriented wall set of the full chamber through a corner.

    Enumerates every root of the form orthogonal to the corner (a finite
    set: short vectors of the definite lattice corner^perp cap L), orients
    each to the chamber side, and keeps the irredundant ones, which cut
    out the chamber germ at the corner.  Valid whenever the corner lies in
    the closure of the full chamber.
    """
    dim = form.dim
    units = _units(dim)
    row = [[form.inner_product(corner, u) for u in units]]
    basis = linalg.integer_kernel(row)
    gram = [
        [form.inner_product(a, b) for b in basis] for a in basis
    ]
    if linalg.psd_classify(gram) != "definite":
        raise ValueError("corner must be timelike")
    oriented = set()
    bound = max(form.admissible_root_norms)
    for coords in linalg.short_vectors(gram, bound):
        v = tuple(
            sum(coords[i] * basis[i][j] for i in range(len(basis)))
            for j in range(dim)
        )
        if form.is_root(v):
            oriented.add(orient_root(form, v))
    walls = sorted(oriented)
    rows = [[form.inner_product(w, u) for u in units] for w in walls]
    lines, rays = cones.cone_generators(rows, dim)
    gens = [tuple(l) for l in lines] + [tuple(-x for x in l) for l in lines]
    gens += [tuple(r) for r in rays]
    facets = []
    for k, w in enumerate(walls):
        active = [
            list(g) for g in gens
            if sum(rows[k][j] * g[j] for j in range(dim)) == 0
        ]
        if linalg.rank(active) == dim - 1:
            facets.append(w)
    return facets


def frame_map(form: Form, frame_from, frame_to):
    """Integer matrix taking one ordered frame to another, or None.

    A frame is a list of n roots and a corner forming a basis.  Matching
    Gram matrices force any rational solution to preserve the form; only
    integral maps are returned, acting on column vectors.
    """
    dim = form.dim
    B_from = [[frame_from[j][i] for j in range(dim)] for i in range(dim)]
    B_to = [[frame_to[j][i] for j in range(dim)] for i in range(dim)]
    if linalg.det(B_from) == 0:
        return None
    T = linalg.mat_mul(B_to, linalg.mat_inv(B_from))
    for row in T:
        for x in row:
            if x.denominator != 1:
                return None
    T = [[int(x) for x in row] for row in T]
    F = form.form_matrix
    TtFT = linalg.mat_mul(linalg.mat_mul(linalg.transpose(T), F), T)
    assert TtFT == F, "matching Grams must force form preservation"
    return T


def polygon_rotation(form: Form, roots, shift: int):
    """Integral isometry rotating a closed planar chamber by a cyclic
    shift of its sides, or None when no such lattice map exists.

    Matches the frame (side, next side, corner between them) at position 0
    against the one at the shifted position; Gram equality is required
    before solving, so a structurally impossible shift returns None
    instead of failing.
    """
    from vinberg import diagram as _diagram

    cyc = _diagram.polygon_cycle(form, roots)
    k = len(cyc["sides"])
    shift %= k

    def frame(t):
        return [
            roots[cyc["sides"][t % k]],
            roots[cyc["sides"][(t + 1) % k]],
            cyc["vertices"][t % k],
        ]

    f_from, f_to = frame(0), frame(shift)
    if form.gram(f_from) != form.gram(f_to):
        return None
    return frame_map(form, f_from, f_to)


def cyclotomic_factor_index(factor_coeffs) -> int | None:
    """Index k with factor = k-th cyclotomic polynomial, or None.

    factor_coeffs are descending-degree integer coefficients, leading 1.
    Euler phi(k) >= sqrt(k/2), so k <= 2 d^2 covers all degree-d candidates.
    """
    x = sympy.Symbol("x")
    f = sympy.Poly(factor_coeffs, x)
    d = f.degree()
    for k in range(1, 2 * d * d + 2):
        if sympy.totient(k) == d and sympy.Poly(sympy.cyclotomic_poly(k, x), x) == f:
            return k
    return None


def infinite_order_evidence(T) -> dict | None:
    """Evidence that the integer matrix T has infinite order, or None.

    Finite order forces every eigenvalue to be a root of unity and T to be
    semisimple.  So either some irreducible factor of the characteristic
    polynomial is not cyclotomic, or all are but the squarefree part fails
    to annihilate T; both are exact certificates of infinite order.
    """
    if sympy is None:  # pragma: no cover
        raise RuntimeError("sympy is required for the order test")
    cp = linalg.charpoly(T)
    x = sympy.Symbol("x")
    _, factors = sympy.Poly(cp, x).factor_list()
    for poly, _mult in factors:
        coeffs = [int(c) for c in poly.all_coeffs()]
        if cyclotomic_factor_index(coeffs) is None:
            return {"reason": "non_cyclotomic_factor", "factor": coeffs, "charpoly": cp}
    radical = sympy.Poly(1, x)
    for poly, _mult in factors:
        radical = radical * poly
    R = _poly_apply([int(c) for c in radical.all_coeffs()], T)
    for i, row in enumerate(R):
        for j, entry in enumerate(row):
            if entry != 0:
                return {
                    "reason": "repeated_root_of_unity",
                    "radical": [int(c) for c in radical.all_coeffs()],
                    "witness_entry": [i, j],
                    "charpoly": cp,
                }
    return None


def _poly_apply(coeffs, T):
    dim = len(T)
    acc = [[0] * dim for _ in range(dim)]
    for c in coeffs:
        acc = linalg.mat_mul(acc, T)
        for i in range(dim):
            acc[i][i] += c
    return acc


def _matching_frames(form: Form, roots, orth, target_norms, target_gram):
    """Ordered index tuples from orth whose Gram matches the target, by DFS."""
    n = len(target_norms)
    out = []
    chosen = []

    def extend():
        s = len(chosen)
        if s == n:
            out.append(tuple(chosen))
            return
        for i in orth:
            if i in chosen:
                continue
            if form.norm(roots[i]) != target_norms[s]:
                continue
            if any(
                form.inner_product(roots[i], roots[j]) != target_gram[t][s]
                for t, j in enumerate(chosen)
            ):
                continue
            chosen.append(i)
            extend()
            chosen.pop()

    extend()
    return out


def find_infinite_symmetry(form: Form, roots, height_limit=None) -> dict | None:
    """Search for an infinite-order isometry between two corner frames.

    For every ordered pair of distinct corners one fixed frame at the
    source meets every Gram-compatible frame at the target; if any
    isometry moves one corner to another, it moves the fixed frame to one
    of those, so the sweep is complete.  Maps fixing a corner are never
    tried: point stabilizers in a discrete group are finite.

    height_limit, when given, restricts the sweep to corners whose
    separating-wall bound lies strictly below it, the ones certified to
    survive into the full chamber.  Deterministic throughout.
    """
    corners = chamber_corners(form, roots)
    if height_limit is not None:
        corners = [
            c for c in corners
            if corner_height_bound(form, c["vector"]) < height_limit
        ]
        for c in corners:
            # a vertex of the full chamber is simple: exactly n walls
            if len(c["orthogonal"]) != form.n:
                raise ConsistencyError(
                    "certified corner must lie on exactly "
                    f"{form.n} walls, got {len(c['orthogonal'])}"
                )
    else:
        corners = [c for c in corners if len(c["orthogonal"]) == form.n]
    for ci, c_from in enumerate(corners):
        base = tuple(sorted(c_from["orthogonal"]))
        norms = [form.norm(roots[i]) for i in base]
        gram = [
            [form.inner_product(roots[i], roots[j]) for j in base] for i in base
        ]
        frame_from = [roots[i] for i in base] + [c_from["vector"]]
        for cj, c_to in enumerate(corners):
            if cj == ci:
                continue
            if form.norm(c_from["vector"]) != form.norm(c_to["vector"]):
                continue
            for perm in _matching_frames(
                form, roots, c_to["orthogonal"], norms, gram
            ):
                frame_to = [roots[i] for i in perm] + [c_to["vector"]]
                T = frame_map(form, frame_from, frame_to)
                if T is None:
                    continue
                evidence = infinite_order_evidence(T)
                if evidence is None:
                    continue
                walls_from = [roots[i] for i in base]
                walls_to = sorted(roots[i] for i in c_to["orthogonal"])
                if sorted(
                    tuple(linalg.mat_vec(T, w)) for w in walls_from
                ) != walls_to:
                    continue
                return {
                    "matrix": T,
                    "frame_from": {
                        "root_indices": list(base),
                        "corner": list(c_from["vector"]),
                    },
                    "frame_to": {
                        "root_indices": list(perm),
                        "corner": list(c_to["vector"]),
                    },
                    "evidence": evidence,
                }
    return None
