"""Finite-volume test for the chamber cut out by the accepted roots.

Two independent deciders run on every call and must agree:

1. The critical-subdiagram decider.  A critical subdiagram is a connected,
   inclusion-minimal non-elliptic set of walls; by eigenvalue interlacing it
   is either parabolic (degenerate) or hyperbolic (indefinite).  The chamber
   has finite volume iff the walls span the whole space and
     (a) every parabolic critical subdiagram extends to an affine subdiagram
         of full rank n - 1, and
     (b) for every hyperbolic critical subdiagram S, the set of directions
         orthogonal to S and on the non-positive side of every wall is {0}.

2. The edge decider.  Every elliptic subdiagram of rank n - 1 is an edge of
   the chamber and must connect exactly two vertices, where a vertex is
   either an elliptic extension of rank n (an interior point) or an affine
   subdiagram of rank n - 1 containing the edge (an ideal point).

Disagreement raises ConsistencyError: the two characterizations are
equivalent theorems, so a mismatch means an implementation bug.
"""

from __future__ import annotations

from itertools import combinations

from vinberg import cones, diagram as dg, linalg
from vinberg.errors import ConsistencyError


def critical_submatrices(form, roots) -> list[dict]:
    """All critical (connected, minimal non-elliptic) wall subsets.

    Each entry carries the node tuple and its class: "parabolic" for
    degenerate Gram, "hyperbolic" for indefinite.
    """
    diagram = dg.build_diagram(form, roots)
    n = len(roots)
    elliptic: set = {frozenset([i]) for i in range(n)}
    frontier = list(elliptic)
    critical: dict = {}
    while frontier:
        s = frontier.pop()
        reachable = set()
        for i in s:
            reachable.update(diagram.neighbors(i))
        for v in sorted(reachable - s):
            t = s | {v}
            if t in elliptic or t in critical:
                continue
            cls = linalg.psd_classify(diagram.subgram(sorted(t)))
            if cls == "definite":
                elliptic.add(t)
                frontier.append(t)
                continue
            # minimality: removing any one wall must leave an elliptic set
            minimal = all(
                linalg.psd_classify(diagram.subgram(sorted(t - {u}))) == "definite"
                for u in t
            )
            if minimal:
                critical[t] = "parabolic" if cls == "degenerate" else "hyperbolic"
    # lists, not tuples: the report is embedded in JSON certificates and
    # must compare equal after a serialization round trip
    out = [
        {"nodes": sorted(s), "class": c}
        for s, c in critical.items()
    ]
    out.sort(key=lambda d: d["nodes"])
    return out


def check_condition_a(form, roots, parabolic_nodes, affine_full=None) -> bool:
    """Does the parabolic subdiagram extend to an affine one of rank n - 1?"""
    if affine_full is None:
        diagram = dg.build_diagram(form, roots)
        affine_full = dg.affine_sets_of_rank(diagram, form.n - 1)
    target = set(parabolic_nodes)
    return any(target <= set(item["nodes"]) for item in affine_full)


def cone_fixed_set(form, roots, nodes) -> tuple[list, list]:
    """Generators of {x : x orthogonal to the given walls, x . r <= 0 for all
    accepted roots r}, as (lines, rays) in lattice coordinates."""
    dim = form.dim
    ortho = [
        [form.inner_product(roots[i], unit) for unit in _units(dim)]
        for i in nodes
    ]
    # x orthogonal to S: restrict to the rational kernel of the S rows
    basis = linalg.kernel(ortho) if nodes else [list(u) for u in _units(dim)]
    basis = [cones.primitive_vector(b) for b in basis]
    constraints = []
    for r in roots:
        row = [
            sum(form.inner_product(r, _unit(dim, k)) * b[k] for k in range(dim))
            for b in basis
        ]
        constraints.append(tuple(row))
    lines, rays = cones.cone_generators(constraints, len(basis))
    to_ambient = lambda y: tuple(
        sum(y[j] * basis[j][k] for j in range(len(basis))) for k in range(dim)
    )
    return (
        [cones.primitive_vector(to_ambient(l)) for l in lines],
        [cones.primitive_vector(to_ambient(r)) for r in rays],
    )


def _units(dim):
    return [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]


def _unit(dim, i):
    return tuple(1 if j == i else 0 for j in range(dim))


def check_condition_b(form, roots, hyperbolic_nodes) -> bool:
    """Is the fixed cone of the hyperbolic subdiagram trivial?"""
    lines, rays = cone_fixed_set(form, roots, hyperbolic_nodes)
    return not lines and not rays


def _critical_decider(form, roots, report) -> bool:
    gram = form.gram(roots)
    rk = linalg.rank(gram)
    report["rank"] = rk
    if rk != form.dim:
        report["rank_deficient"] = True
        return False
    criticals = critical_submatrices(form, roots)
    report["critical"] = criticals
    diagram = dg.build_diagram(form, roots)
    affine_full = dg.affine_sets_of_rank(diagram, form.n - 1)
    cond_a = []
    cond_b = []
    ok = True
    for item in criticals:
        if item["class"] == "parabolic":
            good = check_condition_a(form, roots, item["nodes"], affine_full)
            cond_a.append({"nodes": item["nodes"], "extends": good})
            ok = ok and good
        else:
            good = check_condition_b(form, roots, item["nodes"])
            cond_b.append({"nodes": item["nodes"], "trivial_cone": good})
            ok = ok and good
    report["condition_a"] = cond_a
    report["condition_b"] = cond_b
    return ok


def _edge_decider(form, roots) -> bool:
    """Count vertex completions of every elliptic edge subdiagram."""
    diagram = dg.build_diagram(form, roots)
    n = form.n
    count = len(roots)
    affine_full = dg.affine_sets_of_rank(diagram, n - 1)
    affine_nodes = [set(item["nodes"]) for item in affine_full]
    memo: dict = {}

    def definite(nodes: frozenset) -> bool:
        hit = memo.get(nodes)
        if hit is None:
            hit = linalg.psd_classify(diagram.subgram(sorted(nodes))) == "definite"
            memo[nodes] = hit
        return hit

    found_any_vertex = False
    for subset in combinations(range(count), n - 1):
        s = frozenset(subset)
        if not definite(s):
            continue
        vertices = 0
        for v in range(count):
            if v not in s and definite(s | {v}):
                vertices += 1
        vertices += sum(1 for nodes in affine_nodes if s <= nodes)
        if vertices != 2:
            return False
        found_any_vertex = True
    return found_any_vertex


def finite_volume(form, roots) -> dict:
    """Joint verdict of both deciders, as a serializable report."""
    report: dict = {"finite": False}
    verdict_a = _critical_decider(form, roots, report)
    verdict_b = _edge_decider(form, roots)
    if verdict_a != verdict_b:
        raise ConsistencyError(
            f"finite-volume deciders disagree ({verdict_a} vs {verdict_b}) "
            f"on {len(roots)} roots for p={form.p}, n={form.n}"
        )
    report["finite"] = verdict_a
    report["cross_checked"] = True
    return report
