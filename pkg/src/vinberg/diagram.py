"""Coxeter diagrams of wall systems and their classification.

Nodes are wall indices; an edge records the exact value of
cos^2(angle) = <u,v>^2 / (<u,u><v,v>) between two walls.  Only five values
can occur for walls in acute position: 1/4, 1/2, 3/4 (dihedral angles
pi/3, pi/4, pi/6), 1 (parallel walls) and anything > 1 (divergent walls).
Any other value in [0, 1) is rejected as a hard error.

Connected subdiagrams are classified structurally against the spherical
and affine catalogs and the verdict is double-checked by exact
semidefiniteness of the Gram matrix; a mismatch raises ConsistencyError.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from vinberg import cones, linalg
from vinberg.errors import ConsistencyError, DiagramError

SIMPLE, DOUBLE, TRIPLE, PARALLEL, DIVERGENT = (
    "simple",
    "double",
    "triple",
    "parallel",
    "divergent",
)

_COS2_KIND = {
    Fraction(1, 4): SIMPLE,
    Fraction(1, 2): DOUBLE,
    Fraction(3, 4): TRIPLE,
    Fraction(1): PARALLEL,
}


@dataclass(frozen=True)
class Diagram:
    """Walls with their pairwise angle data."""

    norms: tuple[int, ...]
    gram: tuple[tuple[int, ...], ...]
    edges: dict  # (i, j) with i < j -> edge kind

    def __len__(self) -> int:
        return len(self.norms)

    def kind(self, i: int, j: int):
        if i == j:
            return None
        if i > j:
            i, j = j, i
        return self.edges.get((i, j))

    def neighbors(self, i: int, subset=None):
        pool = range(len(self.norms)) if subset is None else subset
        return [j for j in pool if j != i and self.kind(i, j) is not None]

    def subgram(self, subset):
        return [[self.gram[i][j] for j in subset] for i in subset]


def diagram_from_gram(gram) -> Diagram:
    """Diagram of a wall system given its exact Gram matrix."""
    norms = tuple(gram[i][i] for i in range(len(gram)))
    edges = {}
    for i, j in combinations(range(len(gram)), 2):
        ip = gram[i][j]
        if ip == 0:
            continue
        cos2 = Fraction(ip * ip, norms[i] * norms[j])
        if cos2 > 1:
            edges[(i, j)] = DIVERGENT
        elif cos2 in _COS2_KIND:
            edges[(i, j)] = _COS2_KIND[cos2]
        else:
            raise DiagramError(
                f"walls {i} and {j} meet at cos^2 = {cos2}, outside the crystallographic set"
            )
    return Diagram(norms=norms, gram=tuple(tuple(row) for row in gram), edges=edges)


def build_diagram(form, roots) -> Diagram:
    """Diagram of a list of roots under the given form."""
    return diagram_from_gram(form.gram(roots))


def components(diagram: Diagram, subset) -> list[tuple[int, ...]]:
    """Connected components of the induced subdiagram, each sorted."""
    subset = sorted(subset)
    remaining = set(subset)
    out = []
    while remaining:
        start = min(remaining)
        seen = {start}
        frontier = [start]
        while frontier:
            i = frontier.pop()
            for j in diagram.neighbors(i, remaining):
                if j not in seen:
                    seen.add(j)
                    frontier.append(j)
        out.append(tuple(sorted(seen)))
        remaining -= seen
    return sorted(out)


def _classify_path(kinds: tuple) -> str | None:
    """Type of a path component given its edge kinds in path order."""
    canon = min(kinds, tuple(reversed(kinds)))
    k = len(kinds) + 1  # node count
    if all(e == SIMPLE for e in canon):
        return f"A{k}"
    if canon == (TRIPLE,):
        return "G2"
    if canon == (SIMPLE, TRIPLE):
        return "G~2"
    if any(e not in (SIMPLE, DOUBLE) for e in canon):
        return None
    doubles = [i for i, e in enumerate(canon) if e == DOUBLE]
    if len(doubles) == 1:
        i = doubles[0]
        if i == 0 or i == len(canon) - 1:
            return f"B{k}"
        if k == 4:
            return "F4"
        if k == 5 and i == 1:
            # double bond adjacent to the middle node of a 5-path
            return "F~4"
        return None
    if doubles == [0, len(canon) - 1]:
        return f"C~{k - 1}"
    return None


def _leg_profile(diagram, comp, fork):
    """Walk the legs hanging off a degree-3 or degree-4 node.

    Returns a list of (length, edge_kinds_outward) per leg, or None if the
    component is not a star/tree of simple structure around the fork.
    """
    legs = []
    for first in diagram.neighbors(fork, comp):
        length = 0
        kinds = []
        prev, cur = fork, first
        while True:
            length += 1
            kinds.append(diagram.kind(prev, cur))
            nxt = [j for j in diagram.neighbors(cur, comp) if j != prev]
            if not nxt:
                break
            if len(nxt) > 1:
                return None  # second branch point: not handled here
            prev, cur = cur, nxt[0]
        legs.append((length, tuple(kinds)))
    return sorted(legs)


def _classify_one_fork(diagram, comp, fork) -> str | None:
    legs = _leg_profile(diagram, comp, fork)
    if legs is None:
        return None
    lengths = tuple(l for l, _ in legs)
    all_kinds = [k for _, kinds in legs for k in kinds]
    k = len(comp)
    if all(e == SIMPLE for e in all_kinds):
        if lengths == (1, 1, k - 3):
            return f"D{k}"
        table = {
            (1, 2, 2): "E6",
            (1, 2, 3): "E7",
            (1, 2, 4): "E8",
            (2, 2, 2): "E~6",
            (1, 3, 3): "E~7",
            (1, 2, 5): "E~8",
        }
        return table.get(lengths)
    # single double bond at the far end of one leg: affine B
    specials = [
        (i, kinds)
        for i, (_, kinds) in enumerate(legs)
        if any(e != SIMPLE for e in kinds)
    ]
    if len(specials) != 1:
        return None
    idx, kinds = specials[0]
    if kinds[:-1] != (SIMPLE,) * (len(kinds) - 1) or kinds[-1] != DOUBLE:
        return None
    others = [l for i, (l, _) in enumerate(legs) if i != idx]
    if others == [1, 1]:
        return f"B~{k - 1}"
    return None


def _classify_two_forks(diagram, comp, forks) -> str | None:
    k = len(comp)
    for fork in forks:
        leaf_legs = 0
        for j in diagram.neighbors(fork, comp):
            if len(diagram.neighbors(j, comp)) == 1:
                leaf_legs += 1
        if leaf_legs < 2:
            return None
    kinds = [diagram.kind(i, j) for i, j in combinations(comp, 2) if diagram.kind(i, j)]
    if any(e != SIMPLE for e in kinds):
        return None
    return f"D~{k - 1}"


def classify_component(diagram: Diagram, comp) -> str | None:
    """Catalog name of a connected subdiagram, None if neither spherical
    nor affine.  The structural verdict is cross-checked against exact
    semidefiniteness of the Gram matrix."""
    comp = tuple(sorted(comp))
    name = _classify_component_structurally(diagram, comp)
    cls = linalg.psd_classify(diagram.subgram(comp))
    if name is None:
        expected = "indefinite"
    elif "~" in name:
        expected = "degenerate"
    else:
        expected = "definite"
    if cls != expected:
        raise ConsistencyError(
            f"structure says {name or 'indefinite'} but Gram is {cls} for {comp}"
        )
    return name


def _classify_component_structurally(diagram, comp) -> str | None:
    k = len(comp)
    kinds = [diagram.kind(i, j) for i, j in combinations(comp, 2) if diagram.kind(i, j)]
    if k == 1:
        return "A1"
    if any(e == DIVERGENT for e in kinds):
        return None
    if any(e == PARALLEL for e in kinds):
        if k == 2 and kinds == [PARALLEL]:
            return "A~1"
        return None
    edge_count = len(kinds)
    degrees = {i: len(diagram.neighbors(i, comp)) for i in comp}
    maxdeg = max(degrees.values())
    if maxdeg > 4:
        return None
    if maxdeg == 4:
        centers = [i for i in comp if degrees[i] == 4]
        if k == 5 and len(centers) == 1 and all(e == SIMPLE for e in kinds):
            return "D~4"
        return None
    forks = [i for i in comp if degrees[i] == 3]
    if len(forks) > 2:
        return None
    if edge_count == k:  # exactly one cycle
        if forks or not all(e == SIMPLE for e in kinds):
            return None
        if all(degrees[i] == 2 for i in comp):
            return f"A~{k - 1}"
        return None
    if edge_count != k - 1:  # not a tree
        return None
    if len(forks) == 0:
        # a path: read the edge kinds endpoint to endpoint
        ends = [i for i in comp if degrees[i] == 1]
        if len(ends) != 2:
            return None
        order = [ends[0]]
        while len(order) < k:
            nxt = [
                j
                for j in diagram.neighbors(order[-1], comp)
                if len(order) < 2 or j != order[-2]
            ]
            if len(nxt) != 1:
                return None
            order.append(nxt[0])
        path_kinds = tuple(diagram.kind(a, b) for a, b in zip(order, order[1:]))
        return _classify_path(path_kinds)
    if len(forks) == 1:
        return _classify_one_fork(diagram, comp, forks[0])
    return _classify_two_forks(diagram, comp, forks)


def type_rank(name: str) -> int:
    """Rank of a catalog type: node count if spherical, one less if affine."""
    fam, _, num = name.partition("~")
    if num:
        return int(num)
    return int(name[1:])


def is_affine_type(name: str) -> bool:
    return "~" in name


def classify_subdiagram(diagram: Diagram, subset) -> dict:
    """Classification of an arbitrary subdiagram.

    Returns {"kind": ..., "types": ...} where kind is "elliptic" (all
    components spherical), "affine" (all components affine), "mixed"
    (spherical and affine components together) or "other", and types lists
    the component names sorted, or None as soon as a component is outside
    both catalogs.
    """
    subset = tuple(sorted(subset))
    names = []
    for comp in components(diagram, subset):
        name = classify_component(diagram, comp)
        if name is None:
            return {"kind": "other", "types": None}
        names.append(name)
    if not names:
        return {"kind": "elliptic", "types": []}
    if all(not is_affine_type(t) for t in names):
        kind = "elliptic"
    elif all(is_affine_type(t) for t in names):
        kind = "affine"
    else:
        kind = "mixed"
    return {"kind": kind, "types": sorted(names)}


def affine_components(diagram: Diagram) -> list[dict]:
    """Every connected affine subdiagram, with its type and rank.

    Found by growing connected elliptic subsets one adjacent node at a
    time: a connected affine diagram minus a suitable node is connected
    and elliptic, so this walk reaches every one of them.
    """
    n = len(diagram)
    elliptic: set = set()
    affine: dict = {}
    frontier = []
    for i in range(n):
        s = frozenset([i])
        elliptic.add(s)
        frontier.append(s)
    while frontier:
        s = frontier.pop()
        reachable = set()
        for i in s:
            reachable.update(diagram.neighbors(i))
        for v in sorted(reachable - s):
            t = s | {v}
            if t in elliptic or t in affine:
                continue
            cls = linalg.psd_classify(diagram.subgram(sorted(t)))
            if cls == "definite":
                elliptic.add(t)
                frontier.append(t)
            elif cls == "degenerate":
                name = classify_component(diagram, sorted(t))
                if name is None or not is_affine_type(name):
                    raise ConsistencyError(
                        f"degenerate connected subdiagram {sorted(t)} failed affine classification"
                    )
                affine[t] = name
    out = [
        {"nodes": tuple(sorted(s)), "type": name, "rank": type_rank(name)}
        for s, name in affine.items()
    ]
    out.sort(key=lambda d: (d["nodes"],))
    return out


def _orthogonal(diagram: Diagram, a, b) -> bool:
    return all(diagram.kind(i, j) is None for i in a for j in b)


def affine_sets_of_rank(diagram: Diagram, rank: int) -> list[dict]:
    """All unions of pairwise orthogonal affine components with the given
    total rank.  Components must be node-disjoint and unjoined by edges."""
    comps = affine_components(diagram)
    out = []
    chosen: list[int] = []

    def backtrack(start: int, total: int):
        if total == rank:
            nodes = tuple(sorted(x for i in chosen for x in comps[i]["nodes"]))
            types = tuple(sorted(comps[i]["type"] for i in chosen))
            out.append({"nodes": nodes, "types": types})
            return
        for i in range(start, len(comps)):
            c = comps[i]
            if total + c["rank"] > rank:
                continue
            if any(
                not _orthogonal(diagram, comps[j]["nodes"], c["nodes"])
                or set(comps[j]["nodes"]) & set(c["nodes"])
                for j in chosen
            ):
                continue
            chosen.append(i)
            backtrack(i + 1, total + c["rank"])
            chosen.pop()

    backtrack(0, 0)
    seen = set()
    unique = []
    for item in out:
        if item["nodes"] not in seen:
            seen.add(item["nodes"])
            unique.append(item)
    unique.sort(key=lambda d: d["nodes"])
    return unique


def maximal_affine_types(form, roots) -> set:
    """Type multisets of affine subdiagrams of full rank n - 1.

    These are the ideal vertex configurations the chamber can have; the
    result is a set of sorted type tuples.
    """
    diagram = build_diagram(form, roots)
    return {item["types"] for item in affine_sets_of_rank(diagram, form.n - 1)}


def polygon_cycle(form, roots) -> dict:
    """Cyclic wall order of a closed planar chamber.

    Returns {"sides": root indices in cyclic order, "vertices": corner
    vectors}, where vertices[t] joins sides[t] and sides[t+1]; ordinary
    corners have negative norm, ideal ones norm zero.  Requires n = 2 and
    a chamber that closes into a polygon of finite area.
    """
    if form.n != 2:
        raise ValueError("polygon walk requires a rank-2 form")
    dim = form.dim
    units = [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
    rows = [tuple(form.inner_product(r, u) for u in units) for r in roots]
    lines, rays = cones.cone_generators(rows, dim)
    if lines:
        raise ValueError("chamber cone contains a line")
    verts = []
    for ray in rays:
        v = cones.primitive_vector(ray)
        if form.norm(v) > 0:
            raise ValueError("spacelike extreme ray; the polygon does not close")
        active = tuple(
            i for i in range(len(roots))
            if sum(rows[i][j] * v[j] for j in range(dim)) == 0
        )
        if len(active) != 2:
            raise ConsistencyError("polygon corner must lie on exactly two sides")
        verts.append({"vector": tuple(v), "sides": active})
    by_side: dict = {}
    for k, vt in enumerate(verts):
        for i in vt["sides"]:
            by_side.setdefault(i, []).append(k)
    if sorted(by_side) != list(range(len(roots))) or any(
        len(ks) != 2 for ks in by_side.values()
    ):
        raise ConsistencyError("sides do not close into a polygon")
    start = 0
    side = start
    vk = min(by_side[start])
    sides_order = []
    vert_order = []
    for _ in range(len(roots)):
        sides_order.append(side)
        vert_order.append(verts[vk]["vector"])
        side = next(i for i in verts[vk]["sides"] if i != side)
        vk = next(k for k in by_side[side] if k != vk)
    if side != start or len(set(sides_order)) != len(roots):
        raise ConsistencyError("polygon walk did not close into one cycle")
    return {"sides": sides_order, "vertices": vert_order}


_ANGLE_LABEL = {
    Fraction(0): 2,
    Fraction(1, 4): 3,
    Fraction(1, 2): 4,
    Fraction(3, 4): 6,
}


def polygon_sequence(form, roots) -> list:
    """Norm/angle symbol of a closed planar chamber.

    One entry per side in cyclic order: (norm, label) where label m means
    the angle to the next side is pi/m, and None marks an ideal corner
    between parallel sides.
    """
    cyc = polygon_cycle(form, roots)
    k = len(cyc["sides"])
    out = []
    for t in range(k):
        i = cyc["sides"][t]
        j = cyc["sides"][(t + 1) % k]
        v = cyc["vertices"][t]
        ni = form.norm(roots[i])
        ip = form.inner_product(roots[i], roots[j])
        cos2 = Fraction(ip * ip, ni * form.norm(roots[j]))
        if form.norm(v) == 0:
            if cos2 != 1:
                raise ConsistencyError("ideal corner between non-parallel sides")
            out.append((ni, None))
        else:
            out.append((ni, _ANGLE_LABEL[cos2]))
    return out


def _cycle_entry_key(entry):
    norm, label = entry
    return (norm, 0 if label is None else label)


def canonical_cycle(seq) -> list:
    """Least representative of a norm/angle symbol under rotation and
    reversal, for structural comparison of polygons.

    Reversing a polygon pairs each side's norm with the angle behind it,
    so the reversed symbol shifts the labels by one position.
    """
    k = len(seq)
    fwd = list(seq)
    rev = [(seq[(k - t) % k][0], seq[(k - t - 1) % k][1]) for t in range(k)]
    cands = []
    for base in (fwd, rev):
        for s in range(k):
            cands.append([base[(s + t) % k] for t in range(k)])
    return min(cands, key=lambda c: [_cycle_entry_key(e) for e in c])


def cycle_period(seq) -> int:
    """Smallest d dividing the length with seq invariant under rotation by d."""
    k = len(seq)
    for d in range(1, k + 1):
        if k % d == 0 and all(seq[t] == seq[(t + d) % k] for t in range(k)):
            return d
    return k


def format_polygon_sequence(seq) -> str:
    """Compact one-line form, e.g. '2_4 1_2 13_inf 13_2'."""
    return " ".join(
        f"{norm}_{'inf' if label is None else label}" for norm, label in seq
    )


def diagram_json(form, roots) -> dict:
    """Serializable description of the wall diagram.

    Nodes carry the root vector and its norm; edges carry the kind and the
    exact cos^2 as a numerator/denominator pair (divergent edges included).
    """
    diagram = build_diagram(form, roots)
    nodes = [
        {"index": i, "root": list(root), "norm": diagram.norms[i]}
        for i, root in enumerate(roots)
    ]
    edges = []
    for (i, j), kind in sorted(diagram.edges.items()):
        cos2 = Fraction(
            diagram.gram[i][j] ** 2, diagram.norms[i] * diagram.norms[j]
        )
        edges.append(
            {
                "i": i,
                "j": j,
                "kind": kind,
                "cos2_num": cos2.numerator,
                "cos2_den": cos2.denominator,
            }
        )
    return {"nodes": nodes, "edges": edges}


# Multi-stroke bonds drawn with parallel strokes, heavy stroke for parallel
# walls, dashes for divergent ones.
_DOT_EDGE = {
    SIMPLE: "",
    DOUBLE: ' [color="black:invis:black"]',
    TRIPLE: ' [color="black:invis:black:invis:black"]',
    PARALLEL: " [penwidth=3]",
    DIVERGENT: " [style=dashed]",
}

_TIKZ_EDGE = {
    SIMPLE: "simple",
    DOUBLE: "double bond",
    TRIPLE: "triple bond",
    PARALLEL: "heavy",
    DIVERGENT: "divergent",
}


def diagram_dot(form, roots) -> str:
    """Graphviz source for the wall diagram (1-based vertex labels)."""
    diagram = build_diagram(form, roots)
    lines = ["graph walls {", "  node [shape=circle];"]
    for i in range(len(diagram.norms)):
        lines.append(f"  {i + 1};")
    for (i, j), kind in sorted(diagram.edges.items()):
        lines.append(f"  {i + 1} -- {j + 1}{_DOT_EDGE[kind]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def diagram_tikz(form, roots) -> str:
    """TikZ source for the wall diagram, vertices on a circle."""
    diagram = build_diagram(form, roots)
    count = len(diagram.norms)
    lines = [
        "\\begin{tikzpicture}[",
        "  wall/.style={circle, draw, fill=white, inner sep=2pt},",
        "  simple/.style={},",
        "  double bond/.style={double, double distance=2pt},",
        "  triple bond/.style={double, double distance=4pt},",
        "  heavy/.style={line width=1.6pt},",
        "  divergent/.style={dashed}]",
    ]
    for (i, j), kind in sorted(diagram.edges.items()):
        lines.append(f"  \\draw[{_TIKZ_EDGE[kind]}] (w{i + 1}) -- (w{j + 1});")
    placements = []
    for i in range(count):
        angle = (90.0 - 360.0 * i / count) % 360.0
        placements.append(
            f"  \\node[wall] (w{i + 1}) at ({angle:.2f}:2) "
            f"{{\\scriptsize ${i + 1}$}};"
        )
    # nodes first so the edge paths can refer to them
    lines[7:7] = placements
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"
