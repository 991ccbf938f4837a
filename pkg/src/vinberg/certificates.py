"""Certificates of the classification verdicts, and their verification.

Three verdict-carrying documents plus an inheritance wrapper:

- reflective: the accepted roots with a finite-volume report.
- ideal_vertex_failure: a primitive null vector e arising from affine
  subdiagrams of the accepted set whose quotient lattice e^perp / Z e has
  root classes of deficient rank.  An affine subset of the simple roots
  extends, in any finite-volume chamber, to one of full rank n - 1 with
  the same null direction, and the extension's classes span the quotient
  rationally; a rank deficit therefore rules finite volume out.  (The
  span can be a proper finite-index sublattice at a genuine ideal vertex,
  so index alone decides nothing.)
- infinite_symmetry: an integral form-preserving isometry of infinite
  order carrying one certified chamber vertex, with its complete wall
  set, to another.  Such a map fixes the chamber, so the wall set cannot
  be finite and nonempty interior of finite volume is impossible.
- inherited_nonreflectivity: lifts a failure at rank n to any rank above,
  by restricting to the orthogonal complement of a norm-one basis root.

verify_certificate re-derives every stored quantity from the form and the
primary data; any mismatch rejects the document.  Malformed documents
raise CertificateError naming the offending field.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from vinberg import diagram as _diagram
from vinberg import linalg, published, quotient
from vinberg.errors import CertificateError
from vinberg.forms import Form

SCHEMA_VERSION = 1

_KINDS = ("reflective", "ideal_vertex_failure", "infinite_symmetry", "inherited_nonreflectivity")


# ---------------------------------------------------------------------------
# construction

def affine_null_marks(form: Form, roots, nodes):
    """Positive primitive marks of an affine root subset and the null vector.

    nodes index into roots and must carry a connected affine subdiagram;
    the Gram kernel is then one-dimensional with all marks of one sign.
    """
    nodes = sorted(nodes)
    G = [[form.inner_product(roots[i], roots[j]) for j in nodes] for i in nodes]
    ker = linalg.kernel(G)
    if len(ker) != 1:
        raise ValueError("marks are only defined for affine subdiagrams")
    marks = ker[0]
    den = 1
    for c in marks:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in marks]
    if all(m <= 0 for m in ints):
        ints = [-m for m in ints]
    if not all(m > 0 for m in ints):
        raise ValueError("marks of an affine diagram must have one sign")
    g = 0
    for m in ints:
        g = gcd(g, m)
    marks_out = [m // g for m in ints]
    e = [0] * form.dim
    for mk, i in zip(marks_out, nodes):
        for k in range(form.dim):
            e[k] += mk * roots[i][k]
    # the marks are coprime but their root combination need not be
    g = 0
    for x in e:
        g = gcd(g, x)
    return marks_out, tuple(x // g for x in e)


def scan_for_cusp_obstruction(form: Form, accepted, cache=None, min_rank=None):
    """Look for a null direction whose root classes have deficient rank.

    Groups the affine components of the current diagram by their common
    null vector; groups of total rank at least min_rank (default n - 2)
    have their quotient tested.  The verdict for a null vector depends on
    the form alone, so it is cached across batches.  Returns an
    ideal_vertex_failure certificate, or None.
    """
    if cache is None:
        cache = {}
    if min_rank is None:
        min_rank = form.n - 2
    d = _diagram.build_diagram(form, accepted)
    groups: dict = {}
    for comp in _diagram.affine_components(d):
        marks, e = affine_null_marks(form, accepted, comp["nodes"])
        groups.setdefault(e, []).append(comp)
    for e in sorted(groups):
        comps = groups[e]
        if sum(c["rank"] for c in comps) < min_rank:
            continue
        if e not in cache:
            quot = quotient.null_quotient(form, e)
            cache[e] = quotient.root_classes(form, quot)["full_rank"]
        if not cache[e]:
            return ideal_vertex_certificate(form, accepted, e, comps)
    return None


def _document(form: Form, kind: str, payload: dict) -> dict:
    annotations = {}
    pub = published.published_values(form.p, form.n)
    if pub is not None:
        annotations["published_values"] = pub
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": kind,
        "form": {"p": form.p, "n": form.n},
        "payload": payload,
        "annotations": annotations,
    }


def ideal_vertex_certificate(form: Form, accepted, e, components) -> dict:
    quot = quotient.null_quotient(form, e)
    rc = quotient.root_classes(form, quot)
    comps_out = []
    all_nodes = []
    for comp in sorted(components, key=lambda c: sorted(c["nodes"])):
        nodes = sorted(comp["nodes"])
        marks, e_comp = affine_null_marks(form, accepted, nodes)
        assert e_comp == tuple(e)
        comps_out.append({"nodes": nodes, "type": comp["type"], "marks": marks})
        all_nodes.extend(nodes)
    all_nodes = sorted(all_nodes)
    image = [quot.class_coordinates(accepted[i]) for i in all_nodes]
    comp_data = quotient.orthogonal_complement_data(form, quot, image)
    payload = {
        "roots": [list(r) for r in accepted],
        "components": comps_out,
        "null_vector": list(e),
        "affine_rank": len(linalg.hnf_basis(image)),
        "quotient": {
            "class_basis": [list(r) for r in quot.class_basis],
            "gram": [list(r) for r in quot.gram],
        },
        "affine_image": image,
        "complement": {
            "basis": comp_data["c_basis"],
            "generator": comp_data.get("generator"),
            "generator_norm": comp_data.get("generator_norm"),
        },
        "glue": {
            "index": comp_data["index"],
            "invariants": comp_data.get("invariants", []),
            "vector": comp_data.get("glue_vector"),
            "order": comp_data.get("glue_order"),
        },
        "root_classes": rc,
        "conclusion": "root_classes_rank_deficient",
    }
    return _document(form, "ideal_vertex_failure", payload)


def infinite_symmetry_certificate(form: Form, accepted, symmetry, batches_done) -> dict:
    """Certificate from a frame-to-frame symmetry of the partial chamber.

    batches_done pins down the exact search cut that produced the roots,
    so a verifier can replay it and recover the height frontier; each
    frame corner carries its separating-wall bound, which must lie below
    that frontier for the corner to be a certified chamber vertex.
    """
    from vinberg import isometry

    def frame_out(fr):
        corner = tuple(fr["corner"])
        return {
            "root_indices": list(fr["root_indices"]),
            "corner": list(corner),
            "height_bound": str(isometry.corner_height_bound(form, corner)),
        }

    payload = {
        "roots": [list(r) for r in accepted],
        "batches_done": batches_done,
        "matrix": [list(row) for row in symmetry["matrix"]],
        "frame_from": frame_out(symmetry["frame_from"]),
        "frame_to": frame_out(symmetry["frame_to"]),
        "evidence": symmetry["evidence"],
        "conclusion": "chamber_admits_infinite_order_symmetry",
    }
    return _document(form, "infinite_symmetry", payload)


def reflective_certificate(form: Form, roots, volume_report, check_every="root") -> dict:
    payload = {
        "roots": [list(r) for r in roots],
        "check_every": check_every,
        "volume": volume_report,
        "conclusion": "chamber_has_finite_volume",
    }
    return _document(form, "reflective", payload)


def inherited_certificate(base: dict, n: int) -> dict:
    """Nonreflectivity at rank n inherited from a verified failure below.

    Restricting to the orthogonal complement of the norm-one basis root
    -v_n reduces the rank-n lattice to the rank n-1 one, so every failure
    propagates upward; no new search is needed.
    """
    _require(base, "kind")
    if base["kind"] not in ("ideal_vertex_failure", "infinite_symmetry", "inherited_nonreflectivity"):
        raise CertificateError("payload.base.kind: not a nonreflectivity certificate")
    if n <= base["form"]["n"]:
        raise CertificateError("form.n: inherited rank must exceed the base rank")
    form = Form(base["form"]["p"], n)
    payload = {
        "base": base,
        "conclusion": "nonreflectivity_inherited_from_lower_rank",
    }
    return _document(form, "inherited_nonreflectivity", payload)


# ---------------------------------------------------------------------------
# verification

def verify_certificate(cert: dict) -> bool:
    """True iff every stored claim re-derives from the primary data."""
    return not verification_failures(cert)


def verification_failures(cert: dict) -> list[str]:
    """All re-derivation mismatches; empty means the certificate is valid.

    Malformed documents (missing or type-broken fields) raise
    CertificateError naming the field instead.
    """
    _require(cert, "schema_version")
    if cert["schema_version"] != SCHEMA_VERSION:
        raise CertificateError("schema_version: unsupported value")
    _require(cert, "kind")
    if cert["kind"] not in _KINDS:
        raise CertificateError("kind: unknown certificate kind")
    _require(cert, "form")
    _require(cert["form"], "p", "form.p")
    _require(cert["form"], "n", "form.n")
    _require(cert, "payload")
    _require(cert, "annotations")
    if not isinstance(cert["annotations"], dict):
        raise CertificateError("annotations: must be an object")
    try:
        form = Form(cert["form"]["p"], cert["form"]["n"])
    except (ValueError, TypeError) as exc:
        raise CertificateError(f"form: {exc}")
    kind = cert["kind"]
    if kind == "reflective":
        return _verify_reflective(form, cert["payload"])
    if kind == "ideal_vertex_failure":
        return _verify_ideal_vertex(form, cert["payload"])
    if kind == "infinite_symmetry":
        return _verify_infinite_symmetry(form, cert["payload"])
    return _verify_inherited(form, cert["payload"])


def _require(doc, key, label=None):
    if not isinstance(doc, dict) or key not in doc:
        raise CertificateError(f"{label or key}: missing field")


def _root_state_failures(form: Form, payload) -> tuple[list, list[str]]:
    _require(payload, "roots", "payload.roots")
    roots = [tuple(r) for r in payload["roots"]]
    issues = []
    for i, r in enumerate(roots):
        if len(r) != form.dim or not form.is_root(r):
            issues.append(f"payload.roots[{i}]: not a root of the form")
    if issues:
        return roots, issues
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if form.inner_product(roots[i], roots[j]) > 0:
                issues.append(f"payload.roots[{j}]: acute angle with root {i}")
                return roots, issues
    if not _state_reproduces(form, roots):
        issues.append("payload.roots: not a state of the root search")
    return roots, issues


def _state_reproduces(form: Form, roots) -> bool:
    from vinberg.search import Budget, run_search

    if list(roots[: form.n]) != list(form.initial_roots()):
        return False
    res = run_search(
        form,
        Budget(max_height=Fraction(10**9), max_roots=len(roots)),
        finite_volume_check=False,
        certificate_scan=False,
    )
    return list(res.roots) == list(roots)


def _verify_reflective(form: Form, payload) -> list[str]:
    from vinberg import volume as _volume
    from vinberg.search import Budget, run_search

    _require(payload, "check_every", "payload.check_every")
    _require(payload, "volume", "payload.volume")
    roots = [tuple(r) for r in payload["roots"]]
    issues = []
    for i, r in enumerate(roots):
        if len(r) != form.dim or not form.is_root(r):
            issues.append(f"payload.roots[{i}]: not a root of the form")
    if issues:
        return issues
    res = run_search(
        form,
        Budget(max_height=Fraction(10**9), max_roots=len(roots) + 64),
        check_every=payload["check_every"],
        finite_volume_check=True,
        certificate_scan=False,
    )
    if res.status != "reflective" or list(res.roots) != list(roots):
        issues.append("payload.roots: search does not terminate at this state")
        return issues
    report = _volume.finite_volume(form, roots)
    if not report["finite"]:
        issues.append("payload.volume: chamber volume is not finite")
    if report != payload["volume"]:
        issues.append("payload.volume: report does not re-derive")
    return issues


def _verify_ideal_vertex(form: Form, payload) -> list[str]:
    for key in ("components", "null_vector", "affine_rank", "quotient",
                "affine_image", "complement", "glue", "root_classes", "conclusion"):
        _require(payload, key, f"payload.{key}")
    roots, issues = _root_state_failures(form, payload)
    if issues:
        return issues
    e = tuple(payload["null_vector"])
    if len(e) != form.dim or form.norm(e) != 0 or not any(e) or not form.is_primitive(e):
        issues.append("payload.null_vector: not a primitive null vector")
        return issues
    if e[0] <= 0:
        issues.append("payload.null_vector: wrong light-cone orientation")
        return issues

    d = _diagram.build_diagram(form, roots)
    all_nodes = []
    for ci, comp in enumerate(payload["components"]):
        _require(comp, "nodes", f"payload.components[{ci}].nodes")
        _require(comp, "type", f"payload.components[{ci}].type")
        _require(comp, "marks", f"payload.components[{ci}].marks")
        nodes = list(comp["nodes"])
        if nodes != sorted(set(nodes)) or not all(0 <= i < len(roots) for i in nodes):
            issues.append(f"payload.components[{ci}].nodes: bad index set")
            return issues
        sub = _diagram.classify_subdiagram(d, nodes)
        if sub["kind"] != "affine" or len(sub["types"]) != 1 or sub["types"][0] != comp["type"]:
            issues.append(f"payload.components[{ci}].type: subdiagram is not affine of this type")
            continue
        try:
            marks, e_comp = affine_null_marks(form, roots, nodes)
        except ValueError:
            issues.append(f"payload.components[{ci}].marks: marks are undefined")
            continue
        if marks != list(comp["marks"]) or e_comp != e:
            issues.append(f"payload.components[{ci}].marks: null vector does not re-derive")
        all_nodes.extend(nodes)
    if issues:
        return issues
    if len(set(all_nodes)) != len(all_nodes):
        issues.append("payload.components: overlapping components")
        return issues
    all_nodes = sorted(all_nodes)

    quot = quotient.null_quotient(form, e)
    if [list(r) for r in quot.class_basis] != payload["quotient"].get("class_basis") or [
        list(r) for r in quot.gram
    ] != payload["quotient"].get("gram"):
        issues.append("payload.quotient: basis or Gram does not re-derive")
        return issues
    image = [quot.class_coordinates(roots[i]) for i in all_nodes]
    if image != payload["affine_image"]:
        issues.append("payload.affine_image: coordinates do not re-derive")
        return issues
    if len(linalg.hnf_basis(image)) != payload["affine_rank"]:
        issues.append("payload.affine_rank: rank does not re-derive")

    comp_data = quotient.orthogonal_complement_data(form, quot, image)
    stored = payload["complement"]
    if (comp_data["c_basis"] != stored.get("basis")
            or comp_data.get("generator") != stored.get("generator")
            or comp_data.get("generator_norm") != stored.get("generator_norm")):
        issues.append("payload.complement: complement does not re-derive")
    glue = payload["glue"]
    if (comp_data["index"] != glue.get("index")
            or comp_data.get("invariants", []) != glue.get("invariants")
            or comp_data.get("glue_vector") != glue.get("vector")
            or comp_data.get("glue_order") != glue.get("order")):
        issues.append("payload.glue: glue data does not re-derive")

    rc = quotient.root_classes(form, quot)
    if rc != payload["root_classes"]:
        issues.append("payload.root_classes: classes do not re-derive")
    if rc["full_rank"]:
        issues.append("payload.root_classes: root classes span the quotient rationally")
    if payload["conclusion"] != "root_classes_rank_deficient":
        issues.append("payload.conclusion: unexpected value")
    return issues


def _verify_infinite_symmetry(form: Form, payload) -> list[str]:
    """Re-derivation chain for the symmetry route.

    Soundness rests on four facts checked here: the stored roots are the
    exact output of the search through the stored batch count; each frame
    corner's separating-wall bound lies below the resulting height
    frontier, so the corner is a vertex of the full chamber; the frame
    roots are its complete wall set, recomputed from the lattice alone;
    and the matrix is a form isometry of infinite order carrying one
    framed corner to the other.  A chamber of finite volume would then
    carry an infinite-order permutation of its finitely many spanning
    walls, which is impossible.
    """
    from vinberg import isometry
    from vinberg.search import Budget, open_height, run_search

    for key in ("matrix", "batches_done", "frame_from", "frame_to",
                "evidence", "conclusion"):
        _require(payload, key, f"payload.{key}")
    _require(payload, "roots", "payload.roots")
    roots = [tuple(r) for r in payload["roots"]]
    issues = []
    for i, r in enumerate(roots):
        if len(r) != form.dim or not form.is_root(r):
            issues.append(f"payload.roots[{i}]: not a root of the form")
    if issues:
        return issues
    batches = payload["batches_done"]
    if not isinstance(batches, int) or batches < 0:
        raise CertificateError("payload.batches_done: not a non-negative integer")
    res = run_search(
        form,
        Budget(max_height=Fraction(10**9), max_roots=10**9, max_batches=batches),
        finite_volume_check=False,
        certificate_scan=False,
    )
    if res.status != "undecided" or list(res.roots) != list(roots):
        issues.append("payload.roots: not the search state after this many batches")
        return issues
    frontier = open_height(form, batches)

    T = payload["matrix"]
    if (len(T) != form.dim or any(len(row) != form.dim for row in T)
            or any(not isinstance(x, int) for row in T for x in row)):
        issues.append("payload.matrix: not an integer matrix of the right size")
        return issues
    F = form.form_matrix
    if linalg.mat_mul(linalg.mat_mul(linalg.transpose(T), F), T) != F:
        issues.append("payload.matrix: does not preserve the form")
        return issues

    frames = []
    for label in ("frame_from", "frame_to"):
        fr = payload[label]
        _require(fr, "root_indices", f"payload.{label}.root_indices")
        _require(fr, "corner", f"payload.{label}.corner")
        _require(fr, "height_bound", f"payload.{label}.height_bound")
        idx = list(fr["root_indices"])
        corner = tuple(fr["corner"])
        if (len(idx) != form.n or len(set(idx)) != form.n
                or not all(isinstance(i, int) and 0 <= i < len(roots) for i in idx)):
            issues.append(f"payload.{label}.root_indices: bad index set")
            return issues
        if len(corner) != form.dim or form.norm(corner) >= 0 or corner[0] <= 0:
            issues.append(f"payload.{label}.corner: not a future timelike vector")
            return issues
        if not form.is_primitive(corner):
            issues.append(f"payload.{label}.corner: not primitive")
            return issues
        if any(form.inner_product(r, corner) > 0 for r in roots):
            issues.append(f"payload.{label}.corner: outside the chamber")
            return issues
        bound = isometry.corner_height_bound(form, corner)
        if str(bound) != fr["height_bound"]:
            issues.append(f"payload.{label}.height_bound: does not re-derive")
            return issues
        if bound >= frontier:
            issues.append(
                f"payload.{label}.corner: separating-wall bound not cleared "
                "by the scanned height"
            )
            return issues
        if any(form.inner_product(roots[i], corner) != 0 for i in idx):
            issues.append(f"payload.{label}.root_indices: frame roots must contain the corner")
            return issues
        if isometry.vertex_walls(form, corner) != sorted(roots[i] for i in idx):
            issues.append(
                f"payload.{label}.root_indices: not the complete wall set "
                "through the corner"
            )
            return issues
        frames.append((idx, corner))
    (idx_from, c_from), (idx_to, c_to) = frames
    if form.norm(c_from) != form.norm(c_to) or c_from == c_to:
        issues.append("payload.frame_to.corner: corners must be distinct of equal norm")
        return issues

    def apply(v):
        return tuple(sum(T[i][j] * v[j] for j in range(form.dim)) for i in range(form.dim))

    if apply(c_from) != c_to:
        issues.append("payload.matrix: does not map the source corner to the target")
    for s in range(form.n):
        if apply(roots[idx_from[s]]) != roots[idx_to[s]]:
            issues.append(f"payload.matrix: does not map frame root {s} as stated")
    evidence = isometry.infinite_order_evidence([list(row) for row in T])
    if evidence is None:
        issues.append("payload.matrix: matrix has finite order")
    elif evidence != payload["evidence"]:
        issues.append("payload.evidence: does not re-derive")
    if payload["conclusion"] != "chamber_admits_infinite_order_symmetry":
        issues.append("payload.conclusion: unexpected value")
    return issues


def _verify_inherited(form: Form, payload) -> list[str]:
    _require(payload, "base", "payload.base")
    base = payload["base"]
    _require(base, "kind", "payload.base.kind")
    _require(base, "form", "payload.base.form")
    issues = []
    if base["kind"] not in ("ideal_vertex_failure", "infinite_symmetry", "inherited_nonreflectivity"):
        issues.append("payload.base.kind: not a nonreflectivity certificate")
        return issues
    if base["form"].get("p") != form.p:
        issues.append("payload.base.form: prime mismatch")
    if base["form"].get("n", form.n) >= form.n:
        issues.append("payload.base.form: base rank must be lower")
    if issues:
        return issues
    sub = verification_failures(base)
    if sub:
        issues.extend(f"payload.base.{s}" for s in sub)
    return issues
