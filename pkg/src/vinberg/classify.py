"""Top-level classification of one form or a whole family of ranks.

classify_form runs the root search and turns the outcome into a report
with one of three verdicts: reflective (finite-volume chamber found),
non_reflective (a verified obstruction certificate exists), or undecided
(budget ran out and no obstruction was found; a resumable state is
attached).  classify_family walks ranks upward and stops searching after
the first non-reflective rank, since the obstruction persists in all
higher ranks; later ranks get inheritance certificates instead.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Optional

from vinberg import certificates, diagram, isometry
from vinberg.errors import ConsistencyError, VinbergError
from vinberg.forms import Form
from vinberg.search import Budget, SearchState, open_height, run_search

REPORT_SCHEMA_VERSION = 1


def _budget_json(budget: Budget, check_every: str) -> dict:
    height = Fraction(budget.max_height)
    return {
        "max_height": f"{height.numerator}/{height.denominator}",
        "max_roots": budget.max_roots,
        "check_every": check_every,
    }


def classify_form(
    p: int,
    n: int,
    budget: Optional[Budget] = None,
    check_every: str = "root",
    state: Optional[SearchState] = None,
    verify: bool = True,
) -> dict:
    """Classify one form, returning a report dict.

    Keys: form, verdict, roots, diagram, certificate, timings (exact work
    counters, so reports are byte-identical across runs), budget; plus
    volume for reflective verdicts and state for undecided ones.

    With verify=True every non-reflective certificate is re-checked from
    scratch before it is attached; a verification failure is an internal
    error and raises ConsistencyError.
    """
    form = Form(p, n)
    if budget is None:
        budget = Budget()
    result = run_search(form, budget, check_every=check_every, state=state)
    roots = result.roots
    report = {
        "schema_version": REPORT_SCHEMA_VERSION,
        "form": {"p": p, "n": n},
        "verdict": None,
        "roots": [list(r) for r in roots],
        "diagram": diagram.diagram_json(form, roots),
        "certificate": None,
        "timings": dict(result.state.counters),
        "budget": _budget_json(budget, check_every),
    }

    if result.status == "reflective":
        report["verdict"] = "reflective"
        report["volume"] = result.volume_report
        report["certificate"] = certificates.reflective_certificate(
            form, roots, result.volume_report, check_every=check_every
        )
        return report

    certificate = result.certificate
    if certificate is None:
        # Budget ran out.  Rescan the final state without the rank gate,
        # then hunt for a symmetry between corners certified by the
        # height frontier the search has cleared.
        certificate = certificates.scan_for_cusp_obstruction(
            form, roots, min_rank=1
        )
    if certificate is None:
        batches = result.state.batches_done
        symmetry = isometry.find_infinite_symmetry(
            form, roots, height_limit=open_height(form, batches)
        )
        if symmetry is not None:
            certificate = certificates.infinite_symmetry_certificate(
                form, roots, symmetry, batches
            )

    if certificate is not None:
        if verify:
            failures = certificates.verification_failures(certificate)
            if failures:
                raise ConsistencyError(
                    "generated certificate failed verification: "
                    + "; ".join(failures)
                )
        report["verdict"] = "non_reflective"
        report["certificate"] = certificate
        return report

    report["verdict"] = "undecided"
    report["state"] = result.state.to_json()
    return report


def _inherited_report(
    p: int, n: int, base_certificate: dict, budget: Budget, check_every: str
) -> dict:
    certificate = certificates.inherited_certificate(base_certificate, n)
    return {
        "schema_version": REPORT_SCHEMA_VERSION,
        "form": {"p": p, "n": n},
        "verdict": "non_reflective",
        "roots": None,
        "diagram": None,
        "certificate": certificate,
        "timings": {"batches": 0, "candidates": 0, "accepted": 0, "volume_checks": 0},
        "budget": _budget_json(budget, check_every),
        "inherited_from": base_certificate["form"]["n"],
    }


def _classify_cell(args) -> dict:
    p, n, budget, check_every = args
    return classify_form(p, n, budget=budget, check_every=check_every)


def classify_family(
    p: int,
    max_rank: int,
    budget: Optional[Budget] = None,
    check_every: str = "root",
    jobs: int = 1,
) -> list:
    """Classify ranks 2..max_rank of one family, lowest first.

    After the first non-reflective rank every later rank gets an
    inheritance certificate instead of a fresh search.  jobs > 1 runs the
    per-rank searches speculatively in parallel; results above the first
    failure are discarded, so the output is identical to a sequential run.
    """
    if max_rank < 2:
        raise VinbergError(f"max_rank must be at least 2, got {max_rank}")
    if budget is None:
        budget = Budget()

    searched = {}
    if jobs > 1:
        cells = [(p, n, budget, check_every) for n in range(2, max_rank + 1)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for n, report in zip(
                range(2, max_rank + 1), pool.map(_classify_cell, cells)
            ):
                searched[n] = report

    reports = []
    base_certificate = None
    for n in range(2, max_rank + 1):
        if base_certificate is not None:
            reports.append(
                _inherited_report(p, n, base_certificate, budget, check_every)
            )
            continue
        report = searched.get(n)
        if report is None:
            report = classify_form(p, n, budget=budget, check_every=check_every)
        reports.append(report)
        if report["verdict"] == "non_reflective":
            base_certificate = report["certificate"]
    return reports


def root_table(
    p: int,
    max_rank: int,
    budget: Optional[Budget] = None,
    check_every: str = "root",
) -> dict:
    """Merged table of found roots for ranks 2..max_rank.

    Vectors found at a lower rank reappear, zero-padded, at higher ranks;
    the table keeps one row per padded vector with the list of ranks where
    the search accepted it.  Rows sort by batch height and carry 1-based
    labels.  Initial basis roots are omitted, matching the convention that
    tables list found vectors only.
    """
    if max_rank < 2:
        raise VinbergError(f"max_rank must be at least 2, got {max_rank}")
    if budget is None:
        budget = Budget()
    rows = {}
    verdicts = {}
    for rank in range(2, max_rank + 1):
        form = Form(p, rank)
        result = run_search(
            form, budget, check_every=check_every, certificate_scan=False
        )
        verdicts[rank] = result.status
        initial = len(form.initial_roots())
        for root in result.roots[initial:]:
            key = tuple(root) + (0,) * (max_rank - rank)
            entry = rows.setdefault(
                key,
                {
                    "height": form.height(root),
                    "norm": form.norm(root),
                    "ranks": [],
                },
            )
            entry["ranks"].append(rank)
    ordered = sorted(rows.items(), key=lambda item: (item[1]["height"], item[0]))
    table_rows = []
    for label, (vector, entry) in enumerate(ordered, start=1):
        # display the height unreduced as k0^2/m, the batch that found the
        # root: its first coordinate is k0 and its norm is m
        table_rows.append(
            {
                "label": label,
                "height": f"{vector[0] ** 2}/{entry['norm']}",
                "root": list(vector),
                "norm": entry["norm"],
                "ranks": entry["ranks"],
            }
        )
    return {
        "p": p,
        "max_rank": max_rank,
        "verdicts": {str(rank): verdicts[rank] for rank in sorted(verdicts)},
        "rows": table_rows,
    }
