"""Benchmark the two batch-enumeration kernels on real search workloads.

Replays the enumeration calls each form's actual classification run made
(same batches, same growing prior sets) once per kernel, then times both
on the single heaviest recorded batch.  Usage:

    python3 benchmarks/bench_enum.py
"""

import time

from vinberg import _enum_py
from vinberg.enumeration import kernel_backend
from vinberg.forms import Form
from vinberg.search import batch_sequence, run_search

try:
    from vinberg import _enum_cy
except ImportError:
    _enum_cy = None

FORMS = [(5, 8), (13, 2), (17, 3), (23, 3)]


def batch_workload(form):
    """Arguments of every enumeration call the real search makes."""
    result = run_search(form)
    accepted = result.roots
    calls = []
    prior = list(form.initial_roots())
    gen = batch_sequence(form)
    for _ in range(result.state.batches_done):
        k0, m = next(gen)
        target = m + form.p * k0 * k0
        step = form.p if m % form.p == 0 else 1
        consts = [-form.p * k0 * r[0] for r in prior]
        coeffs = [list(r[1:]) for r in prior]
        calls.append((form.n, target, step, consts, coeffs))
        for r in accepted:
            if r[0] == k0 and form.norm(r) == m and r not in prior:
                prior.append(r)
    return calls


def time_kernel(kernel, calls, repeats=5):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        for n, target, step, consts, coeffs in calls:
            kernel.enumerate_batch_vectors(n, target, step, consts, coeffs)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def main():
    print(f"selected backend: {kernel_backend()}")
    if _enum_cy is None:
        print("compiled kernel unavailable; showing pure timings only")
    heaviest = None
    for p, n in FORMS:
        form = Form(p, n)
        calls = batch_workload(form)
        if calls:
            big = max(calls, key=lambda c: c[1])
            if heaviest is None or big[1] > heaviest[1]:
                heaviest = big
        t_py = time_kernel(_enum_py, calls)
        line = f"p={p:2d} n={n}: {len(calls):3d} batches  pure {t_py * 1e3:8.2f} ms"
        if _enum_cy is not None:
            t_cy = time_kernel(_enum_cy, calls)
            line += f"  compiled {t_cy * 1e3:8.2f} ms  speedup {t_py / t_cy:5.1f}x"
        print(line)

    if heaviest is not None:
        print(f"heaviest batch: target={heaviest[1]} priors={len(heaviest[3])}")
        t_py = time_kernel(_enum_py, [heaviest], repeats=20)
        line = f"  pure {t_py * 1e6:9.1f} us"
        if _enum_cy is not None:
            t_cy = time_kernel(_enum_cy, [heaviest], repeats=20)
            line += f"  compiled {t_cy * 1e6:9.1f} us  speedup {t_py / t_cy:5.1f}x"
        print(line)


if __name__ == "__main__":
    main()
