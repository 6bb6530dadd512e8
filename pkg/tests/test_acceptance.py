"""Acceptance gate: one PASS/FAIL line per criterion in the terminal summary.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import math
import subprocess
import sys
import time

import numpy as np

from chromspec import graph as gr
from chromspec.bounds import bound_report, ratio_bound_alpha, signless_gap
from chromspec.coloring import independence_number_exact
from chromspec.harness import FuzzConfig, fuzz_bounds_vs_chi, fuzz_lemma1, fuzz_signless, fuzz_theorem1
from chromspec.linalg import eigen_symmetric

from conftest import record_criterion


def test_c1_theorem1_fuzz():
    start = time.perf_counter()
    s = fuzz_theorem1(FuzzConfig(trials=10_000, seed=1, n_range=(2, 24), r_range=(2, 6),
                                 complex_entries=True, tolerance=1e-8))
    elapsed = time.perf_counter() - start
    ok = s.trials_run == 10_000 and s.violation_count == 0 and elapsed < 120
    record_criterion(1, "block inequality fuzz, 10k complex trials", ok,
                     f"violations={s.violation_count}, min_gap={s.min_gap:.3e}, {elapsed:.1f}s")
    assert ok


def test_c2_lemma1_fuzz():
    s = fuzz_lemma1(FuzzConfig(trials=10_000, seed=1, tolerance=1e-8))
    kinds = {k: sum(r.kind == k for r in s.violations) for k in ("inequality", "equality", "strictness")}
    ok = (s.trials_run == 10_000 and s.violation_count == 0
          and s.counters["equality_checks"] == 10_000 and s.counters["strict_checks"] > 0)
    record_criterion(2, "row-sum inequality fuzz with constant-rowsum and spread sub-campaigns", ok,
                     f"violations={kinds}, equality_checks={s.counters['equality_checks']}, "
                     f"strict_checks={s.counters['strict_checks']}")
    assert ok


def test_c3_exhaustive_validity():
    start = time.perf_counter()
    s = fuzz_bounds_vs_chi(FuzzConfig(trials=0), exhaustive_max_n=6)
    elapsed = time.perf_counter() - start
    expected = sum(2 ** (n * (n - 1) // 2) - 1 for n in range(2, 7))
    ok = (s.trials_run == expected and s.violation_count == 0
          and "chi_unknown" not in s.counters and elapsed < 600)
    record_criterion(3, "exhaustive n <= 6 sweep, both ceilings <= chi", ok,
                     f"graphs={s.trials_run}/{expected}, violations={s.violation_count}, {elapsed:.1f}s")
    assert ok


def test_c4_complete_minus_edge():
    details, ok = [], True
    for n in (6, 8, 10, 12):
        rep = bound_report(gr.complete_minus_edge(n))
        row_ok = rep.nikiforov_ceil == n - 1 == rep.chi_exact and rep.hoffman_ceil < n - 1
        if n == 10:
            row_ok &= rep.hoffman_ceil == 6 and abs(rep.hoffman - 5.857) <= 1e-3
        ok &= row_ok
        details.append(f"n={n}: hoff={rep.hoffman:.4f}/{rep.hoffman_ceil} nik_ceil={rep.nikiforov_ceil} chi={rep.chi_exact}")
    record_criterion(4, "K_n - e comparison", ok, "; ".join(details))
    assert ok


def test_c5_wheel():
    details, ok = [], True
    for n in (50, 100, 200):
        rep = bound_report(gr.wheel(n), compute_chi=False)
        ok &= rep.hoffman_ceil == 3 and rep.nikiforov_ceil == 2
        details.append(f"n={n}: hoff_ceil={rep.hoffman_ceil} nik_ceil={rep.nikiforov_ceil}")
    record_criterion(5, "wheel comparison", ok, "; ".join(details))
    assert ok


def test_c6_equality_suite():
    tight = [gr.complete(n) for n in range(2, 9)] + [gr.cycle(4)]
    tight += [gr.complete_multipartite([t] * m) for m in range(2, 13) for t in range(1, 13) if m * t <= 12]
    failures = []
    for g in tight:
        rep = bound_report(g, compute_equality=True)
        if not (abs(rep.nikiforov - rep.chi_exact) <= 1e-6 and rep.equality.characterization_holds):
            failures.append(f"tight n={g.n} m={g.m}")
    for name, g in (("C5", gr.cycle(5)), ("Petersen-e", gr.petersen().remove_edge(0, 1))):
        rep = bound_report(g, compute_equality=True)
        if not (rep.nikiforov < rep.chi_exact - 1e-6 and not rep.equality.characterization_holds):
            failures.append(name)
    ok = not failures
    record_criterion(6, "equality characterization suite", ok,
                     f"{len(tight)} tight graphs + 2 strict; failures={failures}")
    assert ok


def test_c7_signless_equivalence():
    s = fuzz_signless(FuzzConfig(trials=500, seed=1, n_range=(7, 10), r_range=(2, 2)), exhaustive_max_n=6)
    # the single-vertex graph is connected and bipartite, with a zero gap
    k1_ok = signless_gap(gr.empty(1)) <= 1e-9
    random_count = s.counters.get("random_bipartite", 0) + s.counters.get("random_nonbipartite", 0)
    ok = s.violation_count == 0 and random_count == 500 and k1_ok
    record_criterion(7, "signless gap zero iff bipartite", ok,
                     f"checked={s.trials_run + 1}, violations={s.violation_count}, counters={s.counters}")
    assert ok


def test_c8_golden_spectra():
    worst = 0.0
    for n in range(2, 13):
        got = eigen_symmetric(gr.adjacency_matrix(gr.complete(n))).values
        worst = max(worst, np.max(np.abs(got - np.array([n - 1] + [-1] * (n - 1)))))
    for n in range(3, 17):
        closed = np.sort([2 * math.cos(2 * math.pi * j / n) for j in range(n)])[::-1]
        got = eigen_symmetric(gr.adjacency_matrix(gr.cycle(n))).values
        worst = max(worst, np.max(np.abs(got - closed)))
    got = eigen_symmetric(gr.adjacency_matrix(gr.petersen())).values
    worst = max(worst, np.max(np.abs(got - np.array([3] + [1] * 5 + [-2] * 4))))
    ok = worst <= 1e-9
    record_criterion(8, "golden spectra K_n, C_n, Petersen", ok, f"max error={worst:.2e}")
    assert ok


def test_c9_ratio_bound():
    p = ratio_bound_alpha(gr.petersen())
    c5 = ratio_bound_alpha(gr.cycle(5))
    ok = abs(p - 4.0) <= 1e-9 and independence_number_exact(gr.petersen()).alpha == 4
    ok &= abs(c5 - 2.2361) <= 1e-4 and math.floor(c5) == 2 == independence_number_exact(gr.cycle(5)).alpha
    for n in range(2, 11):
        ok &= abs(ratio_bound_alpha(gr.complete(n)) - 1.0) <= 1e-9
        ok &= independence_number_exact(gr.complete(n)).alpha == 1
    record_criterion(9, "ratio bound", ok, f"Petersen={p:.6f}, C5={c5:.6f}")
    assert ok


def _cli(*argv) -> bytes:
    return subprocess.run([sys.executable, "-m", "chromspec", *argv], capture_output=True, check=False).stdout


def test_c10_determinism():
    commands = [
        ("fuzz", "theorem1", "--trials", "2000", "--seed", "5"),
        ("fuzz", "lemma1", "--trials", "2000", "--seed", "5"),
        ("fuzz", "bounds-vs-chi", "--trials", "50", "--exhaustive", "5"),
        ("fuzz", "signless", "--trials", "200"),
        ("explore",),
        ("explore", "--top", "1", "--seed", "3"),
    ]
    mismatched = []
    for argv in commands:
        first, second = _cli(*argv), _cli(*argv)
        if not first or first != second:
            mismatched.append(" ".join(argv))
    ok = not mismatched
    record_criterion(10, "byte-identical JSON across separate processes", ok,
                     f"{len(commands)} commands, mismatched={mismatched}")
    assert ok
