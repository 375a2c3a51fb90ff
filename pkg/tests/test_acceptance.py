"""End-to-end acceptance suite: one test per criterion, one PASS/FAIL line each.

Run with -s (or -rP) to see the lines:

    pytest tests/test_acceptance.py -s

The extended profile repeats the two exhaustive checks at n = 7 and takes
the better part of an hour on one core:

    pytest tests/test_acceptance.py -s -m extended
"""

import json
import math
import random
from pathlib import Path

import pytest

from permutation_oracle import profile_by_permutations
from record_fingerprints import fingerprint
from spectroham.graphs import (
    Graph,
    complete_bipartite,
    cone,
    cycle_graph,
    petersen_graph,
)
from spectroham.hamilton import (
    hamiltonian_profile,
    is_hamiltonian_connected,
    is_homogeneously_traceable,
)
from spectroham.harness import (
    ENUMERATION,
    SAMPLE,
    VerificationRun,
    enumerate_connected_graphs,
    enumerate_graphs,
    evaluate_graph,
    extremal_report,
    verify,
)
from spectroham.invariants import invariants
from spectroham.spectra import (
    adjacency_matrix,
    check_interlacing,
    graph_quotient,
    laplacian_matrix,
    quotient_eigenvalues_2x2,
    quotient_matrix,
    spectral_summary,
    symmetric_eigenvalues,
)
from spectroham.theorems import complement_disconnected

FINGERPRINTS = json.loads(
    (Path(__file__).parent / "data" / "oracle_fingerprints.json").read_text()
)

PROPERTY_BY_S = {1: "hamiltonian_connected", 0: "hamiltonian", -1: "traceable"}


def _report(num, label, ok, detail=""):
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {num} {label}: {'PASS' if ok else 'FAIL'}{suffix}")
    return ok


def _backtracking_bits(g):
    p = hamiltonian_profile(g)
    return (p.traceable, p.hamiltonian, p.homogeneously_traceable,
            p.hamiltonian_connected)


def test_acceptance_1_extremal_laplacian_equality():
    worst = 0.0
    for k in range(1, 7):
        for s in (-1, 0, 1):
            mu1 = spectral_summary(complete_bipartite(k, k - s + 1)).mu1
            worst = max(worst, abs(mu1 - (2 * k - s + 1)))
    ok = worst <= 1e-9
    assert _report(1, "extremal Laplacian equality mu1(K_{k,k-s+1}) = 2k-s+1",
                   ok, f"worst deviation {worst:.3g}")


def test_acceptance_2_sharpness_triple():
    failures = []
    for k in range(2, 6):
        for s in (1, 0, -1):
            row = extremal_report(k, s)
            if getattr(row.profile, PROPERTY_BY_S[s]):
                failures.append((k, s, "property unexpectedly true"))
            verdict = next(
                v for v in row.verdicts
                if v.theorem_id == "main3_laplacian" and v.s == s)
            if not verdict.applicability:
                failures.append((k, s, "main3 inapplicable"))
            elif abs(verdict.observed_value - verdict.bound_value) > 1e-9:
                failures.append((k, s, "not on the bound"))
            elif verdict.hypothesis != "boundary":
                failures.append((k, s, verdict.hypothesis))
    ok = not failures
    assert _report(2, "sharpness triple K_{k,k-s+1} on the strict bound",
                   ok, failures or "12 extremal graphs"), failures


def test_acceptance_3_soundness_exhaustive_n6():
    run = verify(VerificationRun(source=ENUMERATION, n_min=3, n_max=6))
    ok = run.inconsistent == 0 and run.counterexamples == ()
    assert _report(
        3, "theorem soundness over connected graphs, 3 <= n <= 6", ok,
        f"{run.scanned} graphs, {run.predicted} predictions, "
        f"{run.inconsistent} inconsistent")
    assert run.scanned == 4 + 38 + 728 + 26704


@pytest.mark.extended
def test_acceptance_3_soundness_exhaustive_n7_extended():
    run = verify(VerificationRun(source=ENUMERATION, n_min=7, n_max=7))
    ok = run.inconsistent == 0 and run.counterexamples == ()
    assert _report(
        3, "theorem soundness, extended n = 7", ok,
        f"{run.scanned} graphs, {run.predicted} predictions, "
        f"{run.inconsistent} inconsistent")
    assert run.scanned == 1866256


def test_acceptance_3_soundness_sampling_n12_n13():
    # the n >= 12 regime of the traceability clause, spot-checked by
    # seeded sampling since exhaustion is out of reach
    detail = []
    ok = True
    for n in (12, 13):
        run = verify(VerificationRun(
            source=SAMPLE, sample_n=n, sample_count=1000, sample_seed=n))
        ok = ok and run.inconsistent == 0 and run.scanned == 1000
        detail.append(f"n={n}: {run.predicted} predictions, "
                      f"{run.inconsistent} inconsistent")
    assert _report(3, "theorem soundness, 1000 sampled graphs at n = 12, 13",
                   ok, "; ".join(detail))


def test_acceptance_4_cone_equivalence():
    mismatches = 0
    scanned = 0
    for n in range(1, 7):
        for g in enumerate_connected_graphs(n):
            scanned += 1
            if is_homogeneously_traceable(g) != is_hamiltonian_connected(cone(g)):
                mismatches += 1
    ok = mismatches == 0
    assert _report(
        4, "homogeneously traceable iff cone is Hamiltonian-connected", ok,
        f"{scanned} connected graphs, {mismatches} mismatches")


def test_acceptance_5_laplacian_radius_vs_complement():
    violations = 0
    scanned = 0
    for n in range(2, 7):
        for g in enumerate_graphs(n):
            scanned += 1
            mu1 = symmetric_eigenvalues(laplacian_matrix(g))[0]
            if mu1 > n + 1e-9:
                violations += 1
            elif (abs(mu1 - n) <= 1e-9) != complement_disconnected(g):
                violations += 1
    ok = violations == 0
    assert _report(
        5, "mu1 <= n with equality iff complement disconnected", ok,
        f"{scanned} graphs, {violations} violations")


def test_acceptance_6_interlacing():
    rng = random.Random(1303)
    masks_by_n = {
        n: [rng.randint(1, (1 << n) - 2) for _ in range(200)]
        for n in range(3, 7)
    }
    violations = 0
    checks = 0
    for n, masks in masks_by_n.items():
        for g in enumerate_connected_graphs(n):
            outer = symmetric_eigenvalues(adjacency_matrix(g))
            for mask in masks:
                inner = quotient_eigenvalues_2x2(graph_quotient(g, mask))
                checks += 1
                if not check_interlacing(outer, inner, tol=1e-8).holds:
                    violations += 1
    tight_failures = []
    for a in range(1, 6):
        for b in range(1, 6):
            if a + b < 3:
                continue
            g = complete_bipartite(a, b)
            parts = [list(range(a)), list(range(a, a + b))]
            for matrix in (adjacency_matrix(g), laplacian_matrix(g)):
                inner = quotient_eigenvalues_2x2(quotient_matrix(matrix, parts))
                rep = check_interlacing(
                    symmetric_eigenvalues(matrix), inner, tol=1e-8)
                if not (rep.holds and rep.tight):
                    tight_failures.append((a, b))
    ok = violations == 0 and not tight_failures
    assert _report(
        6, "quotient eigenvalues interlace (200 partitions per size)", ok,
        f"{checks} random checks, {violations} violations; "
        f"bipartition quotients tight: {not tight_failures}")


def test_acceptance_7_eigensolver_accuracy():
    worst = 0.0
    worst_sum = 0.0
    for a in range(1, 9):
        for b in range(1, 9):
            g = complete_bipartite(a, b)
            vals = symmetric_eigenvalues(adjacency_matrix(g))
            worst = max(worst, abs(vals[0] - math.sqrt(a * b)))
            worst_sum = max(worst_sum, abs(sum(vals)) / g.n)
            lap = symmetric_eigenvalues(laplacian_matrix(g))
            worst_sum = max(worst_sum, abs(sum(lap) - 2 * a * b) / g.n)
    for n in range(3, 21):
        g = cycle_graph(n)
        vals = symmetric_eigenvalues(adjacency_matrix(g))
        worst = max(worst, abs(vals[0] - 2.0))
        worst_sum = max(worst_sum, abs(sum(vals)) / n)
    ok = worst <= 1e-9 and worst_sum <= 1e-9
    assert _report(
        7, "eigensolver accuracy on K_{a,b} and C_n", ok,
        f"worst radius error {worst:.3g}, worst trace error {worst_sum:.3g} per vertex")


def test_acceptance_8_oracles_vs_recorded_permutation_fingerprints():
    mismatching = []
    for n in range(1, 7):
        recorded = FINGERPRINTS["sizes"][str(n)]
        count, digest = fingerprint(n, _backtracking_bits)
        if (count, digest) != (recorded["connected_graphs"], recorded["sha256"]):
            mismatching.append(n)
    ok = not mismatching
    assert _report(
        8, "backtracking oracles match recorded permutation fingerprints, n <= 6",
        ok, mismatching or "6 size classes"), mismatching


def test_acceptance_8_oracles_vs_live_permutation_enumeration():
    mismatches = 0
    scanned = 0
    for n in range(1, 6):
        for g in enumerate_connected_graphs(n):
            scanned += 1
            if _backtracking_bits(g) != profile_by_permutations(g):
                mismatches += 1
    ok = mismatches == 0
    assert _report(
        8, "backtracking oracles vs live permutation enumeration, n <= 5",
        ok, f"{scanned} graphs, {mismatches} mismatches")


@pytest.mark.extended
def test_acceptance_8_fingerprint_n7_extended():
    recorded = FINGERPRINTS["sizes"]["7"]
    count, digest = fingerprint(7, _backtracking_bits)
    ok = (count, digest) == (recorded["connected_graphs"], recorded["sha256"])
    assert _report(8, "backtracking oracle fingerprint, extended n = 7", ok,
                   f"{count} graphs")


def test_acceptance_9_petersen_spot_checks():
    g = petersen_graph()
    inv = invariants(g)
    row = evaluate_graph(g)
    checks = {
        "kappa": inv.connectivity == 3,
        "alpha": inv.independence_number == 4,
        "lambda1": abs(row.lambda1 - 3.0) <= 1e-9,
        "traceable": row.profile.traceable,
        "not hamiltonian": not row.profile.hamiltonian,
        "homogeneously traceable": row.profile.homogeneously_traceable,
        "not hamiltonian-connected": not row.profile.hamiltonian_connected,
        "all verdicts consistent": all(v.consistent for v in row.verdicts),
    }
    failed = [name for name, good in checks.items() if not good]
    ok = not failed
    assert _report(9, "Petersen graph spot checks", ok,
                   failed or f"{len(checks)} checks"), failed
