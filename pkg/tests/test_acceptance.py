"""Acceptance suite: one test per criterion, tolerances pinned inline.

Criteria 5-9 read the desk-scale runs provided by conftest (pop 100,
200 generations, seed 1, run through the CLI with MORPHO_THREADS=1 and 8).
"""

from __future__ import annotations

import json
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))
from oracles import (
    charpoly_min_eigenvalue,
    grid_hover_feasible,
    oracle_fronts,
)

from morphevo.dynamics import effectiveness, mass_properties
from morphevo.evolve import Individual, fast_non_dominated_sort
from morphevo.genome import InvalidLayoutError, decode, quadcopter_baseline
from morphevo.hover import HoverClass, classify_hover
from morphevo.objectives import (
    ObjectiveVector,
    maneuverability,
    planform_size,
    thrust_to_weight,
)
from morphevo.params import DEFAULT_PARAMS
from morphevo.runio import front_to_csv, load_front, load_manifest, load_stats

# Analytic reference values for the stock quadcopter (verified independently
# by criterion 1): mass 0.434 kg, four 15 N rotors, 0.110 m arms.
BASE_ALPHA = 14.092645048549155
BASE_LAMBDA = 50942.49637168999
BASE_SIZE = 0.0242


def report(num: int, ok: bool, detail: str) -> None:
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'} — {detail}")
    assert ok, f"criterion {num}: {detail}"


def test_criterion_1_analytic_baseline():
    t0 = time.perf_counter()
    ph = quadcopter_baseline()
    mp = mass_properties(ph, DEFAULT_PARAMS)
    mix = effectiveness(ph, mp, DEFAULT_PARAMS)
    hover_class, trim = classify_hover(mix, DEFAULT_PARAMS.gravity)

    spread = float(trim.eta.max() - trim.eta.min())
    alpha = thrust_to_weight(mix.b_f, trim.eta, DEFAULT_PARAMS.gravity)
    analytic_alpha = (
        4.0 * DEFAULT_PARAMS.max_thrust / (mp.total_mass * DEFAULT_PARAMS.gravity)
    )
    area = planform_size(ph)
    gram = mix.b_m @ mix.b_m.T
    _, vecs = np.linalg.eigh(gram)
    z_alignment = abs(float(vecs[2, 0]))
    wall = time.perf_counter() - t0

    checks = {
        "static hover": hover_class is HoverClass.STATIC,
        "commands equal within 1e-6": spread <= 1e-6,
        "alpha within 1e-9 of analytic": abs(alpha - analytic_alpha) <= 1e-9,
        "hull area 0.0242 within 1e-12": abs(area - BASE_SIZE) <= 1e-12,
        "weakest Gramian axis within 1e-6 of body z": 1.0 - z_alignment <= 1e-6,
        "runtime < 1 s": wall < 1.0,
    }
    report(
        1,
        all(checks.values()),
        f"{'; '.join(k for k, v in checks.items() if not v) or 'all checks'} "
        f"(alpha err {abs(alpha - analytic_alpha):.2e}, area err "
        f"{abs(area - BASE_SIZE):.2e}, z misalignment {1.0 - z_alignment:.2e}, "
        f"{wall:.3f}s)",
    )


_INVALID = ObjectiveVector(0.0, 0.0, 0.0, None, float("inf"), True)


def _random_vector(rng: np.random.Generator) -> ObjectiveVector:
    tier = int(rng.integers(0, 4))
    if tier == 3:
        return _INVALID
    hover = (HoverClass.STATIC, HoverClass.SPINNING, HoverClass.NONE)[tier]
    a, l, s = (float(x) for x in rng.integers(0, 3, size=3))
    if hover is HoverClass.NONE:
        return ObjectiveVector(0.0, l, s / 10.0, hover, float(rng.integers(0, 4)), False)
    return ObjectiveVector(a, l, s / 10.0, hover, 0.0, False)


def test_criterion_2_sorting_matches_bruteforce_oracle():
    t0 = time.perf_counter()
    rng = np.random.default_rng(202)
    mismatched = 0
    for _ in range(30):
        pop = [Individual(np.zeros(41), _random_vector(rng)) for _ in range(200)]
        fronts = fast_non_dominated_sort(pop)
        expected = oracle_fronts([ind.objectives for ind in pop])
        if [sorted(f) for f in fronts] != [sorted(f) for f in expected]:
            mismatched += 1
    wall = time.perf_counter() - t0
    report(
        2,
        mismatched == 0 and wall < 10.0,
        f"{mismatched}/30 populations mismatched, {wall:.2f}s (< 10 s)",
    )


def test_criterion_3_hover_solver_vs_grid_oracle():
    t0 = time.perf_counter()
    rng = np.random.default_rng(7)
    checked = oracle_feasible = solver_missed = 0
    while checked < 50:
        genes = rng.uniform(-1, 1, 41)
        genes[0] = rng.uniform(-1.0, -0.2)  # 4- or 5-propeller designs
        try:
            ph = decode(genes, DEFAULT_PARAMS)
        except InvalidLayoutError:
            continue
        mp = mass_properties(ph, DEFAULT_PARAMS)
        mix = effectiveness(ph, mp, DEFAULT_PARAMS)
        hover_class, _ = classify_hover(mix, DEFAULT_PARAMS.gravity)
        verdict = grid_hover_feasible(
            mix.b_f, mix.b_m, DEFAULT_PARAMS.gravity, step=0.05, tol_scale=0.05
        )
        if verdict != "none":
            oracle_feasible += 1
            if hover_class is HoverClass.NONE:
                solver_missed += 1
        checked += 1
    wall = time.perf_counter() - t0
    report(
        3,
        solver_missed == 0 and wall < 120.0,
        f"oracle feasible on {oracle_feasible}/50, solver missed "
        f"{solver_missed}, {wall:.1f}s (< 120 s)",
    )


def test_criterion_4_smallest_eigenvalue_vs_charpoly():
    rng = np.random.default_rng(404)
    worst = 0.0
    for _ in range(10_000):
        b_m = rng.normal(size=(3, int(rng.integers(3, 9))))
        b_m *= 10.0 ** rng.uniform(-2.0, 2.0)
        gram = b_m @ b_m.T
        got = maneuverability(b_m)
        expect = max(0.0, charpoly_min_eigenvalue(gram))
        scale = max(1.0, float(np.linalg.norm(gram, 2)))
        worst = max(worst, abs(got - expect) / scale)
    report(
        4,
        worst <= 1e-9,
        f"worst relative error {worst:.2e} over 10^4 PSD matrices (<= 1e-9)",
    )


def test_criterion_5_desk_run_beats_baseline(desk_run_serial):
    front = load_front(desk_run_serial)
    values = [row["objectives"] for row in front]
    lambda_max = max(v["lambda"] for v in values)
    alpha_max = max(v["alpha"] for v in values)
    wall = load_manifest(desk_run_serial)["wall_time_s"]
    ok = (
        lambda_max >= 2.0 * BASE_LAMBDA
        and alpha_max > BASE_ALPHA
        and wall < 600.0
    )
    report(
        5,
        ok,
        f"lambda_max {lambda_max:.0f} (>= {2 * BASE_LAMBDA:.0f}), "
        f"alpha_max {alpha_max:.3f} (> {BASE_ALPHA:.3f}), wall {wall:.0f}s (< 600 s)",
    )


def test_criterion_6_baseline_stays_pareto_relevant(desk_run_serial):
    front = load_front(desk_run_serial)
    values = [row["objectives"] for row in front]
    beats_both = [
        v for v in values if v["size"] < BASE_SIZE and v["alpha"] > BASE_ALPHA
    ]
    baseline_dominated = any(
        v["size"] <= BASE_SIZE
        and v["alpha"] >= BASE_ALPHA
        and (v["size"] < BASE_SIZE or v["alpha"] > BASE_ALPHA)
        for v in values
    )
    ok = not beats_both or not baseline_dominated
    report(
        6,
        ok,
        f"{len(beats_both)} designs beat baseline on size AND alpha; "
        f"baseline dominated on (size, alpha): {baseline_dominated}",
    )


def test_criterion_7_front_hypervolume_monotone(desk_run_serial):
    stats = load_stats(desk_run_serial)
    hv = [s["hypervolume"] for s in stats]
    drops = [
        (i, earlier, later)
        for i, (earlier, later) in enumerate(zip(hv, hv[1:]), start=1)
        if later < earlier
    ]
    report(
        7,
        len(stats) == 201 and not drops,
        f"{len(stats)} generations, {len(drops)} hypervolume drops "
        f"(first: {drops[0] if drops else 'none'})",
    )


def test_criterion_8_thread_count_invariance(desk_run_serial, desk_run_parallel):
    csv_serial = front_to_csv(load_front(desk_run_serial))
    csv_parallel = front_to_csv(load_front(desk_run_parallel))
    front_bytes_equal = (desk_run_serial / "front.json").read_bytes() == (
        desk_run_parallel / "front.json"
    ).read_bytes()
    threads = (
        load_manifest(desk_run_serial)["threads"],
        load_manifest(desk_run_parallel)["threads"],
    )
    ok = csv_serial == csv_parallel and front_bytes_equal and threads == (1, 8)
    report(
        8,
        ok,
        f"threads {threads}; CSV byte-identical: {csv_serial == csv_parallel}; "
        f"front.json byte-identical: {front_bytes_equal}",
    )


def test_criterion_9_eight_prop_share_declines(desk_run_serial):
    stats = load_stats(desk_run_serial)
    pop = sum(stats[0]["prop_counts"].values())
    initial = stats[0]["prop_counts"]["8"] / pop
    final = stats[-1]["prop_counts"]["8"] / pop
    ok = final < initial and 0.10 <= initial <= 0.30
    report(
        9,
        ok,
        f"8-prop share initial {initial:.0%} (~20%), final {final:.0%} "
        f"(must decline)",
    )
