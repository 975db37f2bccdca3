"""Elitist multi-objective evolution (NSGA-II) over morphology genotypes.

Ranking is tiered before it is Pareto: statically hovering designs beat
spin-hovering ones, which beat non-hovering ones, which beat invalid
layouts. Inside the hover-capable tiers, domination is Pareto on
(maximize thrust-to-weight, maximize maneuverability, minimize hull area);
inside the non-hovering tier, a smaller gravity residual dominates.

Reproducibility: the initial population is drawn from one RNG stream and
each generation's variation from its own, both derived from the run seed
via SeedSequence spawn keys, so results are independent of evaluation
parallelism.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .genome import GENE_COUNT, prop_count_from_gene
from .hover import HoverClass
from .objectives import INVALID_TIER, ObjectiveVector, evaluate
from .params import DEFAULT_PARAMS, PhysicalParams

# Hypervolume reference corner in minimization space
# (-thrust_to_weight, -maneuverability, hull_area). Zero bounds the two
# maximized objectives from below; 0.75 m^2 exceeds any buildable hull
# (eight 0.3 m arms span less than 0.3 m^2).
HV_REFERENCE = (0.0, 0.0, 0.75)


@dataclass
class EvolutionConfig:
    """Run settings. Defaults match the population-scale experiment; desk
    runs pass smaller pop_size/generations explicitly."""

    pop_size: int = 600
    generations: int = 2000
    mutation_rate: float = 0.2
    mutation_sigma: float = 0.2
    crossover_rate: float = 1.0
    seed: int = 0
    params: PhysicalParams = DEFAULT_PARAMS

    def __post_init__(self) -> None:
        if self.pop_size < 4 or self.pop_size % 2:
            raise ValueError("pop_size must be even and at least 4")
        if self.generations < 0:
            raise ValueError("generations must be non-negative")
        for name in ("mutation_rate", "crossover_rate"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ValueError(f"{name} must be within [0, 1]")
        if self.mutation_sigma < 0.0:
            raise ValueError("mutation_sigma must be non-negative")
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")


@dataclass
class Individual:
    genes: np.ndarray
    objectives: ObjectiveVector | None = None
    rank: int = -1
    crowding: float = 0.0


@dataclass
class GenerationStats:
    generation: int
    front_size: int
    hypervolume: float
    alpha_min: float
    alpha_max: float
    maneuver_min: float
    maneuver_max: float
    area_min: float
    area_max: float
    prop_counts: dict[int, int]
    hover_classes: dict[str, int]


@dataclass
class RunRecord:
    config: EvolutionConfig
    stats: list[GenerationStats] = field(default_factory=list)
    population: list[Individual] = field(default_factory=list)
    front: list[Individual] = field(default_factory=list)


def latin_hypercube_init(pop_size: int, dim: int = GENE_COUNT, seed=0) -> np.ndarray:
    """Latin-hypercube sample of shape (pop_size, dim) in [-1, 1].

    Each dimension is split into pop_size equal strata; every stratum gets
    exactly one jittered sample, with an independent permutation per
    dimension. ``seed`` may be an int, SeedSequence, or Generator.
    """
    rng = np.random.default_rng(seed)
    width = 2.0 / pop_size
    cols = []
    for _ in range(dim):
        perm = rng.permutation(pop_size)
        jitter = rng.random(pop_size)
        cols.append(-1.0 + (perm + jitter) * width)
    return np.stack(cols, axis=1)


def dominates(a: ObjectiveVector, b: ObjectiveVector) -> bool:
    """Tiered domination: hover class first, then Pareto or residual order."""
    if a.tier != b.tier:
        return a.tier < b.tier
    if a.tier == INVALID_TIER:
        return False
    if a.hover_class is HoverClass.NONE:
        return a.hover_residual < b.hover_residual
    no_worse = (
        a.thrust_to_weight >= b.thrust_to_weight
        and a.maneuverability >= b.maneuverability
        and a.hull_area <= b.hull_area
    )
    better = (
        a.thrust_to_weight > b.thrust_to_weight
        or a.maneuverability > b.maneuverability
        or a.hull_area < b.hull_area
    )
    return no_worse and better


def fast_non_dominated_sort(pop: Sequence[Individual]) -> list[list[int]]:
    """Deb's fast non-dominated sort; assigns ranks, returns index fronts."""
    n = len(pop)
    dominated: list[list[int]] = [[] for _ in range(n)]
    counts = [0] * n
    fronts: list[list[int]] = [[]]
    for i in range(n):
        oi = pop[i].objectives
        for j in range(i + 1, n):
            oj = pop[j].objectives
            if dominates(oi, oj):
                dominated[i].append(j)
                counts[j] += 1
            elif dominates(oj, oi):
                dominated[j].append(i)
                counts[i] += 1
        if counts[i] == 0:
            pop[i].rank = 0
            fronts[0].append(i)
    current = 0
    while fronts[current]:
        nxt: list[int] = []
        for i in fronts[current]:
            for j in dominated[i]:
                counts[j] -= 1
                if counts[j] == 0:
                    pop[j].rank = current + 1
                    nxt.append(j)
        current += 1
        fronts.append(nxt)
    fronts.pop()
    return fronts


def crowding_distance(front: Sequence[Individual]) -> None:
    """Assign crowding distances within one front.

    Per objective with nonzero range: boundary members get +infinity,
    interior members accumulate the range-normalized gap between their
    neighbors. Zero-range objectives contribute nothing.
    """
    k = len(front)
    if k <= 2:
        for ind in front:
            ind.crowding = math.inf
        return
    dist = np.zeros(k)
    values = np.array([ind.objectives.values() for ind in front])
    for col in range(values.shape[1]):
        order = np.argsort(values[:, col], kind="stable")
        v = values[order, col]
        span = v[-1] - v[0]
        if span <= 0.0:
            continue
        dist[order[0]] = math.inf
        dist[order[-1]] = math.inf
        gaps = (v[2:] - v[:-2]) / span
        interior = order[1:-1]
        finite = ~np.isinf(dist[interior])
        dist[interior[finite]] += gaps[finite]
    for ind, d in zip(front, dist):
        ind.crowding = float(d)


def binary_tournament(pop: Sequence[Individual], rng: np.random.Generator) -> Individual:
    """Pick two uniformly (with replacement); lower rank wins, then larger
    crowding, then the first drawn."""
    i, j = rng.integers(0, len(pop), size=2)
    a, b = pop[i], pop[j]
    if a.rank != b.rank:
        return a if a.rank < b.rank else b
    if a.crowding != b.crowding:
        return a if a.crowding > b.crowding else b
    return a


def arithmetic_crossover(
    g1: np.ndarray, g2: np.ndarray, rng: np.random.Generator
) -> tuple[np.ndarray, np.ndarray]:
    """Per-gene convex blend with independent weights; children mirrored."""
    beta = rng.random(g1.shape[0])
    return beta * g1 + (1.0 - beta) * g2, beta * g2 + (1.0 - beta) * g1


def mutate(
    genes: np.ndarray, rate: float, sigma: float, rng: np.random.Generator
) -> np.ndarray:
    """Per-gene Gaussian mutation, clipped back into [-1, 1]."""
    mask = rng.random(genes.shape[0]) < rate
    noise = rng.normal(0.0, sigma, genes.shape[0])
    return np.clip(genes + np.where(mask, noise, 0.0), -1.0, 1.0)


def hypervolume(points: np.ndarray, ref: Sequence[float]) -> float:
    """Exact dominated hypervolume of 3D minimization points below ``ref``.

    Sweeps the third coordinate and accumulates slab volumes, each slab's
    cross-section being the staircase union area in the first two
    coordinates.
    """
    ref = np.asarray(ref, dtype=float)
    pts = np.asarray(points, dtype=float).reshape(-1, 3)
    pts = pts[np.all(pts < ref, axis=1)]
    if not len(pts):
        return 0.0

    def staircase_area(xy: np.ndarray) -> float:
        order = np.lexsort((xy[:, 1], xy[:, 0]))
        area = 0.0
        best_y = math.inf
        stairs: list[tuple[float, float]] = []
        for x, y in xy[order]:
            if y < best_y:
                stairs.append((x, y))
                best_y = y
        for (x, y), (x_next, _) in zip(stairs, stairs[1:] + [(float(ref[0]), 0.0)]):
            area += (x_next - x) * (ref[1] - y)
        return area

    zs = np.unique(pts[:, 2])
    volume = 0.0
    boundaries = np.append(zs, ref[2])
    for z_low, z_high in zip(boundaries[:-1], boundaries[1:]):
        active = pts[pts[:, 2] <= z_low]
        volume += staircase_area(active[:, :2]) * (z_high - z_low)
    return float(volume)


def front_hypervolume(front: Sequence[Individual]) -> float:
    """Hypervolume of a front in (-alpha, -maneuverability, area) space."""
    pts = np.array(
        [
            (-o.thrust_to_weight, -o.maneuverability, o.hull_area)
            for o in (ind.objectives for ind in front)
        ]
    )
    return hypervolume(pts, HV_REFERENCE)


def _eval_task(args: tuple[np.ndarray, PhysicalParams]) -> ObjectiveVector:
    genes, params = args
    return evaluate(genes, params)


def _make_evaluator(params: PhysicalParams, executor):
    if executor is None:
        return lambda genes_list: [evaluate(g, params) for g in genes_list]

    def run(genes_list):
        tasks = [(g, params) for g in genes_list]
        return list(executor.map(_eval_task, tasks, chunksize=8))

    return run


def _collect_stats(
    generation: int, pop: Sequence[Individual], front: Sequence[Individual]
) -> GenerationStats:
    values = np.array([ind.objectives.values() for ind in front])
    prop_counts = {n: 0 for n in range(4, 9)}
    hover_classes = {"static": 0, "spinning": 0, "none": 0, "invalid": 0}
    for ind in pop:
        prop_counts[prop_count_from_gene(float(ind.genes[0]))] += 1
        o = ind.objectives
        key = "invalid" if o.invalid else o.hover_class.value
        hover_classes[key] += 1
    return GenerationStats(
        generation=generation,
        front_size=len(front),
        hypervolume=front_hypervolume(front),
        alpha_min=float(values[:, 0].min()),
        alpha_max=float(values[:, 0].max()),
        maneuver_min=float(values[:, 1].min()),
        maneuver_max=float(values[:, 1].max()),
        area_min=float(values[:, 2].min()),
        area_max=float(values[:, 2].max()),
        prop_counts=prop_counts,
        hover_classes=hover_classes,
    )


def _rank_and_crowd(pop: list[Individual]) -> list[list[int]]:
    fronts = fast_non_dominated_sort(pop)
    for front in fronts:
        crowding_distance([pop[i] for i in front])
    return fronts


def evolve(
    config: EvolutionConfig,
    threads: int = 1,
    progress: Callable[[GenerationStats], None] | None = None,
) -> RunRecord:
    """Run the full loop: init, evaluate, select, vary, merge, truncate.

    ``threads`` > 1 evaluates designs in a process pool; results are
    identical to the serial path because evaluation order never feeds back
    into the RNG streams.
    """
    record = RunRecord(config=config)
    init_rng = np.random.default_rng(
        np.random.SeedSequence(config.seed, spawn_key=(0,))
    )
    genes = latin_hypercube_init(config.pop_size, GENE_COUNT, seed=init_rng)
    pop = [Individual(g) for g in genes]

    executor = ProcessPoolExecutor(max_workers=threads) if threads > 1 else None
    evaluator = _make_evaluator(config.params, executor)
    try:
        for ind, obj in zip(pop, evaluator([ind.genes for ind in pop])):
            ind.objectives = obj
        _rank_and_crowd(pop)
        front = [ind for ind in pop if ind.rank == 0]
        stats = _collect_stats(0, pop, front)
        record.stats.append(stats)
        if progress is not None:
            progress(stats)

        half = config.pop_size // 2
        for gen in range(1, config.generations + 1):
            rng = np.random.default_rng(
                np.random.SeedSequence(config.seed, spawn_key=(1, gen))
            )
            child_genes: list[np.ndarray] = []
            for _ in range(half):
                p1 = binary_tournament(pop, rng)
                p2 = binary_tournament(pop, rng)
                if rng.random() < config.crossover_rate:
                    c1, c2 = arithmetic_crossover(p1.genes, p2.genes, rng)
                else:
                    c1, c2 = p1.genes.copy(), p2.genes.copy()
                child_genes.append(mutate(c1, config.mutation_rate, config.mutation_sigma, rng))
                child_genes.append(mutate(c2, config.mutation_rate, config.mutation_sigma, rng))
            offspring = [Individual(g) for g in child_genes]
            for ind, obj in zip(offspring, evaluator(child_genes)):
                ind.objectives = obj

            merged = pop + offspring
            fronts = _rank_and_crowd(merged)
            next_pop: list[Individual] = []
            for front_idx in fronts:
                members = [merged[i] for i in front_idx]
                if len(next_pop) + len(members) <= config.pop_size:
                    next_pop.extend(members)
                    if len(next_pop) == config.pop_size:
                        break
                else:
                    members.sort(key=lambda ind: -ind.crowding)
                    next_pop.extend(members[: config.pop_size - len(next_pop)])
                    break
            pop = next_pop

            front = [ind for ind in pop if ind.rank == 0]
            stats = _collect_stats(gen, pop, front)
            record.stats.append(stats)
            if progress is not None:
                progress(stats)
    finally:
        if executor is not None:
            executor.shutdown()

    record.population = pop
    record.front = [ind for ind in pop if ind.rank == 0]
    return record
