"""Independent reference implementations used to cross-check the library.

Everything here is deliberately written in the most literal style possible —
brute force grids, pairwise loops, textbook closed forms — so that agreement
with the fast implementations is meaningful evidence rather than a tautology.
"""

from __future__ import annotations

import itertools

import numpy as np


# ---------------------------------------------------------------------------
# hover feasibility by brute-force grid sampling
# ---------------------------------------------------------------------------

def _lattice(axis: np.ndarray, n: int) -> np.ndarray:
    """All points of the lattice axis^n as an (len(axis)^n, n) array."""
    grids = np.meshgrid(*([axis] * n), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


def grid_hover_feasible(
    b_f: np.ndarray,
    b_m: np.ndarray,
    gravity: float,
    step: float = 0.05,
    tol_scale: float = 0.05,
) -> str:
    """Classify hover capability by scanning the full command grid.

    Every command vector on the lattice {0, step, ..., 1}^n is checked
    against the same residual definitions the trim solver accepts on, with
    the loose tolerance ``tol_scale * g``:

    * static:   | ||f|| - g | <= tol  and  ||m|| <= tol
    * spinning: | ||f|| - g | <= tol  and  ||f x m|| <= tol

    Returns "static", "spinning", or "none" — the best class any grid
    point achieves.  The lattice is evaluated one leading-coordinate slab
    at a time to bound memory.
    """
    n = b_f.shape[1]
    tol = tol_scale * gravity
    axis = np.arange(0.0, 1.0 + step / 2, step)
    slab = _lattice(axis, n - 1)
    spinning_seen = False
    for first in axis:
        block = np.concatenate(
            [np.full((len(slab), 1), first), slab], axis=1
        )
        f = block @ b_f.T
        m = block @ b_m.T
        f_norm = np.linalg.norm(f, axis=1)
        thrust_ok = np.abs(f_norm - gravity) <= tol
        if not np.any(thrust_ok):
            continue
        m_norm = np.linalg.norm(m, axis=1)
        if np.any(thrust_ok & (m_norm <= tol)):
            return "static"
        cross = np.linalg.norm(np.cross(f[thrust_ok], m[thrust_ok]), axis=1)
        if np.any(cross <= tol):
            spinning_seen = True
    return "spinning" if spinning_seen else "none"


# ---------------------------------------------------------------------------
# non-dominated sorting by pairwise peeling
# ---------------------------------------------------------------------------

def oracle_dominates(a, b) -> bool:
    """Literal restatement of the tiered domination rules.

    ``a`` and ``b`` expose .tier, .values() -> (alpha, lam, size), and
    .hover_residual; an invalid individual never dominates anything.
    """
    if a.tier == 3:
        return False
    if b.tier == 3:
        return True
    if a.tier != b.tier:
        return a.tier < b.tier
    if a.tier == 2:
        return a.hover_residual < b.hover_residual
    a_alpha, a_lam, a_size = a.values()
    b_alpha, b_lam, b_size = b.values()
    no_worse = a_alpha >= b_alpha and a_lam >= b_lam and a_size <= b_size
    better = a_alpha > b_alpha or a_lam > b_lam or a_size < b_size
    return no_worse and better


def oracle_fronts(objectives) -> list[list[int]]:
    """Partition indices into Pareto fronts by repeated peeling."""
    remaining = list(range(len(objectives)))
    fronts: list[list[int]] = []
    while remaining:
        front = [
            i
            for i in remaining
            if not any(
                oracle_dominates(objectives[j], objectives[i])
                for j in remaining
                if j != i
            )
        ]
        fronts.append(front)
        remaining = [i for i in remaining if i not in front]
    return fronts


# ---------------------------------------------------------------------------
# symmetric 3x3 eigenvalues from the characteristic polynomial
# ---------------------------------------------------------------------------

def charpoly_min_eigenvalue(w: np.ndarray) -> float:
    """Smallest eigenvalue of a symmetric 3x3 matrix, closed form.

    Uses the trigonometric solution of the cubic characteristic polynomial
    (no iterative linear algebra involved).
    """
    p1 = w[0, 1] ** 2 + w[0, 2] ** 2 + w[1, 2] ** 2
    if p1 == 0.0:
        return float(min(w[0, 0], w[1, 1], w[2, 2]))
    q = float(np.trace(w)) / 3.0
    p2 = (w[0, 0] - q) ** 2 + (w[1, 1] - q) ** 2 + (w[2, 2] - q) ** 2 + 2.0 * p1
    p = np.sqrt(p2 / 6.0)
    b = (w - q * np.eye(3)) / p
    r = float(np.linalg.det(b)) / 2.0
    r = min(1.0, max(-1.0, r))
    phi = np.arccos(r) / 3.0
    # eig1 >= eig2 >= eig3 for phi in [0, pi/3]
    return float(q + 2.0 * p * np.cos(phi + 2.0 * np.pi / 3.0))


# ---------------------------------------------------------------------------
# hypervolume by inclusion-exclusion (minimisation form)
# ---------------------------------------------------------------------------

def hypervolume_inclusion_exclusion(
    points: np.ndarray, reference: np.ndarray
) -> float:
    """Volume of the union of boxes [p_i, ref] for minimised points."""
    pts = np.asarray(points, dtype=float)
    ref = np.asarray(reference, dtype=float)
    pts = pts[np.all(pts < ref, axis=1)]
    total = 0.0
    n = len(pts)
    for r in range(1, n + 1):
        sign = 1.0 if r % 2 == 1 else -1.0
        for combo in itertools.combinations(range(n), r):
            corner = np.max(pts[list(combo)], axis=0)
            total += sign * float(np.prod(np.maximum(0.0, ref - corner)))
    return total


# ---------------------------------------------------------------------------
# one-dimensional maximisation by golden-section search
# ---------------------------------------------------------------------------

def golden_section_argmax(fun, lo: float, hi: float, tol: float = 1e-9) -> float:
    """Argmax of a unimodal function on [lo, hi]."""
    inv_phi = (np.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = fun(c), fun(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = fun(d)
    return (a + b) / 2.0
