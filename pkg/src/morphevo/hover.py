"""Hover trim feasibility via constrained nonlinear programming.

A design hovers *statically* when some constant command vector eta in
[0, 1]^n produces a net specific force of magnitude g and zero net angular
acceleration. Designs that cannot do that may still hover *spinning*: thrust
magnitude g with the net angular acceleration parallel to the net force, so
the vehicle rotates steadily about the shared axis while the average lateral
force cancels over a revolution.

Both trims are posed as small NLPs, minimizing the squared command norm (a
power proxy) subject to the trim constraints, and solved with SLSQP from a
fixed set of deterministic random starts. Solutions are re-validated against
the constraints before being trusted; a failed design reports the smallest
gravity-constraint residual it achieved, which downstream ranking uses to
order hopeless designs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog, minimize

from .dynamics import ActuatorMatrices
from .params import TOL_EQ

# Internal seed for NLP multistarts. Fixed so that evaluation is a pure
# function of the actuator matrices, independent of evolution RNG streams,
# process boundaries, and thread counts.
_SOLVER_SEED = 745
_STATIC_RANDOM_STARTS = 2
_SPIN_RANDOM_STARTS = 1
_MAXITER = 60
_FTOL = 1e-10
# The spinning parallelism inequality is tightened internally by this factor
# so boundary-riding optima still satisfy the unshrunk tolerance after the
# solver's own constraint slack.
_SPIN_INTERNAL_MARGIN = 0.99


class HoverClass(enum.Enum):
    """Hover capability tier, best to worst."""

    STATIC = "static"
    SPINNING = "spinning"
    NONE = "none"

    @property
    def tier(self) -> int:
        return _TIER[self]


_TIER = {HoverClass.STATIC: 0, HoverClass.SPINNING: 1, HoverClass.NONE: 2}


@dataclass(frozen=True)
class HoverSolution:
    """Outcome of one trim search.

    ``eta`` is the best command vector found (clipped to [0, 1]); residuals
    are measured on that clipped vector. ``thrust_residual`` is
    | ||b_f @ eta|| - g |, ``moment_residual`` is ||b_m @ eta||, and
    ``spin_residual`` is the cross-product magnitude ||f x m||, which
    vanishes exactly when net force and net angular acceleration are
    parallel (in particular whenever the moment itself is zero).
    """

    eta: np.ndarray
    cost: float
    feasible: bool
    thrust_residual: float
    moment_residual: float
    spin_residual: float


def _skew(v: np.ndarray) -> np.ndarray:
    return np.array(
        [[0.0, -v[2], v[1]], [v[2], 0.0, -v[0]], [-v[1], v[0], 0.0]]
    )


def _residuals(
    mix: ActuatorMatrices, eta: np.ndarray, gravity: float
) -> tuple[float, float, float]:
    f = mix.b_f @ eta
    m = mix.b_m @ eta
    nf = float(np.linalg.norm(f))
    nm = float(np.linalg.norm(m))
    spin = float(np.linalg.norm(np.cross(f, m)))
    return abs(nf - gravity), nm, spin


def _solution_from(
    mix: ActuatorMatrices, x: np.ndarray, gravity: float, feasible: bool
) -> HoverSolution:
    eta = np.clip(x, 0.0, 1.0)
    tr, mr, sr = _residuals(mix, eta, gravity)
    return HoverSolution(
        eta=eta,
        cost=float(eta @ eta),
        feasible=feasible,
        thrust_residual=tr,
        moment_residual=mr,
        spin_residual=sr,
    )


def _thrust_constraint(b_f: np.ndarray, gravity: float) -> dict:
    def fun(eta: np.ndarray) -> float:
        return float(np.linalg.norm(b_f @ eta)) - gravity

    def jac(eta: np.ndarray) -> np.ndarray:
        f = b_f @ eta
        nf = np.linalg.norm(f)
        if nf < 1e-12:
            return np.zeros(b_f.shape[1])
        return b_f.T @ (f / nf)

    return {"type": "eq", "fun": fun, "jac": jac}


def _static_certificate(
    mix: ActuatorMatrices, gravity: float
) -> tuple[str, np.ndarray | None]:
    """Probe static feasibility via LPs over the zero-moment polytope.

    Iteratively maximizes the net specific force along a refining direction
    subject to b_m @ eta = 0 and the command box. The polytope is star-shaped
    around eta = 0, so whenever the reachable magnitude exceeds g, scaling the
    maximizer down lands exactly on the constraint manifold and static hover
    is certain; the scaled point is returned as a warm start. Returns one of
    ("feasible", start), ("infeasible", None) when the explored directions
    top out below g, or ("unknown", None) when the LP itself fails.
    """
    b_f, b_m = mix.b_f, mix.b_m
    row_norms = np.linalg.norm(b_m, axis=1)
    keep = row_norms > 1e-12
    a_eq = b_m[keep] / row_norms[keep, None]
    direction = b_f.sum(axis=1)
    norm = float(np.linalg.norm(direction))
    direction = direction / norm if norm > 1e-12 else np.array([0.0, 0.0, 1.0])
    bounds = [(0.0, 1.0)] * mix.n
    best_x, best_norm = None, 0.0
    for _ in range(3):
        res = linprog(
            -(direction @ b_f),
            A_eq=a_eq if a_eq.size else None,
            b_eq=np.zeros(a_eq.shape[0]) if a_eq.size else None,
            bounds=bounds,
            method="highs",
        )
        if not res.success:
            return "unknown", None
        f = b_f @ res.x
        nf = float(np.linalg.norm(f))
        if nf <= best_norm * (1.0 + 1e-9):
            break
        best_x, best_norm = res.x, nf
        direction = f / nf
    if best_x is None or best_norm < gravity:
        return "infeasible", None
    # Project onto the exact null space of b_m (the LP satisfies it only to
    # solver tolerance), clip, and rescale the thrust magnitude to g.
    if a_eq.size:
        correction, *_ = np.linalg.lstsq(b_m, b_m @ best_x, rcond=None)
        best_x = np.clip(best_x - correction, 0.0, 1.0)
    nf = float(np.linalg.norm(b_f @ best_x))
    if nf < gravity:
        return "unknown", None
    return "feasible", best_x * (gravity / nf)


def _lstsq_start(
    mix: ActuatorMatrices, gravity: float, with_moment: bool
) -> np.ndarray:
    """Near-feasible warm start from a least-norm linear solve.

    Targets net specific force of magnitude g along the design's mean thrust
    direction, optionally with zero net angular acceleration. Clipping to the
    command box may dent the equalities slightly; the NLP repairs that.
    """
    mean_dir = mix.b_f.sum(axis=1)
    norm = np.linalg.norm(mean_dir)
    target_dir = mean_dir / norm if norm > 1e-12 else np.array([0.0, 0.0, 1.0])
    if with_moment:
        a = np.vstack([mix.b_f, mix.b_m])
        b = np.concatenate([gravity * target_dir, np.zeros(3)])
    else:
        a = mix.b_f
        b = gravity * target_dir
    x, *_ = np.linalg.lstsq(a, b, rcond=None)
    return np.clip(x, 0.0, 1.0)


def _run_starts(
    mix: ActuatorMatrices,
    gravity: float,
    constraints: list[dict],
    accept,
    starts: np.ndarray,
) -> tuple[HoverSolution | None, HoverSolution]:
    """Run the multistart loop; return (best feasible or None, best attempt).

    ``accept(sol)`` decides constraint satisfaction on the clipped command.
    The best attempt minimizes the gravity residual and is reported when no
    start is accepted.
    """
    bounds = [(0.0, 1.0)] * mix.n
    best_feasible: HoverSolution | None = None
    best_attempt: HoverSolution | None = None
    for x0 in starts:
        res = minimize(
            lambda e: float(e @ e),
            x0,
            jac=lambda e: 2.0 * e,
            bounds=bounds,
            constraints=constraints,
            method="SLSQP",
            options={"maxiter": _MAXITER, "ftol": _FTOL},
        )
        sol = _solution_from(mix, res.x, gravity, feasible=False)
        if accept(sol):
            sol = _solution_from(mix, res.x, gravity, feasible=True)
            if best_feasible is None or sol.cost < best_feasible.cost:
                best_feasible = sol
        if (
            best_attempt is None
            or sol.thrust_residual < best_attempt.thrust_residual
        ):
            best_attempt = sol
    assert best_attempt is not None
    return best_feasible, best_attempt


def solve_static_hover(
    mix: ActuatorMatrices, gravity: float, tol_eq: float = TOL_EQ
) -> HoverSolution:
    """Find a minimum-effort static trim: ||b_f @ eta|| = g, b_m @ eta = 0.

    Returns the cheapest feasible solution over the multistarts, or an
    infeasible HoverSolution carrying the smallest gravity residual reached.
    """
    moment = {
        "type": "eq",
        "fun": lambda e, b=mix.b_m: b @ e,
        "jac": lambda e, b=mix.b_m: b,
    }
    constraints = [_thrust_constraint(mix.b_f, gravity), moment]

    def accept(sol: HoverSolution) -> bool:
        return sol.thrust_residual <= tol_eq and sol.moment_residual <= tol_eq

    verdict, certificate = _static_certificate(mix, gravity)
    attempts: list[HoverSolution] = []
    if certificate is not None:
        feasible, attempt = _run_starts(
            mix, gravity, constraints, accept, certificate[None, :]
        )
        if feasible is not None:
            return feasible
        attempts.append(attempt)
    if verdict == "infeasible":
        # The LP topped out below g, so no zero-moment command reaches the
        # required thrust; one honest NLP attempt records the residual.
        starts = _lstsq_start(mix, gravity, with_moment=True)[None, :]
    else:
        rng = np.random.default_rng(_SOLVER_SEED)
        starts = np.vstack(
            [
                _lstsq_start(mix, gravity, with_moment=True),
                rng.uniform(0.0, 1.0, size=(_STATIC_RANDOM_STARTS, mix.n)),
            ]
        )
    feasible, attempt = _run_starts(mix, gravity, constraints, accept, starts)
    if feasible is not None:
        return feasible
    attempts.append(attempt)
    return min(attempts, key=lambda s: s.thrust_residual)


def solve_spinning_hover(
    mix: ActuatorMatrices, gravity: float, tol_eq: float = TOL_EQ
) -> HoverSolution:
    """Find a minimum-effort spinning trim.

    The parallelism requirement (b_f @ eta) x (b_m @ eta) = 0 is imposed as
    a smooth inequality on the squared cross product: ||f x m||^2 <= tol^2.
    A zero moment satisfies it exactly, so every static trim is a spinning
    trim as well.  The bound handed to the solver is shrunk by a small
    margin so that the solver's own constraint slack cannot push the
    returned point past the acceptance tolerance when the inequality is
    active at the optimum.
    """
    b_f, b_m = mix.b_f, mix.b_m
    tol_sq = (_SPIN_INTERNAL_MARGIN * tol_eq) ** 2

    def cross_fun(eta: np.ndarray) -> float:
        c = np.cross(b_f @ eta, b_m @ eta)
        return tol_sq - float(c @ c)

    def cross_jac(eta: np.ndarray) -> np.ndarray:
        f = b_f @ eta
        m = b_m @ eta
        c = np.cross(f, m)
        dc = _skew(f) @ b_m - _skew(m) @ b_f
        return -2.0 * (c @ dc)

    constraints = [
        _thrust_constraint(b_f, gravity),
        {"type": "ineq", "fun": cross_fun, "jac": cross_jac},
    ]

    def accept(sol: HoverSolution) -> bool:
        return sol.thrust_residual <= tol_eq and sol.spin_residual <= tol_eq

    rng = np.random.default_rng(_SOLVER_SEED + 1)
    starts = np.vstack(
        [
            _lstsq_start(mix, gravity, with_moment=False),
            rng.uniform(0.0, 1.0, size=(_SPIN_RANDOM_STARTS, mix.n)),
        ]
    )
    feasible, attempt = _run_starts(mix, gravity, constraints, accept, starts)
    if feasible is not None:
        return feasible

    # Cost-first descent can stall at an infeasible KKT point when the
    # parallelism inequality is active: near the bound the squared-cross
    # constraint is ~1e-12, smaller than the solver's own slack.  Restore
    # feasibility by minimising the cross product itself, then re-polish
    # the cost from the restored point.
    restore = minimize(
        lambda e: -cross_fun(e),
        attempt.eta,
        jac=lambda e: -cross_jac(e),
        bounds=[(0.0, 1.0)] * mix.n,
        constraints=[_thrust_constraint(b_f, gravity)],
        method="SLSQP",
        options={"maxiter": _MAXITER, "ftol": _FTOL},
    )
    restored = _solution_from(mix, restore.x, gravity, feasible=False)
    if accept(restored):
        restored = _solution_from(mix, restore.x, gravity, feasible=True)
        polished, _ = _run_starts(
            mix, gravity, constraints, accept, restored.eta[None, :]
        )
        if polished is not None and polished.cost < restored.cost:
            return polished
        return restored
    if restored.thrust_residual < attempt.thrust_residual:
        return restored
    return attempt


def classify_hover(
    mix: ActuatorMatrices, gravity: float, tol_eq: float = TOL_EQ
) -> tuple[HoverClass, HoverSolution]:
    """Rank a design's hover capability: static, else spinning, else none.

    The spinning solver only runs when the static one fails. For the NONE
    class the returned solution is the attempt (from either solver) with the
    smallest gravity residual.
    """
    static = solve_static_hover(mix, gravity, tol_eq)
    if static.feasible:
        return HoverClass.STATIC, static
    spinning = solve_spinning_hover(mix, gravity, tol_eq)
    if spinning.feasible:
        return HoverClass.SPINNING, spinning
    best = min(static, spinning, key=lambda s: s.thrust_residual)
    return HoverClass.NONE, best
