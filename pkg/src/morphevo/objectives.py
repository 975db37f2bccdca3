"""Design objectives: thrust-to-weight, maneuverability, planform size.

Thrust-to-weight scales the hover trim until the busiest rotor saturates and
measures the specific-force magnitude there in gravities. Maneuverability is
the smallest eigenvalue of the angular-acceleration Gramian b_m @ b_m.T, the
worst-axis rotational authority. Planform size is the area of the 2D convex
hull of the motor positions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dynamics import effectiveness, mass_properties
from .genome import InvalidLayoutError, Phenotype, decode
from .hover import HoverClass, classify_hover
from .params import TOL_EQ, PhysicalParams

# Tier indices for ranking: lower is better. Invalid layouts sit below every
# hover class.
INVALID_TIER = 3


@dataclass(frozen=True)
class ObjectiveVector:
    """Evaluation outcome for one genotype.

    ``thrust_to_weight`` and ``maneuverability`` are maximized, ``hull_area``
    (m^2) is minimized. ``hover_residual`` is the smallest gravity-constraint
    residual achieved by the trim solvers; it orders designs inside the NONE
    tier. Invalid layouts carry zeros, ``hover_class=None``, and an infinite
    residual.
    """

    thrust_to_weight: float
    maneuverability: float
    hull_area: float
    hover_class: HoverClass | None
    hover_residual: float
    invalid: bool = False

    @property
    def tier(self) -> int:
        if self.invalid or self.hover_class is None:
            return INVALID_TIER
        return self.hover_class.tier

    def values(self) -> tuple[float, float, float]:
        """The three objective values, maximization sense for the first two."""
        return (self.thrust_to_weight, self.maneuverability, self.hull_area)


def thrust_to_weight(b_f: np.ndarray, eta_hat: np.ndarray, gravity: float) -> float:
    """Specific thrust, in g's, after scaling a trim to rotor saturation.

    The trim command is scaled so its largest component hits full throttle;
    the ratio ||b_f @ eta_scaled|| / g is the design's thrust-to-weight.
    """
    peak = float(np.max(eta_hat))
    if peak <= 0.0:
        raise ValueError("trim command is all zeros; cannot scale to saturation")
    eta_max = eta_hat / peak
    return float(np.linalg.norm(b_f @ eta_max)) / gravity


def maneuverability(b_m: np.ndarray) -> float:
    """Smallest eigenvalue of the angular-acceleration Gramian b_m @ b_m.T."""
    gram = b_m @ b_m.T
    smallest = float(np.linalg.eigvalsh(gram)[0])
    # eigvalsh can return tiny negatives for PSD matrices; clamp.
    return max(smallest, 0.0)


def _convex_hull(points: np.ndarray) -> np.ndarray:
    """Monotone-chain convex hull of 2D points, counter-clockwise."""
    pts = np.unique(points, axis=0)  # sorts lexicographically
    if len(pts) <= 2:
        return pts

    def turn(o: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
        return float((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]))

    def half(iterable):
        chain: list[np.ndarray] = []
        for p in iterable:
            while len(chain) >= 2 and turn(chain[-2], chain[-1], p) <= 0.0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return np.array(lower[:-1] + upper[:-1])


def planform_size(ph: Phenotype) -> float:
    """Convex-hull area of the motor positions projected to the body plane.

    Shoelace formula over the hull polygon; collinear or degenerate layouts
    have zero area.
    """
    hull = _convex_hull(ph.positions()[:, :2])
    if len(hull) < 3:
        return 0.0
    x, y = hull[:, 0], hull[:, 1]
    return 0.5 * abs(float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))))


def evaluate(
    genotype: np.ndarray, params: PhysicalParams, tol_eq: float = TOL_EQ
) -> ObjectiveVector:
    """Decode, classify hover, and score one genotype.

    Degenerate layouts are reported as invalid rather than raised; hover-less
    designs score zero thrust-to-weight and keep their geometry objectives.
    """
    try:
        ph = decode(genotype, params)
    except InvalidLayoutError:
        return ObjectiveVector(
            thrust_to_weight=0.0,
            maneuverability=0.0,
            hull_area=0.0,
            hover_class=None,
            hover_residual=float("inf"),
            invalid=True,
        )
    mp = mass_properties(ph, params)
    mix = effectiveness(ph, mp, params)
    hover_class, trim = classify_hover(mix, params.gravity, tol_eq)
    if hover_class is HoverClass.NONE:
        alpha = 0.0
    else:
        alpha = thrust_to_weight(mix.b_f, trim.eta, params.gravity)
    return ObjectiveVector(
        thrust_to_weight=alpha,
        maneuverability=maneuverability(mix.b_m),
        hull_area=planform_size(ph),
        hover_class=hover_class,
        hover_residual=trim.thrust_residual,
    )
