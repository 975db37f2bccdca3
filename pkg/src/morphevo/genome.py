"""Genotype encoding and its mapping to a physical rotor layout.

A design is a flat vector of 41 genes, each in [-1, 1]:

* gene 0 selects the propeller count: the interval [-1, 1] is split into
  five equal bins mapping to n in {4, 5, 6, 7, 8};
* genes 1..40 are eight blocks of five, one block per potential propeller
  ``[length, arm_angle, inclination, azimuth, direction]``. Blocks beyond
  the selected count are phantoms: carried and varied by the genetic
  operators but ignored by the decoder.

Per-block linear maps:

* arm length      l     = 0.1 + (g+1)/2 * 0.2      -> [0.1, 0.3] m
* arm angle       theta = g * 180                  -> [-180, 180] deg
* inclination     phi   = (g+1)/2 * 15             -> [0, 15] deg
* azimuth         psi   = g * 90                   -> [-90, 90] deg
* spin direction: g < 0 -> CCW, otherwise CW

The motor sits at ``l * (cos theta, sin theta, 0)``. Its thrust axis is the
body z-axis rotated by the intrinsic sequence Rz(theta + psi) @ Ry(phi), so
inclination tips the rotor away from vertical and azimuth steers where that
tip points relative to the arm.

Decoding ends with collision resolution: if any two live propeller discs
would overlap (or come within the clearance margin), every arm is stretched
by the single smallest factor that restores legal spacing. Propellers at
(numerically) identical planar positions cannot be separated by uniform
scaling; such genotypes are rejected as invalid layouts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .params import DEFAULT_PARAMS, PhysicalParams

GENE_COUNT = 41
MAX_PROPS = 8
GENES_PER_PROP = 5
MIN_PROPS = 4

_COINCIDENT_TOL = 1e-6

SpinDirection = Literal["CCW", "CW"]


class InvalidLayoutError(ValueError):
    """Raised when a genotype decodes to a geometrically hopeless layout."""


@dataclass(frozen=True)
class PropellerSpec:
    """One resolved propeller: geometry in SI units, angles in degrees."""

    arm_length: float
    arm_angle: float
    inclination: float
    azimuth: float
    direction: SpinDirection

    def position(self) -> np.ndarray:
        """Motor location in the body frame, m."""
        th = math.radians(self.arm_angle)
        return np.array(
            [self.arm_length * math.cos(th), self.arm_length * math.sin(th), 0.0]
        )

    def thrust_axis(self) -> np.ndarray:
        """Unit thrust direction: Rz(arm_angle + azimuth) @ Ry(inclination) @ ez."""
        a = math.radians(self.arm_angle + self.azimuth)
        b = math.radians(self.inclination)
        sb = math.sin(b)
        return np.array([math.cos(a) * sb, math.sin(a) * sb, math.cos(b)])

    @property
    def spin_sign(self) -> float:
        """Reaction-torque sign along the thrust axis: -1 for CCW, +1 for CW."""
        return -1.0 if self.direction == "CCW" else 1.0


@dataclass(frozen=True)
class Phenotype:
    """A decoded design: live propellers plus the collision-scaling factor."""

    props: tuple[PropellerSpec, ...]
    scale_applied: float = 1.0

    @property
    def n(self) -> int:
        return len(self.props)

    def positions(self) -> np.ndarray:
        """(n, 3) array of motor positions in the body frame, m."""
        return np.stack([p.position() for p in self.props])


def prop_count_from_gene(g0: float) -> int:
    """Map the count gene in [-1, 1] to a propeller count in {4..8}."""
    bin_index = min(MAX_PROPS - MIN_PROPS, math.floor((g0 + 1.0) / 2.0 * 5.0))
    return MIN_PROPS + int(bin_index)


def _decode_block(block: np.ndarray) -> PropellerSpec:
    g_l, g_th, g_phi, g_psi, g_dir = (float(x) for x in block)
    return PropellerSpec(
        arm_length=0.1 + (g_l + 1.0) / 2.0 * 0.2,
        arm_angle=g_th * 180.0,
        inclination=(g_phi + 1.0) / 2.0 * 15.0,
        azimuth=g_psi * 90.0,
        direction="CCW" if g_dir < 0.0 else "CW",
    )


def _min_pair_distance(props: tuple[PropellerSpec, ...]) -> float:
    pos = np.stack([p.position() for p in props])
    diff = pos[:, None, :] - pos[None, :, :]
    dist = np.sqrt((diff**2).sum(axis=2))
    iu = np.triu_indices(len(props), k=1)
    return float(dist[iu].min())


def _stretch(props: tuple[PropellerSpec, ...], scale: float) -> tuple[PropellerSpec, ...]:
    return tuple(
        PropellerSpec(
            arm_length=p.arm_length * scale,
            arm_angle=p.arm_angle,
            inclination=p.inclination,
            azimuth=p.azimuth,
            direction=p.direction,
        )
        for p in props
    )


def resolve_collisions(raw: Phenotype, params: PhysicalParams) -> Phenotype:
    """Stretch all arms uniformly until every disc pair clears the margin.

    Returns the phenotype unchanged (scale 1) when the layout is already
    legal. Raises InvalidLayoutError when two propellers are numerically
    coincident in the plane, since no uniform stretch can separate them.
    """
    props = raw.props
    if len(props) < 2:
        return Phenotype(props=props, scale_applied=1.0)
    d_min = _min_pair_distance(props)
    if d_min < _COINCIDENT_TOL:
        raise InvalidLayoutError(
            "coincident propellers cannot be separated by scaling"
        )
    required = 2.0 * params.prop_radius + params.clearance_margin
    if d_min >= required:
        return Phenotype(props=props, scale_applied=1.0)
    scale = required / d_min
    scaled = _stretch(props, scale)
    # Nudge the scale up by ulps until the distances recomputed from the
    # stretched arms — not just the d_min * scale product — clear the
    # requirement, so downstream measurements never see a sub-margin pair.
    while _min_pair_distance(scaled) < required:
        scale = float(np.nextafter(scale, np.inf))
        scaled = _stretch(props, scale)
    return Phenotype(props=scaled, scale_applied=scale)


def decode(genotype: np.ndarray, params: PhysicalParams) -> Phenotype:
    """Map a 41-gene vector to a collision-free Phenotype.

    Raises
    ------
    ValueError
        If the genotype has the wrong shape or genes outside [-1, 1].
    InvalidLayoutError
        If live propellers are coincident in the plane.
    """
    g = np.asarray(genotype, dtype=float)
    if g.shape != (GENE_COUNT,):
        raise ValueError(f"genotype must have shape ({GENE_COUNT},), got {g.shape}")
    if not np.all(np.isfinite(g)) or np.any(g < -1.0) or np.any(g > 1.0):
        raise ValueError("genes must be finite and within [-1, 1]")
    n = prop_count_from_gene(float(g[0]))
    props = tuple(
        _decode_block(g[1 + i * GENES_PER_PROP : 1 + (i + 1) * GENES_PER_PROP])
        for i in range(n)
    )
    return resolve_collisions(Phenotype(props=props, scale_applied=1.0), params)


def quadcopter_baseline(params: PhysicalParams | None = None) -> Phenotype:
    """The reference design: a flat square quad with 0.110 m arms.

    Arms at 45, 135, -135 and -45 degrees, no inclination, alternating spin
    around the circle (CCW, CW, CCW, CW) so adjacent rotors counter-rotate.
    Collision resolution runs with the given params; under the defaults the
    layout sits exactly at the minimum legal spacing and keeps scale 1.
    """
    angles = (45.0, 135.0, -135.0, -45.0)
    directions: tuple[SpinDirection, ...] = ("CCW", "CW", "CCW", "CW")
    props = tuple(
        PropellerSpec(
            arm_length=0.110,
            arm_angle=a,
            inclination=0.0,
            azimuth=0.0,
            direction=d,
        )
        for a, d in zip(angles, directions)
    )
    return resolve_collisions(
        Phenotype(props=props, scale_applied=1.0),
        params if params is not None else DEFAULT_PARAMS,
    )
