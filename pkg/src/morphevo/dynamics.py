"""Rigid-body mass properties and actuator effectiveness.

The vehicle is modeled as three kinds of components:

* the flight-controller stack: a solid cuboid centered at the body origin,
  long axis along body x;
* motors: point masses at the arm tips;
* arms: slender rods of uniform density from the origin to each tip.

Commands are normalized throttles eta in [0, 1] mapping linearly to rotor
speed squared, so both thrust and drag torque are linear in eta:
force_i = k_f * omega_max^2 * eta_i, torque about the rotor axis
sigma_i * k_m * omega_max^2 * eta_i with sigma = -1 for CCW, +1 for CW.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .genome import Phenotype
from .params import PhysicalParams


@dataclass(frozen=True)
class MassProperties:
    """Total mass, center of gravity, and inertia tensor about the CG.

    Attributes
    ----------
    total_mass : float
        kg.
    cg : numpy.ndarray
        (3,) center of gravity in the body frame, m.
    inertia : numpy.ndarray
        (3, 3) inertia tensor about the CG in body axes, kg*m^2.
    """

    total_mass: float
    cg: np.ndarray
    inertia: np.ndarray


@dataclass(frozen=True)
class ActuatorMatrices:
    """Linear maps from throttle vector to specific force and angular accel.

    ``b_f @ eta`` is the net specific force (N/kg) and ``b_m @ eta`` the net
    angular acceleration (rad/s^2) produced at full-scale commands, both in
    body axes about the CG.
    """

    b_f: np.ndarray
    b_m: np.ndarray

    @property
    def n(self) -> int:
        return self.b_f.shape[1]


def _rod_inertia(mass: float, tip: np.ndarray) -> np.ndarray:
    """Inertia of a slender rod from the origin to ``tip`` about its center."""
    length_sq = float(tip @ tip)
    if length_sq == 0.0:
        return np.zeros((3, 3))
    u_outer = np.outer(tip, tip) / length_sq
    return mass * length_sq / 12.0 * (np.eye(3) - u_outer)


def _fc_inertia(params: PhysicalParams) -> np.ndarray:
    a, b, c = params.fc_dims
    m = params.m_fc
    return np.diag(
        [
            m / 12.0 * (b * b + c * c),
            m / 12.0 * (a * a + c * c),
            m / 12.0 * (a * a + b * b),
        ]
    )


def mass_properties(ph: Phenotype, params: PhysicalParams) -> MassProperties:
    """Aggregate mass, CG, and CG-referenced inertia for a decoded design.

    Component inertias are taken about each component's own center and
    shifted to the vehicle CG with the parallel-axis theorem.
    """
    masses = [params.m_fc]
    centers = [np.zeros(3)]
    inertias = [_fc_inertia(params)]
    for p in ph.props:
        tip = p.position()
        masses.append(params.m_motor)
        centers.append(tip)
        inertias.append(np.zeros((3, 3)))
        arm_mass = params.mu_arm * p.arm_length
        masses.append(arm_mass)
        centers.append(tip / 2.0)
        inertias.append(_rod_inertia(arm_mass, tip))
    total = float(sum(masses))
    cg = sum(m * c for m, c in zip(masses, centers)) / total
    inertia = np.zeros((3, 3))
    for m, c, i_c in zip(masses, centers, inertias):
        r = c - cg
        inertia += i_c + m * ((r @ r) * np.eye(3) - np.outer(r, r))
    return MassProperties(total_mass=total, cg=cg, inertia=inertia)


def effectiveness(
    ph: Phenotype, mp: MassProperties, params: PhysicalParams
) -> ActuatorMatrices:
    """Build the specific-force and angular-acceleration mix matrices.

    Column i of ``b_f`` is the specific force of rotor i at eta_i = 1;
    column i of ``b_m`` is the angular acceleration from its thrust moment
    about the CG plus its aerodynamic reaction torque.
    """
    full = params.k_f * params.omega_max**2
    torque_scale = params.k_m * params.omega_max**2
    axes = np.stack([p.thrust_axis() for p in ph.props], axis=1)
    b_f = full * axes / mp.total_mass
    torques = np.empty((3, ph.n))
    for i, p in enumerate(ph.props):
        lever = p.position() - mp.cg
        torques[:, i] = np.cross(lever, full * axes[:, i]) + (
            p.spin_sign * torque_scale * axes[:, i]
        )
    b_m = np.linalg.solve(mp.inertia, torques)
    return ActuatorMatrices(b_f=b_f, b_m=b_m)


def angular_accel_diagnostic(arm_length: float, params: PhysicalParams) -> float:
    """Pitch-axis angular acceleration per unit thrust for one arm.

    For a single motor on an arm of length l rotating the stack about body
    y, the lever grows linearly while the inertia grows with l^2 (motor) and
    l^3 (arm), so the kernel l / (m_motor*l^2 + (mu/3)*l^3 + I_fc_yy) peaks
    at a finite arm length and decays beyond it.
    """
    a, _, c = params.fc_dims
    i_fc_yy = params.m_fc / 12.0 * (a * a + c * c)
    l = arm_length
    return l / (params.m_motor * l * l + params.mu_arm / 3.0 * l**3 + i_fc_yy)
