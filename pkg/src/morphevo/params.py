"""Physical parameters shared by the vehicle model and the solvers.

All quantities are SI: meters, kilograms, seconds, radians per second for
rotor speeds. Angles that cross a serialization boundary are degrees; the
conversion happens at the point of use.
"""

from __future__ import annotations

from dataclasses import dataclass, fields


@dataclass(frozen=True)
class PhysicalParams:
    """Component masses, rotor coefficients, and geometric limits.

    Defaults describe a small research multicopter: 15 N of thrust per rotor
    at full throttle, 35 g motors, carbon arms at 100 g/m, and a 250 g
    flight-controller stack modeled as a cuboid at the body origin with its
    long axis along body x.

    Attributes
    ----------
    k_f : float
        Rotor thrust coefficient, N/(rad/s)^2. Thrust = k_f * omega^2.
    k_m : float
        Rotor drag-torque coefficient, N*m/(rad/s)^2.
    omega_max : float
        Rotor speed at full command, rad/s.
    m_motor : float
        Mass of one motor+propeller assembly, kg (point mass at arm tip).
    mu_arm : float
        Arm linear density, kg/m (slender rod from origin to motor).
    m_fc : float
        Flight-controller stack mass, kg.
    fc_dims : tuple of float
        Stack dimensions (x, y, z) in m; used for its inertia cuboid.
    prop_radius : float
        Propeller disc radius, m.
    clearance_margin : float
        Minimum allowed gap between two propeller discs, m. The default is
        chosen so a square quad with 0.110 m arms sits exactly at the legal
        minimum spacing (0.110*sqrt(2) - 2*prop_radius, rounded down a few
        ulps so that layout decodes without rescaling).
    gravity : float
        Gravitational acceleration, m/s^2.
    """

    k_f: float = 2.4e-6
    k_m: float = 3.84e-8
    omega_max: float = 2500.0
    m_motor: float = 0.035
    mu_arm: float = 0.10
    m_fc: float = 0.250
    fc_dims: tuple[float, float, float] = (0.105, 0.035, 0.030)
    prop_radius: float = 0.0635
    clearance_margin: float = 0.02856349186104044
    gravity: float = 9.81

    def __post_init__(self) -> None:
        for name in ("k_f", "k_m", "omega_max", "m_motor", "mu_arm", "m_fc",
                     "prop_radius", "gravity"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be positive")
        if self.clearance_margin < 0.0:
            raise ValueError("clearance_margin must be non-negative")
        if len(self.fc_dims) != 3 or any(d <= 0.0 for d in self.fc_dims):
            raise ValueError("fc_dims must be three positive lengths")
        object.__setattr__(self, "fc_dims", tuple(float(d) for d in self.fc_dims))

    @property
    def max_thrust(self) -> float:
        """Thrust of one rotor at full command, N."""
        return self.k_f * self.omega_max**2

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_dict(cls, data: dict) -> "PhysicalParams":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown physical parameter(s): {sorted(unknown)}")
        kwargs = dict(data)
        if "fc_dims" in kwargs:
            kwargs["fc_dims"] = tuple(kwargs["fc_dims"])
        return cls(**kwargs)


DEFAULT_PARAMS = PhysicalParams()

# Feasibility tolerance on hover constraint residuals (N/kg and N*m/(kg*m^2)
# scales; compared against gravity ~ 9.81).
TOL_EQ = 1e-6
