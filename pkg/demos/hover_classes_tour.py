"""Tour the three hover classes with one design each.

Static hover needs thrust to balance gravity with zero net moment;
spinning hover relaxes that to "net moment parallel to net force", letting
the craft rotate steadily about the shared axis while it holds altitude;
everything else cannot hover at all.

* the stock quad balances exactly -> static
* a quad whose rotors all spin the same way cannot null its drag torque,
  but yawing steadily about +z is fine -> spinning
* the same geometry with rotors too weak to lift the airframe -> none

Run: python3 demos/hover_classes_tour.py
"""

import dataclasses

import numpy as np

from morphevo import DEFAULT_PARAMS
from morphevo.dynamics import effectiveness, mass_properties
from morphevo.genome import PropellerSpec, Phenotype, quadcopter_baseline
from morphevo.hover import classify_hover


def inspect(title: str, ph: Phenotype, params) -> None:
    mp = mass_properties(ph, params)
    mix = effectiveness(ph, mp, params)
    hover_class, trim = classify_hover(mix, params.gravity)
    f = mix.b_f @ trim.eta
    m = mix.b_m @ trim.eta
    print(f"--- {title}")
    print(f"  class    {hover_class.value}")
    print(f"  command  {np.array2string(trim.eta, precision=4)}")
    print(f"  |f| - g  {np.linalg.norm(f) - params.gravity:+.2e} m/s^2")
    print(f"  |m|      {np.linalg.norm(m):.2e} rad/s^2")
    print(f"  |f x m|  {np.linalg.norm(np.cross(f, m)):.2e}")
    print()


params = DEFAULT_PARAMS
baseline = quadcopter_baseline()
inspect("stock quad: alternating spin directions", baseline, params)

same_spin = Phenotype(
    props=tuple(
        PropellerSpec(p.arm_length, p.arm_angle, p.inclination, p.azimuth, "CCW")
        for p in baseline.props
    ),
    scale_applied=1.0,
)
inspect("same geometry, all rotors CCW", same_spin, params)

# a quarter of the rotor speed gives 1/16 of the thrust: 3.75 N total
# against a 4.26 N weight
weak = dataclasses.replace(params, omega_max=params.omega_max / 4.0)
inspect("all-CCW quad with quarter-speed rotors", same_spin, weak)

print("note: the all-CCW craft hovers by rotating about +z; its drag")
print("torques cannot cancel, but they can align with the net thrust.")
