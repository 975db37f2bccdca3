"""Walk through the full model evaluation of the reference quadcopter.

Builds the stock 220 mm square quad, derives its mass properties and
actuator effectiveness, solves the static hover trim, and reports the
three design objectives. Every number here has a closed form, which makes
this script a quick sanity check that the model is wired together
correctly:

* mass = 0.250 + 4 x (0.035 + 0.100 x 0.110) = 0.434 kg
* hover command = m g / (n T_max) = 0.434 x 9.81 / 60 = 0.0710
* thrust-to-weight = n T_max / (m g) = 14.09
* hull area = 2 l^2 = 0.0242 m^2 (square with circumradius l)

Run: python3 demos/baseline_report.py
"""

import numpy as np

from morphevo import DEFAULT_PARAMS
from morphevo.dynamics import effectiveness, mass_properties
from morphevo.genome import quadcopter_baseline
from morphevo.hover import classify_hover
from morphevo.objectives import maneuverability, planform_size, thrust_to_weight

params = DEFAULT_PARAMS
ph = quadcopter_baseline()

print("propellers (length m, angle deg, incline deg, azimuth deg, spin):")
for p in ph.props:
    print(
        f"  l={p.arm_length:.3f}  theta={p.arm_angle:+8.1f}"
        f"  phi={p.inclination:4.1f}  psi={p.azimuth:5.1f}  {p.direction}"
    )

mp = mass_properties(ph, params)
print(f"\ntotal mass      {mp.total_mass:.6f} kg")
print(f"center of mass  {np.array2string(mp.cg, precision=6)}")
print(f"inertia diag    {np.array2string(np.diag(mp.inertia), precision=9)} kg m^2")

mix = effectiveness(ph, mp, params)
print("\nforce effectiveness b_f (m/s^2 per unit command):")
print(np.array2string(mix.b_f, precision=4, suppress_small=True))
print("moment effectiveness b_m (rad/s^2 per unit command):")
print(np.array2string(mix.b_m, precision=4, suppress_small=True))

hover_class, trim = classify_hover(mix, params.gravity)
analytic = mp.total_mass * params.gravity / (4.0 * params.max_thrust)
print(f"\nhover class     {hover_class.value}")
print(f"trim command    {np.array2string(trim.eta, precision=6)}")
print(f"analytic value  {analytic:.6f} per motor")
print(f"residuals       thrust {trim.thrust_residual:.2e}"
      f"  moment {trim.moment_residual:.2e}")

alpha = thrust_to_weight(mix.b_f, trim.eta, params.gravity)
lam = maneuverability(mix.b_m)
area = planform_size(ph)
print(f"\nthrust-to-weight  {alpha:.6f}  (analytic {4 * params.max_thrust / (mp.total_mass * params.gravity):.6f})")
print(f"maneuverability   {lam:.2f} (rad/s^2)^2, weakest axis = yaw")
print(f"planform area     {area:.6f} m^2  (2 x 0.110^2 = {2 * 0.110**2:.6f})")
