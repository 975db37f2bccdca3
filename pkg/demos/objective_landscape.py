"""Sweep simple design families to see how the objectives trade off.

Two one-dimensional slices through design space:

1. Arm length on a square quad. Longer arms buy roll/pitch torque arm but
   cost inertia (growing with l^2 for tip masses plus the arm rod itself),
   so the per-rotor angular acceleration peaks at a finite arm length —
   the angular-acceleration diagnostic makes that visible directly.

2. Propeller count on minimum-size regular rings. More rotors add thrust
   faster than they add mass, so thrust-to-weight keeps climbing, while
   the ring radius (and with it hull area) must grow to keep the discs
   legally separated.

Writes demos_landscape.svg next to the working directory.

Run: python3 demos/objective_landscape.py
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from morphevo import DEFAULT_PARAMS
from morphevo.dynamics import angular_accel_diagnostic, effectiveness, mass_properties
from morphevo.genome import Phenotype, PropellerSpec, resolve_collisions
from morphevo.objectives import planform_size, thrust_to_weight

params = DEFAULT_PARAMS

# --- slice 1: the angular-acceleration kernel over arm length
lengths = np.linspace(0.02, 0.5, 400)
kernel = np.array([angular_accel_diagnostic(l, params) for l in lengths])
best = lengths[np.argmax(kernel)]
print(f"angular-acceleration kernel peaks at l = {best:.3f} m")

# --- slice 2: regular n-rings at the smallest legal radius
counts = range(4, 9)
alphas, areas = [], []
for n in counts:
    ring = Phenotype(
        props=tuple(
            PropellerSpec(0.1, -180.0 + 360.0 * k / n, 0.0, 0.0,
                          "CCW" if k % 2 == 0 else "CW")
            for k in range(n)
        ),
        scale_applied=1.0,
    )
    ring = resolve_collisions(ring, params)  # stretch to legal spacing
    mp = mass_properties(ring, params)
    mix = effectiveness(ring, mp, params)
    # uniform full throttle is the saturated trim for a flat ring
    alphas.append(thrust_to_weight(mix.b_f, np.ones(n), params.gravity))
    areas.append(planform_size(ring))
    print(
        f"{n}-ring: radius {ring.props[0].arm_length:.3f} m,"
        f" mass {mp.total_mass:.3f} kg,"
        f" alpha {alphas[-1]:.2f}, hull {areas[-1]:.4f} m^2"
    )

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))
ax1.plot(lengths, kernel)
ax1.axvline(best, linestyle="--", linewidth=0.8, color="gray")
ax1.set_xlabel("arm length (m)")
ax1.set_ylabel("per-rotor angular acceleration (rad/s^2)")
ax1.set_title("torque arm vs inertia")

ax2.plot(areas, alphas, marker="o")
for n, x, y in zip(counts, areas, alphas):
    ax2.annotate(f" {n}", (x, y))
ax2.set_xlabel("hull area (m^2)")
ax2.set_ylabel("thrust-to-weight (g)")
ax2.set_title("minimum-size rings, 4-8 rotors")

fig.tight_layout()
fig.savefig("demos_landscape.svg")
print("wrote demos_landscape.svg")
