"""Run a coffee-break evolution and plot its final front.

A population of 24 evolved for 15 generations is enough to watch the
mechanics work: the first front grows, hover-capable designs take over,
and the hypervolume ratchets up monotonically (elitism guarantees it
never slips back). Expect a couple of minutes of solver time.

Writes demos_front.svg; the full-size experiment lives behind the CLI
(`morphevo evolve`), not this script.

Run: python3 demos/small_evolution.py
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from morphevo import DEFAULT_PARAMS
from morphevo.dynamics import effectiveness, mass_properties
from morphevo.evolve import EvolutionConfig, evolve
from morphevo.genome import prop_count_from_gene, quadcopter_baseline
from morphevo.hover import classify_hover
from morphevo.objectives import maneuverability, planform_size, thrust_to_weight

config = EvolutionConfig(pop_size=24, generations=15, seed=11)
print(f"pop {config.pop_size}, {config.generations} generations, seed {config.seed}")

record = evolve(
    config,
    progress=lambda s: print(
        f"gen {s.generation:2d}  front {s.front_size:2d}"
        f"  hv {s.hypervolume:12.1f}"
        f"  classes {s.hover_classes}"
    ),
)

# baseline objectives for reference
ph = quadcopter_baseline()
mp = mass_properties(ph, DEFAULT_PARAMS)
mix = effectiveness(ph, mp, DEFAULT_PARAMS)
_, trim = classify_hover(mix, DEFAULT_PARAMS.gravity)
base_alpha = thrust_to_weight(mix.b_f, trim.eta, DEFAULT_PARAMS.gravity)
base_lambda = maneuverability(mix.b_m)
base_size = planform_size(ph)

print(f"\nfinal front ({len(record.front)} designs):")
print(f"{'props':>5} {'alpha':>7} {'lambda':>12} {'area':>8}  class")
for ind in record.front:
    o = ind.objectives
    print(
        f"{prop_count_from_gene(float(ind.genes[0])):>5}"
        f" {o.thrust_to_weight:7.2f} {o.maneuverability:12.1f}"
        f" {o.hull_area:8.4f}  {o.hover_class.value}"
    )

fig, ax = plt.subplots(figsize=(5.4, 4))
front = [ind.objectives for ind in record.front]
ax.scatter(
    [o.maneuverability for o in front],
    [o.thrust_to_weight for o in front],
    s=24,
    label="front",
)
ax.scatter([base_lambda], [base_alpha], marker="x", s=80, color="black",
           label="baseline quad")
ax.set_xlabel("maneuverability (rad/s^2)^2")
ax.set_ylabel("thrust-to-weight (g)")
ax.set_title(f"front after {config.generations} generations")
ax.legend()
fig.tight_layout()
fig.savefig("demos_front.svg")
print("wrote demos_front.svg")
