"""File formats: run configs, design files, run directories, CSV, plots.

Formats (all JSON unless noted):

* run config: one flat object; any subset of EvolutionConfig and
  PhysicalParams fields by name. Unknown keys are rejected.
* design file: {"genotype": [41 floats]} or {"props": [{...}, ...]} plus an
  optional "params" object of PhysicalParams overrides. Propeller objects
  carry arm_length, arm_angle, inclination, azimuth, direction.
* run directory: manifest.json, stats.jsonl (one record per generation),
  population.json, front.json.
* front CSV: id, n_props, alpha, lambda, size, hover_class, gene00..gene40,
  floats in shortest round-trip form so identical runs export identical
  bytes.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict
from pathlib import Path

import numpy as np

from .dynamics import effectiveness, mass_properties
from .evolve import EvolutionConfig, GenerationStats, Individual, RunRecord
from .genome import (
    GENE_COUNT,
    InvalidLayoutError,
    Phenotype,
    PropellerSpec,
    decode,
    prop_count_from_gene,
    resolve_collisions,
)
from .hover import HoverClass, classify_hover
from .objectives import maneuverability, planform_size, thrust_to_weight
from .params import PhysicalParams

AXIS_NAMES = ("alpha", "lambda", "size")


class ConfigError(ValueError):
    """A config or design file failed validation."""


def _read_json(path: Path) -> dict:
    try:
        text = path.read_text()
    except OSError as exc:
        raise FileNotFoundError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: top level must be an object")
    return data


def load_config(path: str | Path) -> EvolutionConfig:
    """Read a flat run-config file; physical parameters land in .params."""
    data = _read_json(Path(path))
    evo_fields = set(EvolutionConfig.__dataclass_fields__) - {"params"}
    par_fields = set(PhysicalParams.__dataclass_fields__)
    unknown = set(data) - evo_fields - par_fields
    if unknown:
        raise ConfigError(f"unknown config key(s): {sorted(unknown)}")
    try:
        params = PhysicalParams.from_dict(
            {k: v for k, v in data.items() if k in par_fields}
        )
        config = EvolutionConfig(
            **{k: v for k, v in data.items() if k in evo_fields}, params=params
        )
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc
    return config


def load_design(path: str | Path) -> tuple[np.ndarray | None, Phenotype | None, PhysicalParams]:
    """Read a design file; returns (genotype, phenotype, params).

    Exactly one of genotype/phenotype is non-None. A phenotype built from an
    explicit propeller list is collision-resolved with the file's params.
    """
    data = _read_json(Path(path))
    unknown = set(data) - {"genotype", "props", "params"}
    if unknown:
        raise ConfigError(f"unknown design key(s): {sorted(unknown)}")
    if ("genotype" in data) == ("props" in data):
        raise ConfigError("design file needs exactly one of 'genotype' or 'props'")
    try:
        params = PhysicalParams.from_dict(data.get("params", {}))
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc
    if "genotype" in data:
        geno = np.asarray(data["genotype"], dtype=float)
        if geno.shape != (GENE_COUNT,):
            raise ConfigError(f"genotype must hold {GENE_COUNT} numbers")
        return geno, None, params
    prop_fields = {"arm_length", "arm_angle", "inclination", "azimuth", "direction"}
    props = []
    for i, entry in enumerate(data["props"]):
        if not isinstance(entry, dict) or set(entry) != prop_fields:
            raise ConfigError(f"props[{i}] must carry exactly {sorted(prop_fields)}")
        if entry["direction"] not in ("CCW", "CW"):
            raise ConfigError(f"props[{i}].direction must be 'CCW' or 'CW'")
        props.append(PropellerSpec(**entry))
    if len(props) < 1:
        raise ConfigError("props list is empty")
    phenotype = resolve_collisions(
        Phenotype(props=tuple(props), scale_applied=1.0), params
    )
    return None, phenotype, params


def phenotype_to_dict(ph: Phenotype) -> dict:
    return {
        "scale_applied": ph.scale_applied,
        "props": [asdict(p) for p in ph.props],
    }


def design_report(ph: Phenotype, params: PhysicalParams) -> dict:
    """Full single-design evaluation: mass properties, trim, objectives."""
    mp = mass_properties(ph, params)
    mix = effectiveness(ph, mp, params)
    hover_class, trim = classify_hover(mix, params.gravity)
    alpha = (
        thrust_to_weight(mix.b_f, trim.eta, params.gravity)
        if hover_class is not HoverClass.NONE
        else 0.0
    )
    return {
        "n_props": ph.n,
        "scale_applied": ph.scale_applied,
        "mass": mp.total_mass,
        "cg": [float(v) for v in mp.cg],
        "inertia_diag": [float(v) for v in np.diag(mp.inertia)],
        "hover_class": hover_class.value,
        "eta": [float(v) for v in trim.eta],
        "residuals": {
            "thrust": trim.thrust_residual,
            "moment": trim.moment_residual,
            "spin": trim.spin_residual,
        },
        "alpha": alpha,
        "lambda": maneuverability(mix.b_m),
        "size": planform_size(ph),
    }


def _objectives_dict(ind: Individual) -> dict:
    o = ind.objectives
    residual = o.hover_residual
    return {
        "alpha": o.thrust_to_weight,
        "lambda": o.maneuverability,
        "size": o.hull_area,
        "hover_class": "invalid" if o.invalid else o.hover_class.value,
        "residual": residual if np.isfinite(residual) else None,
        "invalid": o.invalid,
    }


def _individual_to_dict(ind: Individual, idx: int, params: PhysicalParams) -> dict:
    try:
        phenotype = phenotype_to_dict(decode(ind.genes, params))
    except InvalidLayoutError:
        phenotype = None
    return {
        "id": idx,
        "genes": [float(g) for g in ind.genes],
        "rank": ind.rank,
        "phenotype": phenotype,
        "objectives": _objectives_dict(ind),
    }


def save_run(
    out_dir: str | Path,
    record: RunRecord,
    threads: int,
    wall_time_s: float,
) -> Path:
    """Write manifest, per-generation stats, population, and front files."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    config_dict = asdict(record.config)
    params_dict = config_dict.pop("params")
    manifest = {
        "config": config_dict,
        "params": params_dict,
        "threads": threads,
        "wall_time_s": wall_time_s,
        "created_unix": time.time(),
        "format_version": 1,
    }
    params = record.config.params
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    with (out / "stats.jsonl").open("w") as fh:
        for stats in record.stats:
            fh.write(json.dumps(asdict(stats)) + "\n")
    (out / "population.json").write_text(
        json.dumps(
            [
                _individual_to_dict(ind, i, params)
                for i, ind in enumerate(record.population)
            ],
            indent=2,
        )
        + "\n"
    )
    (out / "front.json").write_text(
        json.dumps(
            [_individual_to_dict(ind, i, params) for i, ind in enumerate(record.front)],
            indent=2,
        )
        + "\n"
    )
    return out


def load_front(run_dir: str | Path) -> list[dict]:
    """Read front.json rows from a run directory."""
    path = Path(run_dir) / "front.json"
    if not path.is_file():
        raise FileNotFoundError(f"no front.json under {run_dir}")
    rows = json.loads(path.read_text())
    if not isinstance(rows, list):
        raise ConfigError(f"{path}: expected a list of designs")
    return rows


def load_stats(run_dir: str | Path) -> list[dict]:
    """Read stats.jsonl rows from a run directory."""
    path = Path(run_dir) / "stats.jsonl"
    if not path.is_file():
        raise FileNotFoundError(f"no stats.jsonl under {run_dir}")
    return [json.loads(line) for line in path.read_text().splitlines() if line]


def front_to_csv(rows: list[dict]) -> str:
    """Render front rows to CSV with shortest round-trip float formatting."""
    buf = io.StringIO()
    gene_cols = [f"gene{i:02d}" for i in range(GENE_COUNT)]
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["id", "n_props", "alpha", "lambda", "size", "hover_class", *gene_cols])
    for row in rows:
        o = row["objectives"]
        genes = row["genes"]
        writer.writerow(
            [
                row["id"],
                prop_count_from_gene(genes[0]),
                repr(float(o["alpha"])),
                repr(float(o["lambda"])),
                repr(float(o["size"])),
                o["hover_class"],
                *[repr(float(g)) for g in genes],
            ]
        )
    return buf.getvalue()


def front_to_json(rows: list[dict]) -> str:
    return json.dumps(rows, indent=2) + "\n"


def plot_front(
    rows: list[dict],
    axes: tuple[str, str],
    out_path: str | Path,
    baseline: dict | None = None,
) -> None:
    """Scatter the front on two objective axes into a vector-graphics file.

    Points are colored by propeller count; ``baseline`` (a dict with alpha,
    lambda, size) is drawn as a black x when given.
    """
    for name in axes:
        if name not in AXIS_NAMES:
            raise ConfigError(f"unknown axis '{name}'; choose from {AXIS_NAMES}")
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    labels = {
        "alpha": "thrust-to-weight (g)",
        "lambda": "maneuverability (rad/s^2)^2",
        "size": "hull area (m^2)",
    }
    fig, ax = plt.subplots(figsize=(5.2, 4))
    counts = sorted({prop_count_from_gene(row["genes"][0]) for row in rows})
    cmap = plt.get_cmap("viridis")
    for i, n in enumerate(counts):
        sub = [r for r in rows if prop_count_from_gene(r["genes"][0]) == n]
        ax.scatter(
            [r["objectives"][axes[0]] for r in sub],
            [r["objectives"][axes[1]] for r in sub],
            s=20,
            color=cmap(i / max(1, len(counts) - 1)),
            label=f"{n} props",
            alpha=0.85,
        )
    if baseline is not None:
        ax.scatter(
            [baseline[axes[0]]],
            [baseline[axes[1]]],
            marker="x",
            s=70,
            color="black",
            label="baseline",
        )
    ax.set_xlabel(labels[axes[0]])
    ax.set_ylabel(labels[axes[1]])
    ax.set_title("final front")
    ax.grid(True, linewidth=0.3, alpha=0.5)
    ax.legend(fontsize=8, framealpha=0.6)
    fig.tight_layout()
    fig.savefig(out_path)
    plt.close(fig)


def load_manifest(run_dir: str | Path) -> dict:
    """Read manifest.json from a run directory."""
    path = Path(run_dir) / "manifest.json"
    if not path.is_file():
        raise FileNotFoundError(f"no manifest.json under {run_dir}")
    return json.loads(path.read_text())
