"""Shared fixtures: the desk-scale evolution runs used by the acceptance suite.

The two runs (same config and seed, MORPHO_THREADS=1 vs 8) are launched
through the installed CLI in subprocesses, exactly as a user would invoke
them, and are shared session-wide because each takes a few minutes.
"""

from __future__ import annotations

import json
import os
import subprocess
import sys
import time
from pathlib import Path

import pytest

DESK_CONFIG = {"pop_size": 100, "generations": 200, "seed": 1}


def _run_desk(tmp_path_factory, threads: int) -> Path:
    root = tmp_path_factory.mktemp(f"desk_t{threads}")
    cfg = root / "config.json"
    cfg.write_text(json.dumps(DESK_CONFIG))
    out = root / "run"
    env = dict(os.environ, MORPHO_THREADS=str(threads))
    start = time.perf_counter()
    proc = subprocess.run(
        [
            sys.executable,
            "-m",
            "morphevo.cli",
            "evolve",
            "--config",
            str(cfg),
            "--out",
            str(out),
        ],
        env=env,
        capture_output=True,
        text=True,
    )
    wall = time.perf_counter() - start
    if proc.returncode != 0:
        raise RuntimeError(
            f"desk run (threads={threads}) failed rc={proc.returncode}:\n"
            f"{proc.stderr[-2000:]}"
        )
    (root / "subprocess_wall_s").write_text(str(wall))
    return out


@pytest.fixture(scope="session")
def desk_run_serial(tmp_path_factory) -> Path:
    """Desk-scale run directory, single-threaded evaluation."""
    return _run_desk(tmp_path_factory, threads=1)


@pytest.fixture(scope="session")
def desk_run_parallel(tmp_path_factory) -> Path:
    """Same desk-scale run with an 8-worker evaluation pool."""
    return _run_desk(tmp_path_factory, threads=8)
