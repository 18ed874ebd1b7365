"""The generation loop: initialize, move, mutate, evaluate, archive, remember.

One run is fully determined by (problem, config, seed).  Termination is
either an evaluation budget or reaching a fraction of a reference
hypervolume, whichever comes first.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace

import numpy as np

from .archive import ArchiveEntry, ExternalArchive
from .indicators import hypervolume
from .mutation import MutationConfig, apply_turbulence
from .problems import ProblemInstance
from .swarm import (
    DynamicsConfig,
    compute_speed_em,
    compute_speed_smpso,
    initialize_swarm,
    update_pbest,
    update_position,
)

__all__ = ["RunConfig", "RunResult", "run", "run_until_hv"]


@dataclass(frozen=True)
class RunConfig:
    dynamics: DynamicsConfig = field(default_factory=DynamicsConfig)
    mutation: MutationConfig = field(default_factory=MutationConfig)
    max_evaluations: int = 25_000
    archive_capacity: int = 100
    hv_target_fraction: float | None = None  # None -> pure budget termination
    reference_hv: float | None = None  # None -> problem.reference_hv
    record_interval: int = 0  # generations between hv-trace samples (0 = off)

    def __post_init__(self) -> None:
        if self.max_evaluations < self.dynamics.swarm_size:
            raise ValueError("max_evaluations must cover at least one swarm evaluation")
        if self.hv_target_fraction is not None and not 0.0 <= self.hv_target_fraction <= 1.0:
            raise ValueError(f"hv_target_fraction must lie in [0, 1], got {self.hv_target_fraction!r}")
        if self.record_interval < 0:
            raise ValueError("record_interval must be >= 0")


@dataclass
class RunResult:
    problem: str
    variant: str
    scheme: tuple[float, float, float, float]
    seed: int
    front_objectives: np.ndarray
    front_positions: np.ndarray
    evaluations_used: int
    hv_trace: list[tuple[int, float]]
    wall_time: float

    @property
    def front_size(self) -> int:
        return self.front_objectives.shape[0]


def run(problem: ProblemInstance, cfg: RunConfig, seed: int | None = None) -> RunResult:
    """Execute one optimization run and return the archive as the front."""
    t0 = time.perf_counter()
    if seed is None:
        seed = cfg.dynamics.seed
    rng = np.random.default_rng(seed)
    dyn = cfg.dynamics
    bounds = problem.bounds

    hv_mode = cfg.hv_target_fraction is not None
    hv_target = None
    if hv_mode:
        reference_hv = cfg.reference_hv if cfg.reference_hv is not None else problem.reference_hv
        if reference_hv is None:
            raise ValueError(
                f"hv-target termination needs a reference hypervolume, and {problem.name} "
                "has none; set RunConfig.reference_hv"
            )
        hv_target = cfg.hv_target_fraction * reference_hv

    swarm = initialize_swarm(problem, dyn, rng)
    archive = ExternalArchive(cfg.archive_capacity)
    for p in swarm:
        archive.try_insert(ArchiveEntry(p.position.copy(), p.pbest_objectives.copy()))
    evaluations = dyn.swarm_size

    trace: list[tuple[int, float]] = []

    def record() -> float:
        hv = hypervolume(archive.objectives_array(), problem.hv_reference_point)
        trace.append((evaluations, hv))
        return hv

    generation = 0
    done = False
    if hv_mode and record() >= hv_target:
        done = True

    while not done and evaluations + dyn.swarm_size <= cfg.max_evaluations:
        em = dyn.variant != "smpso"
        for p in swarm:
            leader = archive.select_leader(rng).position
            if em:
                p.velocity, p.momentum = compute_speed_em(p, leader, dyn, rng, bounds)
            else:
                p.velocity = compute_speed_smpso(p, leader, dyn, rng, bounds)
            update_position(p, bounds)
        apply_turbulence(swarm, bounds, cfg.mutation, rng)
        objectives = [problem.evaluate(p.position) for p in swarm]
        evaluations += dyn.swarm_size
        for p, y in zip(swarm, objectives):
            archive.try_insert(ArchiveEntry(p.position.copy(), np.asarray(y, dtype=float)))
        for p, y in zip(swarm, objectives):
            update_pbest(p, y, rng)
        generation += 1

        if hv_mode:
            if record() >= hv_target:
                done = True
        elif cfg.record_interval and generation % cfg.record_interval == 0:
            record()

    return RunResult(
        problem=problem.name,
        variant=dyn.variant,
        scheme=dyn.scheme.as_tuple(),
        seed=seed,
        front_objectives=archive.objectives_array().copy(),
        front_positions=archive.positions_array(),
        evaluations_used=evaluations,
        hv_trace=trace,
        wall_time=time.perf_counter() - t0,
    )


def run_until_hv(
    problem: ProblemInstance,
    cfg: RunConfig,
    target_fraction: float = 0.95,
    seed: int | None = None,
) -> RunResult:
    """Run until the archive hypervolume reaches target_fraction of the
    reference hypervolume (or the budget runs out)."""
    return run(problem, replace(cfg, hv_target_fraction=target_fraction), seed)
