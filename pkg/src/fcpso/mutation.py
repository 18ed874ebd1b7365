"""Turbulence operator: polynomial mutation on a random slice of the swarm."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["MutationConfig", "polynomial_mutate", "apply_turbulence"]


@dataclass(frozen=True)
class MutationConfig:
    distribution_index: float = 20.0
    per_variable_probability: float | None = None  # None -> 1/n
    particle_fraction: float = 0.15

    def __post_init__(self) -> None:
        if self.distribution_index <= 0.0:
            raise ValueError(f"distribution_index must be > 0, got {self.distribution_index!r}")
        p = self.per_variable_probability
        if p is not None and not 0.0 <= p <= 1.0:
            raise ValueError(f"per_variable_probability must lie in [0, 1], got {p!r}")
        if not 0.0 <= self.particle_fraction <= 1.0:
            raise ValueError(f"particle_fraction must lie in [0, 1], got {self.particle_fraction!r}")


def polynomial_mutate(
    x: np.ndarray,
    lower: np.ndarray,
    upper: np.ndarray,
    cfg: MutationConfig,
    rng: np.random.Generator,
) -> np.ndarray:
    """Polynomial mutation with distribution index eta, clamped to bounds.

    Each variable mutates independently with per_variable_probability
    (default 1/n).  The perturbation is symmetric: an internal draw of
    u = 1/2 leaves the variable unchanged.
    """
    x = np.asarray(x, dtype=float)
    n = x.shape[0]
    prob = cfg.per_variable_probability if cfg.per_variable_probability is not None else 1.0 / n
    out = x.copy()
    if prob == 0.0:
        return out
    eta = cfg.distribution_index
    mut_pow = 1.0 / (eta + 1.0)
    picked = np.flatnonzero(rng.random(n) < prob)
    for i in picked:
        lo, hi = lower[i], upper[i]
        if hi <= lo:
            continue
        u = rng.random()
        d1 = (x[i] - lo) / (hi - lo)
        d2 = (hi - x[i]) / (hi - lo)
        if u <= 0.5:
            val = 2.0 * u + (1.0 - 2.0 * u) * (1.0 - d1) ** (eta + 1.0)
            dq = val**mut_pow - 1.0
        else:
            val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * (1.0 - d2) ** (eta + 1.0)
            dq = 1.0 - val**mut_pow
        out[i] = min(max(x[i] + dq * (hi - lo), lo), hi)
    return out


def apply_turbulence(swarm, bounds, cfg: MutationConfig, rng: np.random.Generator) -> None:
    """Mutate the positions of a random particle_fraction of the swarm in
    place; velocities and momenta are untouched."""
    if cfg.particle_fraction == 0.0:
        return
    for p in swarm:
        if rng.random() < cfg.particle_fraction:
            p.position = polynomial_mutate(p.position, bounds.lower, bounds.upper, cfg, rng)
