"""Quality indicators: hypervolume, IGD, additive epsilon, spacing.

All indicators assume minimization.  Hypervolume is exact: a sweep for
two objectives and recursive slicing for three or more (exponential in
the objective count, fine at benchmark scale).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .archive import non_dominated_mask

logger = logging.getLogger(__name__)

__all__ = [
    "IndicatorReport",
    "hypervolume",
    "igd",
    "additive_epsilon",
    "spacing",
]


@dataclass(frozen=True)
class IndicatorReport:
    front_size: int
    reference_point: np.ndarray | None = None
    hv: float | None = None
    igd: float | None = None
    eps: float | None = None
    sp: float | None = None

    def as_lines(self) -> list[str]:
        out = [f"front_size={self.front_size}"]
        if self.reference_point is not None:
            out.append("reference_point=" + ",".join(f"{v:.17g}" for v in self.reference_point))
        for key in ("hv", "igd", "eps", "sp"):
            val = getattr(self, key)
            if val is not None:
                out.append(f"{key}={val:.17g}")
        return out


def hypervolume(front: np.ndarray, reference_point: np.ndarray) -> float:
    """Lebesgue measure of the union of boxes [point, reference].

    Points that do not strictly dominate the reference point are
    discarded first; an empty effective front has volume 0.
    """
    F = np.atleast_2d(np.asarray(front, dtype=float))
    r = np.asarray(reference_point, dtype=float)
    if F.shape[1] != r.shape[0]:
        raise ValueError(f"front has {F.shape[1]} objectives, reference point {r.shape[0]}")
    inside = np.all(F < r, axis=1)
    if not inside.all():
        logger.debug("hypervolume: discarding %d points outside the reference box",
                     int(np.count_nonzero(~inside)))
    F = F[inside]
    if F.shape[0] == 0:
        return 0.0
    F = F[non_dominated_mask(F)]
    if F.shape[1] == 2:
        return _hv_sweep_2d(F, r)
    return _hv_slice(F, r)


def _hv_sweep_2d(F: np.ndarray, r: np.ndarray) -> float:
    # non-dominated 2-D front: ascending f1 means strictly descending f2
    order = np.argsort(F[:, 0], kind="stable")
    f1 = F[order, 0]
    f2 = F[order, 1]
    widths = np.diff(np.append(f1, r[0]))
    return float(np.sum(widths * (r[1] - f2)))


def _hv_slice(F: np.ndarray, r: np.ndarray) -> float:
    """Slice along the last objective and recurse on the projections."""
    if F.shape[1] == 2:
        return _hv_sweep_2d(F, r)
    last = F[:, -1]
    levels = np.unique(last)
    edges = np.append(levels, r[-1])
    total = 0.0
    for i, z in enumerate(levels):
        thickness = edges[i + 1] - edges[i]
        if thickness <= 0.0:
            continue
        active = F[last <= z, :-1]
        active = active[non_dominated_mask(active)]
        total += thickness * _hv_slice(active, r[:-1])
    return total


def igd(front: np.ndarray, reference_front: np.ndarray) -> float:
    """Mean distance from each reference point to its nearest front point."""
    F = np.atleast_2d(np.asarray(front, dtype=float))
    R = np.atleast_2d(np.asarray(reference_front, dtype=float))
    _check_nonempty(F, R)
    d = np.sqrt(((R[:, None, :] - F[None, :, :]) ** 2).sum(axis=2))
    return float(d.min(axis=1).mean())


def additive_epsilon(front: np.ndarray, reference_front: np.ndarray) -> float:
    """Smallest shift c such that front - c weakly dominates the reference."""
    F = np.atleast_2d(np.asarray(front, dtype=float))
    R = np.atleast_2d(np.asarray(reference_front, dtype=float))
    _check_nonempty(F, R)
    diff = (F[None, :, :] - R[:, None, :]).max(axis=2)  # worst objective per (ref, front) pair
    return float(diff.min(axis=1).max())


def spacing(front: np.ndarray) -> float:
    """Standard deviation of nearest-neighbour Manhattan gaps along the front."""
    F = np.atleast_2d(np.asarray(front, dtype=float))
    n = F.shape[0]
    if n < 2:
        raise ValueError(f"spacing needs at least 2 points, got {n}")
    d = np.abs(F[:, None, :] - F[None, :, :]).sum(axis=2)
    np.fill_diagonal(d, np.inf)
    nearest = d.min(axis=1)
    mean = nearest.mean()
    return float(np.sqrt(np.sum((mean - nearest) ** 2) / (n - 1)))


def _check_nonempty(F: np.ndarray, R: np.ndarray) -> None:
    if F.shape[0] == 0 or R.shape[0] == 0:
        raise ValueError("front and reference front must be non-empty")
    if F.shape[1] != R.shape[1]:
        raise ValueError(f"objective counts differ: front {F.shape[1]}, reference {R.shape[1]}")
