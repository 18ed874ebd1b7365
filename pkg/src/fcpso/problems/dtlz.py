"""DTLZ test functions 1-7, scalable in the number of objectives.

Decision dimension follows the canonical convention n = m + p - 1 with
p = 5 (DTLZ1), 10 (DTLZ2-6) or 20 (DTLZ7) distance variables.
"""

from __future__ import annotations

import numpy as np

__all__ = ["dtlz", "DTLZ_DISTANCE_VARS", "dtlz_dimension"]

DTLZ_DISTANCE_VARS = {1: 5, 2: 10, 3: 10, 4: 10, 5: 10, 6: 10, 7: 20}


def dtlz_dimension(index: int, m: int) -> int:
    return m + DTLZ_DISTANCE_VARS[index] - 1


def _g_rastrigin(xm: np.ndarray) -> float:
    z = xm - 0.5
    return 100.0 * (xm.shape[0] + np.sum(z * z - np.cos(20.0 * np.pi * z)))


def _spherical(theta_like: np.ndarray, g: float, m: int) -> np.ndarray:
    # theta_like holds m-1 angles already scaled to [0, pi/2]
    f = np.full(m, 1.0 + g)
    cos = np.cos(theta_like)
    sin = np.sin(theta_like)
    for i in range(m):
        if m - 1 - i > 0:
            f[i] *= np.prod(cos[: m - 1 - i])
        if i > 0:
            f[i] *= sin[m - 1 - i]
    return f


def dtlz(index: int, m: int, x: np.ndarray) -> np.ndarray:
    """Evaluate DTLZ<index> with m objectives at x in [0,1]^n."""
    if index not in DTLZ_DISTANCE_VARS:
        raise ValueError(f"DTLZ index must be 1..7, got {index!r}")
    x = np.asarray(x, dtype=float)
    pos, xm = x[: m - 1], x[m - 1 :]

    if index == 1:
        g = _g_rastrigin(xm)
        f = np.full(m, 0.5 * (1.0 + g))
        for i in range(m):
            if m - 1 - i > 0:
                f[i] *= np.prod(pos[: m - 1 - i])
            if i > 0:
                f[i] *= 1.0 - pos[m - 1 - i]
        return f

    if index == 2:
        g = float(np.sum((xm - 0.5) ** 2))
        return _spherical(pos * (np.pi / 2.0), g, m)

    if index == 3:
        g = _g_rastrigin(xm)
        return _spherical(pos * (np.pi / 2.0), g, m)

    if index == 4:
        g = float(np.sum((xm - 0.5) ** 2))
        return _spherical(pos**100.0 * (np.pi / 2.0), g, m)

    if index in (5, 6):
        if index == 5:
            g = float(np.sum((xm - 0.5) ** 2))
        else:
            g = float(np.sum(xm**0.1))
        theta = np.empty(m - 1)
        if m > 1:
            theta[0] = pos[0] * (np.pi / 2.0)
            theta[1:] = (np.pi / (4.0 * (1.0 + g))) * (1.0 + 2.0 * g * pos[1:])
        return _spherical(theta, g, m)

    # DTLZ7
    g = 1.0 + 9.0 * np.sum(xm) / xm.shape[0]
    f = np.empty(m)
    f[: m - 1] = pos
    h = m - np.sum((pos / (1.0 + g)) * (1.0 + np.sin(3.0 * np.pi * pos)))
    f[m - 1] = (1.0 + g) * h
    return f
