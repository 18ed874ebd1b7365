"""WFG test functions 1-9.

Each problem maps z in [0, 2], [0, 4], ..., [0, 2n] through a chain of
shift/bias/reduction transformations onto underlying parameters in
[0, 1], then applies a shape function scaled by S_j = 2j.  Position
parameters k = 2(m-1) and distance parameters l = 20 by default.
"""

from __future__ import annotations

import numpy as np

__all__ = ["wfg", "wfg_bounds", "wfg_dimension", "WFG_DISTANCE_VARS"]

WFG_DISTANCE_VARS = 20


def wfg_position_vars(m: int) -> int:
    return 2 * (m - 1)


def wfg_dimension(m: int, l: int = WFG_DISTANCE_VARS) -> int:
    return wfg_position_vars(m) + l


def wfg_bounds(m: int, l: int = WFG_DISTANCE_VARS) -> tuple[np.ndarray, np.ndarray]:
    n = wfg_dimension(m, l)
    upper = 2.0 * np.arange(1, n + 1, dtype=float)
    return np.zeros(n), upper


def _clip01(y):
    return np.clip(y, 0.0, 1.0)


# --- transformations --------------------------------------------------------


def _s_linear(y, a):
    return _clip01(np.abs(y - a) / np.abs(np.floor(a - y) + a))


def _s_deceptive(y, a, b, c):
    t1 = np.floor(y - a + b) * (1.0 - c + (a - b) / b) / (a - b)
    t2 = np.floor(a + b - y) * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b)
    return _clip01(1.0 + (np.abs(y - a) - b) * (t1 + t2 + 1.0 / b))


def _s_multimodal(y, a, b, c):
    t1 = np.abs(y - c) / (2.0 * (np.floor(c - y) + c))
    t2 = (4.0 * a + 2.0) * np.pi * (0.5 - t1)
    return _clip01((1.0 + np.cos(t2) + 4.0 * b * t1 * t1) / (b + 2.0))


def _b_flat(y, a, b, c):
    out = (
        a
        + np.minimum(0.0, np.floor(y - b)) * a * (b - y) / b
        - np.minimum(0.0, np.floor(c - y)) * (1.0 - a) * (y - c) / (1.0 - c)
    )
    return _clip01(out)


def _b_poly(y, alpha):
    return _clip01(y**alpha)


def _b_param(y, u, a, b, c):
    v = a - (1.0 - 2.0 * u) * np.abs(np.floor(0.5 - u) + a)
    return _clip01(y ** (b + (c - b) * v))


def _r_sum(y, w):
    return float(np.dot(y, w) / np.sum(w))


def _r_nonsep(y, a):
    n = y.shape[0]
    total = 0.0
    for j in range(n):
        total += y[j]
        for k in range(a - 1):
            total += abs(y[j] - y[(j + k + 1) % n])
    half = np.ceil(a / 2.0)
    return float(np.clip(total / ((n / a) * half * (1.0 + 2.0 * a - 2.0 * half)), 0.0, 1.0))


def _grouped_r_sum(y, m, k, w=None, tail_end=None):
    """Reduce position groups of size k/(m-1) plus the distance tail."""
    if w is None:
        w = np.ones(y.shape[0])
    gap = k // (m - 1)
    end = y.shape[0] if tail_end is None else tail_end
    t = [_r_sum(y[i * gap : (i + 1) * gap], w[i * gap : (i + 1) * gap]) for i in range(m - 1)]
    t.append(_r_sum(y[k:end], w[k:end]))
    return np.array(t)


# --- shapes -----------------------------------------------------------------


def _shape_linear(x, m):
    M = x.shape[0]  # x has M underlying position params (length m-1)
    out = np.empty(m)
    for j in range(1, m + 1):
        if j == 1:
            out[0] = np.prod(x)
        elif j < m:
            out[j - 1] = np.prod(x[: m - j]) * (1.0 - x[m - j])
        else:
            out[m - 1] = 1.0 - x[0]
    return _clip01(out)


def _shape_convex(x, m):
    out = np.empty(m)
    for j in range(1, m + 1):
        if j == 1:
            out[0] = np.prod(1.0 - np.cos(x * np.pi / 2.0))
        elif j < m:
            out[j - 1] = np.prod(1.0 - np.cos(x[: m - j] * np.pi / 2.0)) * (
                1.0 - np.sin(x[m - j] * np.pi / 2.0)
            )
        else:
            out[m - 1] = 1.0 - np.sin(x[0] * np.pi / 2.0)
    return _clip01(out)


def _shape_concave(x, m):
    out = np.empty(m)
    for j in range(1, m + 1):
        if j == 1:
            out[0] = np.prod(np.sin(x * np.pi / 2.0))
        elif j < m:
            out[j - 1] = np.prod(np.sin(x[: m - j] * np.pi / 2.0)) * np.cos(
                x[m - j] * np.pi / 2.0
            )
        else:
            out[m - 1] = np.cos(x[0] * np.pi / 2.0)
    return _clip01(out)


def _shape_mixed(x1, alpha, a):
    aux = 2.0 * a * np.pi
    return _clip01((1.0 - x1 - np.cos(aux * x1 + np.pi / 2.0) / aux) ** alpha)


def _shape_disconnected(x1, alpha, beta, a):
    return _clip01(1.0 - x1**alpha * np.cos(a * np.pi * x1**beta) ** 2)


# --- the nine problems ------------------------------------------------------


def _underlying(t, m, degenerate=False):
    """Map the reduced vector t (length m) to underlying params x."""
    a = np.ones(m - 1)
    if degenerate:
        a[1:] = 0.0
    x = np.maximum(t[-1], a) * (t[:-1] - 0.5) + 0.5
    return x, t[-1]


def wfg(index: int, m: int, z: np.ndarray, l: int = WFG_DISTANCE_VARS) -> np.ndarray:
    """Evaluate WFG<index> with m objectives at z (z_i in [0, 2i])."""
    if not 1 <= index <= 9:
        raise ValueError(f"WFG index must be 1..9, got {index!r}")
    if index in (2, 3) and l % 2 != 0:
        raise ValueError(f"WFG{index} needs an even number of distance variables, got {l}")
    k = wfg_position_vars(m)
    n = k + l
    z = np.asarray(z, dtype=float)
    if z.shape[0] != n:
        raise ValueError(f"WFG{index} with {m} objectives expects {n} variables, got {z.shape[0]}")
    s = 2.0 * np.arange(1, m + 1, dtype=float)
    y = z / (2.0 * np.arange(1, n + 1, dtype=float))

    if index == 1:
        y = y.copy()
        y[k:] = _s_linear(y[k:], 0.35)
        y[k:] = _b_flat(y[k:], 0.8, 0.75, 0.85)
        y = _b_poly(y, 0.02)
        t = _grouped_r_sum(y, m, k, w=2.0 * np.arange(1, n + 1, dtype=float))
        x, x_last = _underlying(t, m)
        h = np.append(_shape_convex(x, m)[: m - 1], _shape_mixed(x[0], 1.0, 5.0))
    elif index in (2, 3):
        y = y.copy()
        y[k:] = _s_linear(y[k:], 0.35)
        pieces = [y[:k]]
        for i in range(l // 2):
            pieces.append(_r_nonsep(y[k + 2 * i : k + 2 * i + 2], 2))
        y = np.append(pieces[0], pieces[1:])
        t = _grouped_r_sum(y, m, k)
        if index == 2:
            x, x_last = _underlying(t, m)
            h = np.append(_shape_convex(x, m)[: m - 1], _shape_disconnected(x[0], 1.0, 1.0, 5.0))
        else:
            x, x_last = _underlying(t, m, degenerate=True)
            h = _shape_linear(x, m)
    elif index == 4:
        y = _s_multimodal(y, 30.0, 10.0, 0.35)
        t = _grouped_r_sum(y, m, k)
        x, x_last = _underlying(t, m)
        h = _shape_concave(x, m)
    elif index == 5:
        y = _s_deceptive(y, 0.35, 0.001, 0.05)
        t = _grouped_r_sum(y, m, k)
        x, x_last = _underlying(t, m)
        h = _shape_concave(x, m)
    elif index == 6:
        y = y.copy()
        y[k:] = _s_linear(y[k:], 0.35)
        gap = k // (m - 1)
        t = np.array(
            [_r_nonsep(y[i * gap : (i + 1) * gap], gap) for i in range(m - 1)]
            + [_r_nonsep(y[k:], l)]
        )
        x, x_last = _underlying(t, m)
        h = _shape_concave(x, m)
    elif index == 7:
        y = y.copy()
        for i in range(k):
            u = _r_sum(y[i + 1 :], np.ones(n - i - 1))
            y[i] = _b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0)
        y[k:] = _s_linear(y[k:], 0.35)
        t = _grouped_r_sum(y, m, k)
        x, x_last = _underlying(t, m)
        h = _shape_concave(x, m)
    elif index == 8:
        y0 = y  # t1 is simultaneous: every u reads pre-transformation values
        y = y.copy()
        for i in range(k, n):
            u = _r_sum(y0[:i], np.ones(i))
            y[i] = _b_param(y0[i], u, 0.98 / 49.98, 0.02, 50.0)
        y[k:] = _s_linear(y[k:], 0.35)
        t = _grouped_r_sum(y, m, k)
        x, x_last = _underlying(t, m)
        h = _shape_concave(x, m)
    else:  # WFG9
        y = y.copy()
        for i in range(n - 1):
            u = _r_sum(y[i + 1 :], np.ones(n - i - 1))
            y[i] = _b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0)
        y[:k] = _s_deceptive(y[:k], 0.35, 0.001, 0.05)
        y[k:] = _s_multimodal(y[k:], 30.0, 95.0, 0.35)
        gap = k // (m - 1)
        t = np.array(
            [_r_nonsep(y[i * gap : (i + 1) * gap], gap) for i in range(m - 1)]
            + [_r_nonsep(y[k:], l)]
        )
        x, x_last = _underlying(t, m)
        h = _shape_concave(x, m)

    return x_last + s * h
