"""Benchmark problem registry: ZDT, DTLZ and WFG suites.

Every problem is exposed as a :class:`ProblemInstance` bundling the
evaluator, its box bounds, the canonical hypervolume reference point and
(where a closed form exists) a sampled theoretical front.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Callable

import numpy as np

from ..swarm import BoxBounds
from . import fronts
from .dtlz import DTLZ_DISTANCE_VARS, dtlz, dtlz_dimension
from .fronts import ZDT6_F1_MIN, theoretical_front
from .wfg import WFG_DISTANCE_VARS, wfg, wfg_bounds, wfg_dimension
from .zdt import ZDT_DIMENSIONS, zdt1, zdt2, zdt3, zdt4, zdt6

__all__ = [
    "ProblemInstance",
    "get_problem",
    "parse_problem_id",
    "available_problems",
    "load_reference_front",
    "theoretical_front",
    "ZDT6_F1_MIN",
    "ZDT_REFERENCE_HV",
]

_ZDT_EVALUATORS = {"zdt1": zdt1, "zdt2": zdt2, "zdt3": zdt3, "zdt4": zdt4, "zdt6": zdt6}

# Hypervolume of the continuum fronts against the canonical (2, 2)
# reference point.  zdt1/2/4 are analytic (11/3, 10/3); zdt3 and zdt6
# come from dense numeric sweeps of their front curves.
ZDT_REFERENCE_HV = {
    "zdt1": 11.0 / 3.0,
    "zdt2": 10.0 / 3.0,
    "zdt3": 4.817794798046633,
    "zdt4": 11.0 / 3.0,
    "zdt6": 3.045179727720758,
}


@dataclass(frozen=True)
class ProblemInstance:
    """An objective evaluator with its bounds and reference data."""

    name: str
    n_var: int
    n_obj: int
    bounds: BoxBounds
    evaluate: Callable[[np.ndarray], np.ndarray]
    reference_front: np.ndarray | None
    reference_hv: float | None
    hv_reference_point: np.ndarray


def _checked(name: str, bounds: BoxBounds, fn: Callable) -> Callable:
    lower, upper = bounds.lower, bounds.upper

    def evaluate(x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape != lower.shape:
            raise ValueError(f"{name} expects {lower.shape[0]} variables, got {x.shape}")
        if (x < lower).any() or (x > upper).any():
            raise ValueError(f"{name}: input outside box bounds")
        return fn(x)

    return evaluate


def available_problems() -> list[str]:
    return (
        sorted(_ZDT_EVALUATORS)
        + [f"dtlz{i}" for i in DTLZ_DISTANCE_VARS]
        + [f"wfg{i}" for i in range(1, 10)]
    )


def parse_problem_id(problem_id: str) -> tuple[str, int | None]:
    """Split "name" or "name:objectives" into (name, n_obj or None)."""
    if ":" in problem_id:
        name, _, m = problem_id.partition(":")
        return name.strip().lower(), int(m)
    return problem_id.strip().lower(), None


def _bundled_front(name: str, m: int) -> np.ndarray | None:
    ref = resources.files("fcpso").joinpath(f"data/fronts/{name}_{m}.csv")
    if not ref.is_file():
        return None
    with resources.as_file(ref) as path:
        return load_reference_front(path)


def _reference_front(name: str, m: int) -> np.ndarray | None:
    front = _bundled_front(name, m)
    if front is not None:
        return front
    try:
        return theoretical_front(name, m)
    except ValueError:
        return None


@lru_cache(maxsize=None)
def get_problem(name: str, n_obj: int | None = None, n_var: int | None = None) -> ProblemInstance:
    """Build a registered problem; n_obj/n_var fall back to the suite's
    canonical defaults."""
    name = name.lower()
    if name in _ZDT_EVALUATORS:
        if n_obj not in (None, 2):
            raise ValueError(f"{name} is bi-objective; got n_obj={n_obj!r}")
        n = n_var or ZDT_DIMENSIONS[name]
        if name == "zdt4":
            lower = np.full(n, -5.0)
            upper = np.full(n, 5.0)
            lower[0], upper[0] = 0.0, 1.0
        else:
            lower, upper = np.zeros(n), np.ones(n)
        bounds = BoxBounds(lower, upper)
        return ProblemInstance(
            name=name,
            n_var=n,
            n_obj=2,
            bounds=bounds,
            evaluate=_checked(name, bounds, _ZDT_EVALUATORS[name]),
            reference_front=_reference_front(name, 2),
            reference_hv=ZDT_REFERENCE_HV[name],
            hv_reference_point=np.array([2.0, 2.0]),
        )

    if name.startswith("dtlz"):
        index = int(name[4:])
        if index not in DTLZ_DISTANCE_VARS:
            raise ValueError(f"unknown problem {name!r}")
        m = n_obj or 3
        n = n_var or dtlz_dimension(index, m)
        bounds = BoxBounds(np.zeros(n), np.ones(n))
        return ProblemInstance(
            name=name,
            n_var=n,
            n_obj=m,
            bounds=bounds,
            evaluate=_checked(name, bounds, lambda x, _i=index, _m=m: dtlz(_i, _m, x)),
            reference_front=_reference_front(name, m),
            reference_hv=None,
            hv_reference_point=np.full(m, 2.0),
        )

    if name.startswith("wfg"):
        index = int(name[3:])
        if not 1 <= index <= 9:
            raise ValueError(f"unknown problem {name!r}")
        m = n_obj or 5
        if n_var is not None and n_var <= 2 * (m - 1):
            raise ValueError(f"{name} needs more than {2 * (m - 1)} variables for {m} objectives")
        l = (n_var - 2 * (m - 1)) if n_var is not None else WFG_DISTANCE_VARS
        lower, upper = wfg_bounds(m, l)
        bounds = BoxBounds(lower, upper)
        return ProblemInstance(
            name=name,
            n_var=wfg_dimension(m, l),
            n_obj=m,
            bounds=bounds,
            evaluate=_checked(name, bounds, lambda x, _i=index, _m=m, _l=l: wfg(_i, _m, x, _l)),
            reference_front=_reference_front(name, m),
            reference_hv=None,
            hv_reference_point=2.0 * np.arange(1, m + 1, dtype=float) + 1.0,
        )

    raise ValueError(f"unknown problem {name!r}; available: {', '.join(available_problems())}")


def load_reference_front(path) -> np.ndarray:
    """Read a front CSV (optional f1,...,fk header; one point per row).

    Malformed rows are rejected with their 1-based row number.
    """
    rows: list[list[float]] = []
    width = None
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            cells = [c.strip() for c in line.split(",")]
            if lineno == 1 and any(not _is_number(c) for c in cells):
                continue  # header row
            try:
                values = [float(c) for c in cells]
            except ValueError:
                raise ValueError(f"{path}: non-numeric field in row {lineno}") from None
            if width is None:
                width = len(values)
            elif len(values) != width:
                raise ValueError(
                    f"{path}: row {lineno} has {len(values)} columns, expected {width}"
                )
            rows.append(values)
    if not rows:
        raise ValueError(f"{path}: no data rows")
    return np.array(rows)


def _is_number(cell: str) -> bool:
    try:
        float(cell)
        return True
    except ValueError:
        return False
