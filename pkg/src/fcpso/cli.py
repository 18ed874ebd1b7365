"""Command-line interface: solve, benchmark, fairness, profile, indicators.

Exit codes: 0 success, 1 usage/config error, 2 runtime failure.
"""

from __future__ import annotations

import argparse
import configparser
import sys
from dataclasses import replace
from importlib import resources
from pathlib import Path

import numpy as np

from . import io
from .experiments import ExperimentSpec, run_experiment, unfairness_profile
from .fairness import (
    ParameterScheme,
    activation_probability,
    monte_carlo_activation,
    scheme_for_unfairness,
    solve_fair_phi2,
    unfairness,
)
from .indicators import IndicatorReport, additive_epsilon, hypervolume, igd, spacing
from .mutation import MutationConfig
from .optimizer import RunConfig, run
from .problems import available_problems, get_problem, load_reference_front, parse_problem_id
from .swarm import VARIANTS, DynamicsConfig

__all__ = ["main"]


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# --- config files -----------------------------------------------------------

_RUN_KEYS = {
    "variant",
    "scheme",
    "seed",
    "inertia",
    "swarm_size",
    "archive_capacity",
    "max_evaluations",
    "velocity_init",
    "hv_target",
}
_MUTATION_KEYS = {"distribution_index", "per_variable_probability", "particle_fraction"}
_EXPERIMENT_KEYS = {
    "problems",
    "variants",
    "repetitions",
    "indicators",
    "base_seed",
    "max_evaluations",
    "swarm_size",
    "archive_capacity",
}
_SECTIONS = {"run": _RUN_KEYS, "mutation": _MUTATION_KEYS, "experiment": _EXPERIMENT_KEYS}


def load_config_file(path) -> dict[str, dict[str, str]]:
    """Parse a [section] key=value file, rejecting unknown sections/keys."""
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise UsageError(f"config file not found: {path}")
    out: dict[str, dict[str, str]] = {}
    for section in parser.sections():
        if section not in _SECTIONS:
            raise UsageError(f"{path}: unknown section [{section}]")
        allowed = _SECTIONS[section]
        for key, value in parser.items(section):
            if key not in allowed:
                raise UsageError(f"{path}: unknown key '{key}' in [{section}]")
            out.setdefault(section, {})[key] = value
    return out


def _parse_scheme(text: str) -> ParameterScheme:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise UsageError(f"--scheme expects 'phi1,phi2,beta1,beta2', got {text!r}")
    try:
        phi1, phi2, beta1, beta2 = (float(p) for p in parts)
        return ParameterScheme(phi1, phi2, beta1, beta2)
    except ValueError as exc:
        raise UsageError(f"invalid scheme {text!r}: {exc}") from None


def _parse_vector(text: str) -> np.ndarray:
    try:
        return np.array([float(p) for p in text.split(",")])
    except ValueError:
        raise UsageError(f"expected comma-separated numbers, got {text!r}") from None


def _mutation_from_config(section: dict[str, str]) -> MutationConfig:
    kwargs = {}
    if "distribution_index" in section:
        kwargs["distribution_index"] = float(section["distribution_index"])
    if "per_variable_probability" in section and section["per_variable_probability"]:
        kwargs["per_variable_probability"] = float(section["per_variable_probability"])
    if "particle_fraction" in section:
        kwargs["particle_fraction"] = float(section["particle_fraction"])
    return MutationConfig(**kwargs)


# --- solve ------------------------------------------------------------------


def cmd_solve(args) -> int:
    config = load_config_file(args.config) if args.config else {}
    run_cfg = config.get("run", {})

    name, n_obj = parse_problem_id(args.problem)
    if args.objectives is not None:
        n_obj = args.objectives
    try:
        problem = get_problem(name, n_obj)
    except ValueError:
        raise UsageError(
            f"unknown problem {args.problem!r}; valid choices: {', '.join(available_problems())}"
        ) from None

    variant = args.variant or run_cfg.get("variant", "fcpso")
    if variant not in VARIANTS:
        raise UsageError(f"unknown variant {variant!r}; valid choices: {', '.join(VARIANTS)}")
    scheme_text = args.scheme or run_cfg.get("scheme")
    scheme = _parse_scheme(scheme_text) if scheme_text else None
    seed = args.seed if args.seed is not None else int(run_cfg.get("seed", 1))

    dynamics = DynamicsConfig(
        variant=variant,
        scheme=scheme,
        inertia=float(run_cfg.get("inertia", 0.1)),
        swarm_size=args.swarm or int(run_cfg.get("swarm_size", 100)),
        seed=seed,
        velocity_init=run_cfg.get("velocity_init", "zero"),
    )
    hv_target = args.hv_target
    if hv_target is None and "hv_target" in run_cfg:
        hv_target = float(run_cfg["hv_target"])
    cfg = RunConfig(
        dynamics=dynamics,
        mutation=_mutation_from_config(config.get("mutation", {})),
        max_evaluations=args.evaluations or int(run_cfg.get("max_evaluations", 25_000)),
        archive_capacity=args.archive or int(run_cfg.get("archive_capacity", 100)),
        hv_target_fraction=hv_target,
    )

    result = run(problem, cfg, seed)
    out_dir = io.run_directory(io.results_root(args.out), result)
    io.write_run_result(out_dir, result)

    hv = hypervolume(result.front_objectives, problem.hv_reference_point)
    print(f"problem={problem.name}")
    print(f"variant={variant}")
    print(f"seed={seed}")
    print(f"front_size={result.front_size}")
    print(f"evaluations={result.evaluations_used}")
    print(f"hv={io.fmt(hv)}")
    print(f"results_dir={out_dir}")
    return 0


# --- benchmark --------------------------------------------------------------


def _resolve_spec_path(spec_arg: str) -> Path:
    p = Path(spec_arg)
    if p.is_file():
        return p
    bundled = resources.files("fcpso").joinpath(f"data/specs/{spec_arg}.spec")
    if bundled.is_file():
        with resources.as_file(bundled) as path:
            return Path(path)
    raise UsageError(f"spec file not found: {spec_arg}")


def _experiment_from_config(config: dict[str, dict[str, str]]) -> ExperimentSpec:
    section = config.get("experiment")
    if not section:
        raise UsageError("spec file needs an [experiment] section")
    if "problems" not in section:
        raise UsageError("spec file needs 'problems' in [experiment]")
    kwargs = {
        "problems": tuple(p.strip() for p in section["problems"].split(",") if p.strip()),
    }
    if "variants" in section:
        kwargs["variants"] = tuple(v.strip() for v in section["variants"].split(",") if v.strip())
    if "indicators" in section:
        kwargs["indicators"] = tuple(
            i.strip() for i in section["indicators"].split(",") if i.strip()
        )
    for key in ("repetitions", "base_seed", "max_evaluations", "swarm_size", "archive_capacity"):
        if key in section:
            kwargs[key] = int(section[key])
    spec = ExperimentSpec(**kwargs)
    if "mutation" in config:
        spec = replace(spec, mutation=_mutation_from_config(config["mutation"]))
    return spec


def cmd_benchmark(args) -> int:
    path = _resolve_spec_path(args.spec)
    spec = _experiment_from_config(load_config_file(path))
    rows = run_experiment(spec, workers=args.workers)
    out_dir = io.results_root(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    out = out_dir / "comparison.csv"
    io.write_comparison_csv(out, rows)
    for r in rows:
        if r.winner == "error":
            print(f"{r.problem} {r.indicator}: error ({r.error})")
        else:
            print(
                f"{r.problem} {r.indicator}: {r.variant_a}={io.fmt(r.median_a)} "
                f"{r.variant_b}={io.fmt(r.median_b)} p={r.p_value:.3g} winner={r.winner}"
            )
    print(f"comparison_csv={out}")
    return 0 if any(r.winner != "error" for r in rows) else 2


# --- fairness ---------------------------------------------------------------


def cmd_fairness(args) -> int:
    did_something = False
    if args.solve_fair:
        phi2 = solve_fair_phi2(2.0)
        print(f"fair_phi2={io.fmt(phi2)}")
        print(f"fair_scheme=2,{io.fmt(phi2)},0,1")
        did_something = True
    if args.target_mu is not None:
        try:
            scheme = scheme_for_unfairness(args.target_mu)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        print("scheme=" + ",".join(io.fmt(v) for v in scheme.as_tuple()))
        print(f"scheme_mu={io.fmt(unfairness(scheme))}")
        did_something = True
    if args.scheme:
        scheme = _parse_scheme(args.scheme)
        p = activation_probability(scheme)
        print("method=analytic")
        print(f"p_activation={io.fmt(p)}")
        print(f"mu={io.fmt(p - 0.5)}")
        if args.monte_carlo:
            report = monte_carlo_activation(scheme, args.monte_carlo, seed=args.seed)
            print("method=monte-carlo")
            print(f"mc_samples={report.sample_count}")
            print(f"mc_p_activation={io.fmt(report.p_activation)}")
            print(f"mc_mu={io.fmt(report.unfairness)}")
            print(f"mc_std_error={io.fmt(report.std_error)}")
        did_something = True
    elif args.monte_carlo:
        raise UsageError("--monte-carlo needs --scheme")
    if not did_something:
        raise UsageError("nothing to do: pass --scheme, --solve-fair or --target-mu")
    return 0


# --- profile ----------------------------------------------------------------


def cmd_profile(args) -> int:
    problems = [p.strip() for p in args.problems.split(",") if p.strip()]
    mu_grid = [float(m) for m in args.mu_grid.split(",") if m.strip()]
    points, notices = unfairness_profile(
        problems,
        mu_grid,
        repetitions=args.repetitions,
        base_seed=args.base_seed,
        max_evaluations=args.evaluations,
        workers=args.workers,
    )
    for notice in notices:
        print(f"notice: {notice}", file=sys.stderr)
    out_dir = io.results_root(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    out = out_dir / "profile.csv"
    io.write_profile_csv(out, points)
    for p in points:
        print(f"mu={io.fmt(p.mu)} problem={p.problem} normalized_hv={io.fmt(p.normalized_hv)}")
    print(f"profile_csv={out}")
    return 0


# --- indicators -------------------------------------------------------------


def cmd_indicators(args) -> int:
    front = load_reference_front(args.front)
    reference = load_reference_front(args.reference) if args.reference else None
    if args.indicators:
        wanted = tuple(i.strip() for i in args.indicators.split(",") if i.strip())
        bad = [i for i in wanted if i not in ("hv", "igd", "eps", "sp")]
        if bad:
            raise UsageError(f"unknown indicators {bad}; choose from hv, igd, eps, sp")
    else:  # default to whatever the provided inputs support
        wanted = ("sp",) if front.shape[0] >= 2 else ()
        if args.ref_point:
            wanted = ("hv",) + wanted
        if reference is not None:
            wanted += ("igd", "eps")
    if reference is not None and reference.shape[1] != front.shape[1]:
        raise UsageError(
            f"objective count mismatch: front has {front.shape[1]}, "
            f"reference has {reference.shape[1]}"
        )

    ref_point = _parse_vector(args.ref_point) if args.ref_point else None
    values: dict[str, float] = {}
    if "hv" in wanted:
        if ref_point is None:
            raise UsageError("hv needs --ref-point")
        if ref_point.shape[0] != front.shape[1]:
            raise UsageError(
                f"objective count mismatch: front has {front.shape[1]}, "
                f"--ref-point has {ref_point.shape[0]}"
            )
        values["hv"] = hypervolume(front, ref_point)
    for ind in ("igd", "eps"):
        if ind in wanted:
            if reference is None:
                raise UsageError(f"{ind} needs --reference")
            fn = igd if ind == "igd" else additive_epsilon
            values[ind] = fn(front, reference)
    if "sp" in wanted:
        values["sp"] = spacing(front)

    report = IndicatorReport(
        front_size=front.shape[0],
        reference_point=ref_point,
        hv=values.get("hv"),
        igd=values.get("igd"),
        eps=values.get("eps"),
        sp=values.get("sp"),
    )
    for line in report.as_lines():
        print(line)
    return 0


# --- entry point ------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="fcpso", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run one optimization and write its front")
    p.add_argument("--problem", required=True, help="problem name, e.g. zdt1 or dtlz1:5")
    p.add_argument("--objectives", type=int, default=None, help="objective count (suite default)")
    p.add_argument("--variant", default=None, help=f"one of {', '.join(VARIANTS)} (default fcpso)")
    p.add_argument("--scheme", default=None, help="phi1,phi2,beta1,beta2 sampling bounds")
    p.add_argument("--seed", type=int, default=None, help="run seed (default 1)")
    p.add_argument("--evaluations", type=int, default=None, help="evaluation budget (default 25000)")
    p.add_argument("--swarm", type=int, default=None, help="swarm size (default 100)")
    p.add_argument("--archive", type=int, default=None, help="archive capacity (default 100)")
    p.add_argument("--hv-target", type=float, default=None,
                   help="stop at this fraction of the reference hypervolume")
    p.add_argument("--config", default=None, help="key=value config file with [run]/[mutation]")
    p.add_argument("--out", default=None, help="results root (default $FCPSO_RESULTS_DIR or ./results)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("benchmark", help="run a comparison experiment from a spec file")
    p.add_argument("spec", help="spec file path or bundled name (zdt-quick, paper-zdt-dtlz)")
    p.add_argument("--workers", type=int, default=None, help="parallel run workers (default: cpu count)")
    p.add_argument("--out", default=None, help="results root (default $FCPSO_RESULTS_DIR or ./results)")
    p.set_defaults(func=cmd_benchmark)

    p = sub.add_parser("fairness", help="constriction-fairness calculus")
    p.add_argument("--scheme", default=None, help="phi1,phi2,beta1,beta2 to analyze")
    p.add_argument("--monte-carlo", type=int, default=None, metavar="N",
                   help="also estimate P(E) from N samples")
    p.add_argument("--seed", type=int, default=0, help="monte-carlo seed (default 0)")
    p.add_argument("--solve-fair", action="store_true", help="solve for the fair phi2 at phi1=2")
    p.add_argument("--target-mu", type=float, default=None,
                   help="derive a scheme with this unfairness")
    p.set_defaults(func=cmd_fairness)

    p = sub.add_parser("profile", help="normalized HV across an unfairness grid")
    p.add_argument("--problems", default="zdt1,zdt3,zdt4", help="comma-separated problem names")
    p.add_argument("--mu-grid", required=True, help="comma-separated unfairness values")
    p.add_argument("--repetitions", type=int, default=5, help="runs per grid point (default 5)")
    p.add_argument("--evaluations", type=int, default=25_000, help="budget per run (default 25000)")
    p.add_argument("--base-seed", type=int, default=1, help="first seed (default 1)")
    p.add_argument("--workers", type=int, default=None, help="parallel run workers (default: cpu count)")
    p.add_argument("--out", default=None, help="results root (default $FCPSO_RESULTS_DIR or ./results)")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("indicators", help="compute quality indicators on a front CSV")
    p.add_argument("--front", required=True, help="front CSV (f1,...,fk header)")
    p.add_argument("--reference", default=None, help="reference front CSV for igd/eps")
    p.add_argument("--ref-point", default=None, help="hypervolume reference point, e.g. 2,2")
    p.add_argument("--indicators", default=None,
                   help="subset of hv,igd,eps,sp (default: all the inputs allow)")
    p.set_defaults(func=cmd_indicators)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
