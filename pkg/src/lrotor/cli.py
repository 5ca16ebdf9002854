"""Command-line front end.

Subcommands: ``generate`` (mesh + curvature table), ``solve`` (relation
ODE to CSV), ``classify`` (cubic relation -> quadric), ``verify``
(grid verification of a named surface), ``catalog`` (list named
surfaces).  Exit codes: 0 success, 1 verification failure, 2 bad
configuration, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .catalog import build_catalog, get_entry
from .errors import (ConfigError, DomainError, DomainExit, EmptyDomain,
                     Inadmissible, LrotorError, SingularIntegral, StepFailure)
from .momentum import RotationClass
from .quadrics import classification_to_json, classify_cubic
from .surface import (SurfaceSpec, curvature_table_csv, mesh,
                      surface_from_json, write_obj)
from .verify import Tolerances, verify_explicit, verify_surface
from .weingarten import parse_relation, relation_label, solve_ode

DEFAULT_TOL = 1e-6


@dataclass
class JobConfig:
    """One CLI job; required fields depend on the command."""

    command: str
    named: Optional[str] = None
    surface: Optional[dict] = None
    relation: Optional[str] = None
    out: Optional[str] = None
    grid: tuple[int, int] = (16, 16)
    tol: float = DEFAULT_TOL
    curvature_tol: float = 1e-5
    relation_tol: float = 1e-12
    mu: Optional[float] = None
    c: Optional[float] = None
    q: Optional[float] = None
    eps: Optional[int] = None
    cls: Optional[str] = None
    r0: Optional[float] = None
    K0: Optional[float] = None
    r_end: Optional[float] = None
    solver_tol: float = 1e-8


def _parse_grid(text: str) -> tuple[int, int]:
    try:
        nr, nt = text.lower().split("x")
        return (int(nr), int(nt))
    except ValueError as exc:
        raise ConfigError(f"bad grid {text!r}; expected NRxNT") from exc


def _default_tol() -> float:
    env = os.environ.get("LROTOR_TOL")
    if env is None:
        return DEFAULT_TOL
    try:
        return float(env)
    except ValueError as exc:
        raise ConfigError(f"bad LROTOR_TOL={env!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrotor",
        description="rotational surfaces in Lorentz-Minkowski 3-space")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON job config file")
        p.add_argument("--out", help="output path (base name for generate)")
        p.add_argument("--tol", type=float, default=None,
                       help="implicit-residual tolerance "
                            "(default 1e-6, env LROTOR_TOL)")

    g = sub.add_parser("generate", help="emit OBJ mesh and curvature CSV")
    common(g)
    g.add_argument("--named", help="catalog surface key")
    g.add_argument("--grid", default="32x32", help="NRxNT sampling")

    s = sub.add_parser("solve", help="integrate a relation's momentum ODE")
    common(s)
    s.add_argument("--relation", required=True,
                   help='"linear:q=2", "quadratic:mu=1", "cubic:mu=-1", '
                        '"H0"; bare "linear"/"quadratic"/"cubic" take the '
                        'coefficient from --q/--mu')
    s.add_argument("--q", type=float, help="coefficient for --relation linear")
    s.add_argument("--mu", type=float,
                   help="coefficient for --relation quadratic/cubic")
    s.add_argument("--r0", type=float, required=True)
    s.add_argument("--K0", type=float, required=True)
    s.add_argument("--r-end", dest="r_end", type=float, required=True)
    s.add_argument("--solver-tol", type=float, default=1e-8)

    c = sub.add_parser("classify", help="cubic relation -> quadric family")
    common(c)
    c.add_argument("--mu", type=float, required=True)
    c.add_argument("--c", type=float, required=True)
    c.add_argument("--eps", type=int, choices=(1, -1), required=True)
    c.add_argument("--class", dest="cls", required=True,
                   choices=[k.value for k in RotationClass])

    v = sub.add_parser("verify", help="grid-verify a named surface")
    common(v)
    v.add_argument("--named", required=True)
    v.add_argument("--relation", help="override the paired relation")
    v.add_argument("--grid", default="16x16")
    v.add_argument("--curvature-tol", type=float, default=1e-5)
    v.add_argument("--relation-tol", type=float, default=1e-12)

    cat = sub.add_parser("catalog", help="list the named surfaces")
    common(cat)
    return parser


def config_from_args(args: argparse.Namespace) -> JobConfig:
    cfg = JobConfig(command=args.command, tol=_default_tol())
    if getattr(args, "config", None):
        try:
            with open(args.config) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}")
        for key, value in data.items():
            if key == "grid":
                cfg.grid = (int(value[0]), int(value[1]))
            elif hasattr(cfg, key):
                setattr(cfg, key, value)
            else:
                raise ConfigError(f"unknown config key {key!r}")
    for key in ("named", "relation", "out", "mu", "c", "q", "eps", "cls",
                "r0", "K0", "r_end", "solver_tol", "curvature_tol",
                "relation_tol"):
        value = getattr(args, key, None)
        if value is not None:
            setattr(cfg, key, value)
    if getattr(args, "grid", None):
        cfg.grid = _parse_grid(args.grid)
    if getattr(args, "tol", None) is not None:
        cfg.tol = args.tol
    # bare relation names take their coefficient from --q / --mu
    if cfg.relation == "linear" and cfg.q is not None:
        cfg.relation = f"linear:q={cfg.q!r}"
    elif cfg.relation in ("quadratic", "cubic") and cfg.mu is not None:
        cfg.relation = f"{cfg.relation}:mu={cfg.mu!r}"
    return cfg


def _resolve_surface(cfg: JobConfig):
    if cfg.named:
        return get_entry(cfg.named)
    if cfg.surface:
        return surface_from_json(cfg.surface)
    raise ConfigError("need --named or a config with a surface spec")


def _cmd_generate(cfg: JobConfig) -> int:
    target = _resolve_surface(cfg)
    spec = target.surface if hasattr(target, "surface") else target
    if not isinstance(spec, SurfaceSpec):
        raise ConfigError(f"{cfg.named!r} is an explicit surface; "
                          "generate supports momentum surfaces")
    if not cfg.out:
        raise ConfigError("generate needs --out")
    base = cfg.out[:-4] if cfg.out.endswith(".obj") else cfg.out
    nr, nt = cfg.grid
    m = mesh(spec, nr, nt)
    with open(base + ".obj", "w") as fh:
        write_obj(m, fh)
    with open(base + ".csv", "w") as fh:
        curvature_table_csv(spec, nr, nt, fh)
    print(f"wrote {base}.obj and {base}.csv "
          f"({len(m.vertices)} vertices, {len(m.faces)} triangles)")
    return 0


def _cmd_solve(cfg: JobConfig) -> int:
    rel = parse_relation(cfg.relation)
    solved = solve_ode(rel, cfg.r0, cfg.K0, cfg.r_end, tol=cfg.solver_tol)
    lo, hi = solved.rs[0], solved.rs[-1]
    rs = np.linspace(lo, hi, 65)
    lines = ["r,K"]
    for r in rs:
        lines.append(f"{r:.17g},{solved.evaluator(float(r)):.17g}")
    text = "\n".join(lines) + "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
        print(f"wrote {cfg.out} (status: {solved.status})")
    else:
        sys.stdout.write(text)
    if solved.status == "domain_exit":
        print(f"note: stopped at validity boundary r={solved.boundary_r}")
    return 0


def _cmd_classify(cfg: JobConfig) -> int:
    cls = RotationClass(cfg.cls)
    result = classify_cubic(cfg.mu, cfg.c, cfg.eps, cls)
    payload = json.dumps(classification_to_json(result))
    print(payload)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(payload + "\n")
    return 0


def _cmd_verify(cfg: JobConfig) -> int:
    entry = get_entry(cfg.named)
    tols = Tolerances(curvature=cfg.curvature_tol, relation=cfg.relation_tol,
                      residual=cfg.tol)
    rel = parse_relation(cfg.relation) if cfg.relation else entry.relation
    if entry.is_explicit:
        report = verify_explicit(entry.surface, tolerances=tols,
                                 grid=cfg.grid)
    else:
        from .quadrature import generatrix_graph
        graph = None
        if entry.implicit is None:
            spec = entry.surface
            try:
                graph = generatrix_graph(spec.momentum, spec.cls, spec.eps,
                                         spec.r_interval, 257, spec.anchor)
            except LrotorError:
                graph = None
        report = verify_surface(entry.surface, rel=rel, graph=graph,
                                tolerances=tols, grid=cfg.grid)
        if entry.implicit is not None:
            worst = _entry_implicit_max(entry, cfg.grid)
            report = _merge_implicit(report, worst, tols)
    print(f"{cfg.named}: {report.summary()}")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump(report.to_json(), fh, indent=2)
            fh.write("\n")
    return 0 if report.passed else 1


def _entry_implicit_max(entry, grid) -> float:
    spec = entry.surface
    m = mesh(spec, grid[0], grid[1])
    x = np.array(m.vertices)
    res, scale = entry.implicit(x[:, 0], x[:, 1], x[:, 2])
    return float(np.max(np.abs(res) / scale))


def _merge_implicit(report, worst, tols):
    from dataclasses import replace
    passed = report.passed and worst <= tols.residual
    return replace(report, max_implicit_residual=worst, passed=passed)


def _cmd_catalog(cfg: JobConfig) -> int:
    for key, entry in build_catalog().items():
        rel = relation_label(entry.relation) if entry.relation else "-"
        print(f"{key:42s} {rel:18s} {entry.description}")
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "solve": _cmd_solve,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "catalog": _cmd_catalog,
}


def run(cfg: JobConfig) -> int:
    """Execute a job; returns the exit status."""
    try:
        return _COMMANDS[cfg.command](cfg)
    except (ConfigError, KeyError, ValueError, Inadmissible, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SingularIntegral, StepFailure, DomainExit, DomainError,
            EmptyDomain) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
