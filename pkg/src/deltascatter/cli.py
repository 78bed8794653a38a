"""Command-line interface.

Four subcommands cover the library surface:

    solve         amplitudes for one array, printed to stdout
    sweep         T and R along a parameter grid, written as CSV
    wavefunction  psi sampled on a window, written as CSV
    resonances    perfect-transmission locations, written as CSV

The array can be given in dimensionless form (--xi with --gaps/--gap in y
units) or physically (--vtilde with --positions/--gaps in x units plus --k);
the two are related by y = k x and xi = vtilde / k.  A JSON file passed via
--config supplies any of the same values; explicit flags override the file.
Floats in CSV output are rendered with 12 significant digits so identical
configurations produce byte-identical files.

Exit codes: 0 success, 2 configuration problem, 3 solver failure,
4 self-check tolerance violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, replace
from pathlib import Path

from . import __version__, analysis, direct_solver, transfer, wavefunction
from .errors import (
    ConfigError,
    DeltaScatterError,
    DegenerateMatrixError,
    DomainError,
    OrderingError,
    ResonancePoleError,
    SingularSystemError,
)
from .model import DimensionlessSystem, PotentialArray, to_dimensionless

__all__ = ["main", "entry"]

#: Disagreement between the direct and transfer routes (or |T + R - 1|)
#: beyond this aborts a solve run with exit code 4.
SELF_CHECK_TOL = 1e-9

_MODES = ("solve", "sweep", "wavefunction", "resonances")

_CONFIG_KEYS = {
    "mode", "xi", "vtilde", "k", "gaps", "gap", "y0", "positions",
    "param", "min", "max", "steps", "tol", "out", "plot",
}

_DEFAULT_OUT = {
    "sweep": "sweep.csv",
    "wavefunction": "wavefunction.csv",
    "resonances": "resonances.csv",
}


def _fmt(value: float) -> str:
    """Deterministic 12-significant-digit rendering."""
    return format(float(value), ".12g")


def _fmt_complex(z: complex) -> str:
    sign = "-" if z.imag < 0 else "+"
    return f"{_fmt(z.real)} {sign} {_fmt(abs(z.imag))}i"


@dataclass
class RunConfig:
    """Merged view of the JSON config file and the command-line flags."""

    mode: str
    xi: tuple[float, ...] | None = None
    vtilde: tuple[float, ...] | None = None
    k: float | None = None
    gaps: tuple[float, ...] | None = None
    gap: float | None = None
    y0: float | None = None
    positions: tuple[float, ...] | None = None
    param: str | None = None
    lo: float | None = None
    hi: float | None = None
    steps: int | None = None
    tol: float = 1e-10
    out: str | None = None
    plot: bool = False
    quiet: bool = False


def _parse_float_list(text: str, name: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise ConfigError(f"{name} must be a comma-separated list of numbers: {text!r}") from exc


def _number_list(value, name: str) -> tuple[float, ...]:
    if not isinstance(value, (list, tuple)) or not all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in value
    ):
        raise ConfigError(f"config key {name!r} must be an array of numbers")
    return tuple(float(v) for v in value)


def _number(value, name: str) -> float:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ConfigError(f"config key {name!r} must be a number")
    return float(value)


def _load_config(path: str) -> dict:
    try:
        raw = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path!r} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"config file {path!r} must hold a JSON object")
    unknown = set(raw) - _CONFIG_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return raw


def _apply_file(cfg: RunConfig, raw: dict) -> RunConfig:
    if "mode" in raw:
        mode = raw["mode"]
        if mode not in _MODES:
            raise ConfigError(f"config mode must be one of {_MODES}, got {mode!r}")
        if mode != cfg.mode:
            raise ConfigError(
                f"config mode {mode!r} conflicts with the {cfg.mode!r} subcommand"
            )
    updates: dict = {}
    if "xi" in raw:
        updates["xi"] = _number_list(raw["xi"], "xi")
    if "vtilde" in raw:
        updates["vtilde"] = _number_list(raw["vtilde"], "vtilde")
    if "gaps" in raw:
        updates["gaps"] = _number_list(raw["gaps"], "gaps")
    if "positions" in raw:
        updates["positions"] = _number_list(raw["positions"], "positions")
    for key, field in (("k", "k"), ("gap", "gap"), ("y0", "y0"),
                       ("min", "lo"), ("max", "hi"), ("tol", "tol")):
        if key in raw:
            updates[field] = _number(raw[key], key)
    if "steps" in raw:
        steps = raw["steps"]
        if not isinstance(steps, int) or isinstance(steps, bool):
            raise ConfigError("config key 'steps' must be an integer")
        updates["steps"] = steps
    if "param" in raw:
        if not isinstance(raw["param"], str):
            raise ConfigError("config key 'param' must be a string")
        updates["param"] = raw["param"]
    if "out" in raw:
        if not isinstance(raw["out"], str):
            raise ConfigError("config key 'out' must be a string")
        updates["out"] = raw["out"]
    if "plot" in raw:
        if not isinstance(raw["plot"], bool):
            raise ConfigError("config key 'plot' must be a boolean")
        updates["plot"] = raw["plot"]
    return replace(cfg, **updates)


def _apply_flags(cfg: RunConfig, args: argparse.Namespace) -> RunConfig:
    updates: dict = {}
    if args.xi is not None:
        updates["xi"] = _parse_float_list(args.xi, "--xi")
    if args.vtilde is not None:
        updates["vtilde"] = _parse_float_list(args.vtilde, "--vtilde")
    if args.gaps is not None:
        updates["gaps"] = _parse_float_list(args.gaps, "--gaps")
    if args.positions is not None:
        updates["positions"] = _parse_float_list(args.positions, "--positions")
    for flag in ("k", "gap", "y0", "steps", "tol", "param", "out"):
        value = getattr(args, flag)
        if value is not None:
            updates[flag] = value
    if args.min is not None:
        updates["lo"] = args.min
    if args.max is not None:
        updates["hi"] = args.max
    if args.plot:
        updates["plot"] = True
    if args.quiet:
        updates["quiet"] = True
    return replace(cfg, **updates)


def _site_count(cfg: RunConfig) -> int:
    strengths = cfg.xi if cfg.xi is not None else cfg.vtilde
    if strengths is not None:
        return len(strengths)
    if cfg.gaps is not None:
        return len(cfg.gaps) + 1
    raise ConfigError("cannot infer the number of sites; give --xi or --vtilde")


def _resolve_gaps(cfg: RunConfig) -> tuple[float, ...] | None:
    if cfg.gaps is not None and cfg.gap is not None:
        raise ConfigError("give either --gaps or --gap, not both")
    if cfg.gap is not None:
        return (cfg.gap,) * (_site_count(cfg) - 1)
    return cfg.gaps


def _build_system(cfg: RunConfig) -> DimensionlessSystem:
    """Concrete array from either the dimensionless or the physical inputs."""
    if cfg.xi is not None and cfg.vtilde is not None:
        raise ConfigError("give either --xi or --vtilde, not both")
    gaps = _resolve_gaps(cfg)
    if cfg.xi is not None:
        if cfg.k is not None:
            raise ConfigError("--k applies to --vtilde systems; --xi is already scaled")
        y0 = cfg.y0 if cfg.y0 is not None else 0.0
        return DimensionlessSystem.from_gaps(cfg.xi, gaps or (), y0)
    if cfg.vtilde is not None:
        if cfg.k is None:
            raise ConfigError("--vtilde needs the wavenumber --k")
        if cfg.y0 is not None:
            raise ConfigError("--y0 applies to --xi systems; use --positions instead")
        positions = cfg.positions
        if positions is None:
            if gaps is None and len(cfg.vtilde) > 1:
                raise ConfigError("--vtilde needs --positions, --gaps, or --gap (in x units)")
            acc = [0.0]
            for g in gaps or ():
                acc.append(acc[-1] + g)
            positions = tuple(acc)
        arr = PotentialArray(reduced_strengths=cfg.vtilde, positions=positions, k=cfg.k)
        return to_dimensionless(arr)
    raise ConfigError("no system given; use --xi or --vtilde (or a config file)")


def _dimensionless_template(cfg: RunConfig) -> tuple[tuple[float, ...] | None, float]:
    """Fixed strengths and first-site offset for dtilde/xi sweeps."""
    if cfg.xi is not None:
        return cfg.xi, cfg.y0 if cfg.y0 is not None else 0.0
    if cfg.vtilde is not None:
        if cfg.k is None:
            raise ConfigError("--vtilde needs the wavenumber --k")
        return tuple(v / cfg.k for v in cfg.vtilde), 0.0
    return None, cfg.y0 if cfg.y0 is not None else 0.0


def _build_sweep_spec(cfg: RunConfig) -> analysis.SweepSpec:
    if cfg.param is None:
        raise ConfigError(f"--param is required and must be one of {analysis.PARAMS}")
    if cfg.param not in analysis.PARAMS:
        raise ConfigError(f"--param must be one of {analysis.PARAMS}, got {cfg.param!r}")
    if cfg.lo is None or cfg.hi is None:
        raise ConfigError("sweeps need --min and --max")
    steps = cfg.steps if cfg.steps is not None else analysis.DEFAULT_STEPS

    if cfg.param == "k":
        if cfg.vtilde is None:
            raise ConfigError("a k sweep needs the physical template: --vtilde with "
                              "--positions/--gaps in x units")
        positions = cfg.positions
        if positions is None:
            gaps = _resolve_gaps(cfg)
            if gaps is None and len(cfg.vtilde) > 1:
                raise ConfigError("a k sweep needs --positions, --gaps, or --gap (x units)")
            acc = [0.0]
            for g in gaps or ():
                acc.append(acc[-1] + g)
            positions = tuple(acc)
        return analysis.SweepSpec(param="k", lo=cfg.lo, hi=cfg.hi, steps=steps,
                                  vtilde=cfg.vtilde, positions=positions)

    strengths, y0 = _dimensionless_template(cfg)
    if cfg.param == "dtilde":
        if strengths is None:
            raise ConfigError("a dtilde sweep needs the fixed strengths via --xi or --vtilde/--k")
        return analysis.SweepSpec(param="dtilde", lo=cfg.lo, hi=cfg.hi, steps=steps,
                                  xi=strengths, y0=y0)
    gaps = _resolve_gaps(cfg)
    if strengths is None and gaps is None:
        raise ConfigError("a xi sweep needs the site count via --xi, --vtilde, or --gaps")
    return analysis.SweepSpec(param="xi", lo=cfg.lo, hi=cfg.hi, steps=steps,
                              xi=strengths, gaps=gaps, y0=y0)


def _write_csv(path: str, header: str, rows: list[str]) -> None:
    with open(path, "w", newline="\n") as handle:
        handle.write(header + "\n")
        for row in rows:
            handle.write(row + "\n")


def _figure_path(out: str) -> str:
    return str(Path(out).with_suffix(".png"))


def _say(cfg: RunConfig, message: str) -> None:
    if not cfg.quiet:
        print(message)


def _run_solve(cfg: RunConfig) -> int:
    system = _build_system(cfg)
    solution = direct_solver.solve_amplitudes(system)
    t_alt, r_alt = transfer.amplitudes(system)

    _say(cfg, f"sites: {system.n}")
    _say(cfg, "xi: " + " ".join(_fmt(v) for v in system.xi))
    _say(cfg, "y:  " + " ".join(_fmt(v) for v in system.y))
    _say(cfg, f"r = {_fmt_complex(solution.r)}")
    _say(cfg, f"t = {_fmt_complex(solution.t)}")
    for j, (a, b) in enumerate(solution.interior, start=2):
        _say(cfg, f"region {j}: a = {_fmt_complex(a)}, b = {_fmt_complex(b)}")
    _say(cfg, f"T = {_fmt(solution.T)}")
    _say(cfg, f"R = {_fmt(solution.R)}")

    unitarity = abs(solution.T + solution.R - 1.0)
    mismatch = max(abs(solution.t - t_alt), abs(solution.r - r_alt))
    unit_ok = unitarity <= SELF_CHECK_TOL
    cross_ok = mismatch <= SELF_CHECK_TOL
    _say(cfg, f"unitarity: {'PASS' if unit_ok else 'FAIL'} (|T + R - 1| = {unitarity:.3e})")
    _say(cfg, f"cross-check: {'PASS' if cross_ok else 'FAIL'} "
              f"(direct vs transfer = {mismatch:.3e})")
    if not (unit_ok and cross_ok):
        print("self-check failed beyond tolerance "
              f"{SELF_CHECK_TOL:g}; amplitudes are not trustworthy", file=sys.stderr)
        return 4
    return 0


def _run_sweep(cfg: RunConfig) -> int:
    spec = _build_sweep_spec(cfg)
    records = analysis.sweep(spec)
    out = cfg.out or _DEFAULT_OUT["sweep"]
    _write_csv(out, "param,T,R",
               [f"{_fmt(rec.param)},{_fmt(rec.T)},{_fmt(rec.R)}" for rec in records])
    skipped = spec.steps - len(records)
    note = f" ({skipped} points skipped)" if skipped else ""
    _say(cfg, f"wrote {len(records)} rows to {out}{note}")
    if cfg.plot:
        from . import plotting

        figure = _figure_path(out)
        plotting.plot_sweep(records, figure, param=spec.param)
        _say(cfg, f"wrote figure to {figure}")
    return 0


def _run_wavefunction(cfg: RunConfig) -> int:
    system = _build_system(cfg)
    solution = direct_solver.solve_amplitudes(system)
    window = wavefunction.default_window(system)
    ymin = cfg.lo if cfg.lo is not None else window[0]
    ymax = cfg.hi if cfg.hi is not None else window[1]
    count = cfg.steps if cfg.steps is not None else 2001
    samples = wavefunction.sample(system, solution, ymin, ymax, count)
    out = cfg.out or _DEFAULT_OUT["wavefunction"]
    _write_csv(
        out,
        "y,psi_re,psi_im,dpsi_re,dpsi_im,density",
        [
            f"{_fmt(s.y)},{_fmt(s.psi.real)},{_fmt(s.psi.imag)},"
            f"{_fmt(s.dpsi.real)},{_fmt(s.dpsi.imag)},{_fmt(s.density)}"
            for s in samples
        ],
    )
    _say(cfg, f"wrote {len(samples)} rows to {out}")
    if cfg.plot:
        from . import plotting

        figure = _figure_path(out)
        plotting.plot_wavefunction(samples, system.y, figure)
        _say(cfg, f"wrote figure to {figure}")
    return 0


def _run_resonances(cfg: RunConfig) -> int:
    spec = _build_sweep_spec(cfg)
    hits = analysis.find_resonances(spec, tol=cfg.tol)
    out = cfg.out or _DEFAULT_OUT["resonances"]
    _write_csv(out, "param,residual",
               [f"{_fmt(hit.param)},{_fmt(hit.residual)}" for hit in hits])
    if hits:
        for hit in hits:
            _say(cfg, f"resonance at {spec.param} = {_fmt(hit.param)} "
                      f"(|r|^2 = {hit.residual:.3e})")
    else:
        _say(cfg, f"no resonances found on [{_fmt(spec.lo)}, {_fmt(spec.hi)}]")
    _say(cfg, f"wrote {len(hits)} rows to {out}")
    if cfg.plot:
        from . import plotting

        values, residuals = analysis.residual_scan(spec)
        figure = _figure_path(out)
        plotting.plot_resonance_scan(values, residuals, hits, figure, param=spec.param)
        _say(cfg, f"wrote figure to {figure}")
    return 0


_RUNNERS = {
    "solve": _run_solve,
    "sweep": _run_sweep,
    "wavefunction": _run_wavefunction,
    "resonances": _run_resonances,
}


def _build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    group = shared.add_argument_group("system")
    group.add_argument("--xi", help="comma-separated dimensionless strengths")
    group.add_argument("--gaps", help="comma-separated gaps between neighbouring sites "
                                      "(y units with --xi, x units with --vtilde)")
    group.add_argument("--gap", type=float, help="uniform gap, shorthand for --gaps")
    group.add_argument("--gaps-uniform", action="store_true", dest="gaps_uniform",
                       help="declare the gaps uniform; with --param dtilde the swept "
                            "value supplies them, so no --gaps is needed")
    group.add_argument("--y0", type=float, help="position of the first site (default 0)")
    group.add_argument("--vtilde", help="comma-separated reduced strengths 2mV0/hbar^2")
    group.add_argument("--positions", help="comma-separated site positions in x units")
    group.add_argument("--k", type=float, help="wavenumber sqrt(2mE)/hbar for --vtilde input")
    run = shared.add_argument_group("run")
    run.add_argument("--config", help="JSON file with any of the same settings; "
                                      "explicit flags win")
    run.add_argument("--out", help="output CSV path (modes that write files)")
    run.add_argument("--param", choices=analysis.PARAMS, help="swept parameter")
    run.add_argument("--min", type=float, help="lower end of the sweep grid / sample window")
    run.add_argument("--max", type=float, help="upper end of the sweep grid / sample window")
    run.add_argument("--steps", type=int,
                     help=f"grid points (default {analysis.DEFAULT_STEPS}) or wavefunction "
                          "samples (default 2001)")
    run.add_argument("--tol", type=float,
                     help="resonance acceptance threshold on |r|^2 (default 1e-10)")
    run.add_argument("--plot", action="store_true",
                     help="also render a PNG figure next to the CSV")
    run.add_argument("--quiet", action="store_true", help="suppress the stdout summary")

    parser = argparse.ArgumentParser(
        prog="deltascatter",
        description="Scattering from a finite array of delta potentials on a line.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="mode", required=True)
    sub.add_parser("solve", parents=[shared],
                   help="print r, t, T, R, and interior coefficients for one array")
    sub.add_parser("sweep", parents=[shared],
                   help="tabulate T and R along a parameter grid (CSV: param,T,R)")
    sub.add_parser("wavefunction", parents=[shared],
                   help="sample psi on a window "
                        "(CSV: y,psi_re,psi_im,dpsi_re,dpsi_im,density)")
    sub.add_parser("resonances", parents=[shared],
                   help="locate perfect-transmission points (CSV: param,residual); "
                        "minima narrower than one grid cell may be missed, so raise "
                        "--steps for closely spaced resonances")
    return parser


def main(argv: list[str] | None = None) -> int:
    """Run the CLI; returns the process exit code instead of raising."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code else 0
    try:
        cfg = RunConfig(mode=args.mode, quiet=args.quiet)
        if args.config:
            cfg = _apply_file(cfg, _load_config(args.config))
        cfg = _apply_flags(cfg, args)
        return _RUNNERS[cfg.mode](cfg)
    except (ConfigError, DomainError, OrderingError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except (SingularSystemError, DegenerateMatrixError, ResonancePoleError) as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return 3
    except DeltaScatterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    entry()
