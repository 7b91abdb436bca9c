"""Command-line interface.

Examples
--------
Transmittance/reflectance/absorptance of 100 nm sodium on glass over frequency::

    swavefilm --preset sodium --eps2 glass --d-nm 100 --sweep omega:0.01:2.5:250 --output fig1.csv

Options may also come from a ``key = value`` file (``--config run.cfg``) whose
keys are the long option names with ``-`` replaced by ``_``.  Command-line
flags override the file, which overrides the built-in defaults.

Exit status: 0 success, 2 usage error, 3 model error in at least one row
(convergence failure or resonance), 4 I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from dataclasses import dataclass, fields

from .errors import ConfigurationError, DomainError
from .impedance import SeriesControl
from .sweep import MIN_OMEGA, SweepSpec, evaluate_point, run_sweep
from .units import (
    METAL_PRESETS,
    SPEED_OF_LIGHT,
    SUBSTRATE_PRESETS,
    IncidentWave,
    MetalParameters,
    StackConfiguration,
)

EXIT_OK, EXIT_USAGE, EXIT_MODEL, EXIT_IO = 0, 2, 3, 4

_AXIS_ALIASES = {
    "omega": "omega_ratio", "omega_ratio": "omega_ratio",
    "d": "d_nm", "d_nm": "d_nm", "d-nm": "d_nm",
    "theta": "theta_deg", "theta_deg": "theta_deg", "theta-deg": "theta_deg",
    "eps2": "eps2",
}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SweepAxis:
    """Sweep as given on the command line; ``theta_deg`` bounds are in degrees."""

    axis: str
    start: float
    stop: float
    steps: int

    def __str__(self):
        return f"{self.axis}:{self.start!r}:{self.stop!r}:{self.steps}"


@dataclass(frozen=True)
class RunConfiguration:
    preset: str = "sodium"
    omega_p: float = METAL_PRESETS["sodium"].omega_p
    v_f: float = METAL_PRESETS["sodium"].v_f
    eps_coll: float = 0.001
    eps1: float = 1.0
    eps2: float = 4.0
    d_nm: float = 100.0
    theta_deg: float = 0.0
    omega: float = 1.0
    sweep: SweepAxis | None = None
    oracle: bool = False
    vf_scale: float = 1.0
    rel_tol: float = SeriesControl().rel_tol
    max_terms: int = SeriesControl().max_terms
    output: str | None = None
    workers: int = 1

    def metal(self) -> MetalParameters:
        return MetalParameters(self.omega_p, self.v_f * self.vf_scale, self.eps_coll)

    def stack(self) -> StackConfiguration:
        return StackConfiguration(self.eps1, self.eps2, self.d_nm)

    def wave(self) -> IncidentWave:
        return IncidentWave.from_degrees(self.omega, self.theta_deg)

    def control(self) -> SeriesControl:
        return SeriesControl(self.rel_tol, self.max_terms)

    def sweep_spec(self) -> SweepSpec | None:
        if self.sweep is None:
            return None
        axis, start, stop = self.sweep.axis, self.sweep.start, self.sweep.stop
        if axis == "theta_deg":
            axis, start, stop = "theta", math.radians(start), math.radians(stop)
        return SweepSpec(axis, start, stop, self.sweep.steps, self.metal(), self.stack(), self.wave())


# ---- value parsers (shared by flags and config file) -------------------------

def _float(token: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise UsageError(f"malformed number: {token!r}") from None
    if not math.isfinite(value):
        raise UsageError(f"non-finite number: {token!r}")
    return value


def _int(token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise UsageError(f"malformed integer: {token!r}") from None


def _bool(token: str) -> bool:
    lowered = token.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise UsageError(f"malformed boolean: {token!r}")


def _eps2(token: str) -> float:
    if token.strip().lower() in SUBSTRATE_PRESETS:
        return SUBSTRATE_PRESETS[token.strip().lower()]
    return _float(token)


def _preset(token: str) -> str:
    name = token.strip().lower()
    if name not in METAL_PRESETS:
        raise UsageError(f"unknown preset: {token!r} (available: {', '.join(METAL_PRESETS)})")
    return name


def _sweep(token: str) -> SweepAxis:
    parts = token.split(":")
    if len(parts) != 4:
        raise UsageError(f"sweep must be axis:start:stop:steps, got {token!r}")
    axis = _AXIS_ALIASES.get(parts[0].strip().lower())
    if axis is None:
        raise UsageError(f"unknown sweep axis: {parts[0]!r}")
    return SweepAxis(axis, _float(parts[1]), _float(parts[2]), _int(parts[3]))


def _str(token: str) -> str:
    return token.strip()


_PARSERS = {
    "preset": _preset,
    "omega_p": _float,
    "v_f": _float,
    "eps_coll": _float,
    "eps1": _float,
    "eps2": _eps2,
    "d_nm": _float,
    "theta_deg": _float,
    "omega": _float,
    "sweep": _sweep,
    "oracle": _bool,
    "vf_scale": _float,
    "rel_tol": _float,
    "max_terms": _int,
    "output": _str,
    "workers": _int,
}


def read_config_file(path: str) -> dict[str, str]:
    """Raw ``key -> value`` strings from a config file."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key = key.strip()
            if not sep:
                raise UsageError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
            if key not in _PARSERS:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = value.strip()
    return values


def format_config(cfg: RunConfiguration) -> str:
    """Config-file text that :func:`parse_config` reads back into ``cfg``."""
    lines = []
    for f in fields(cfg):
        value = getattr(cfg, f.name)
        if value is None:
            continue
        if isinstance(value, float):
            value = repr(value)
        elif isinstance(value, bool):
            value = "true" if value else "false"
        lines.append(f"{f.name} = {value}")
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swavefilm",
        description="S-wave transmittance, reflectance and absorptance of a metal film "
        "between two dielectrics, with specular electron reflection.",
        argument_default=argparse.SUPPRESS,
    )
    parser.add_argument("--config", help="key = value file; flags override it")
    parser.add_argument("--preset", help="metal preset (sodium)")
    parser.add_argument("--omega-p", help="plasma frequency, rad/s")
    parser.add_argument("--v-f", help="Fermi velocity, cm/s")
    parser.add_argument("--eps-coll", help="collision frequency / plasma frequency (default 0.001)")
    parser.add_argument("--eps1", help="permittivity of the incidence medium (default 1)")
    parser.add_argument("--eps2", help="permittivity of the exit medium, or glass|mica|ceramic (default 4)")
    parser.add_argument("--d-nm", help="film thickness, nm (default 100)")
    parser.add_argument("--theta-deg", help="incidence angle, degrees (default 0)")
    parser.add_argument("--omega", help="frequency / plasma frequency (default 1)")
    parser.add_argument(
        "--sweep", action="append",
        help=f"axis:start:stop:steps with axis omega|d|theta|eps2 (theta in degrees, "
        f"omega from {MIN_OMEGA})",
    )
    parser.add_argument("--oracle", action="store_const", const="true",
                        help="add local Drude slab columns")
    parser.add_argument("--vf-scale", help="multiply the Fermi velocity (local-limit checks)")
    parser.add_argument("--rel-tol", help="relative tolerance of the mode sums")
    parser.add_argument("--max-terms", help="maximum modes per impedance sum")
    parser.add_argument("--output", help="CSV destination (default stdout)")
    parser.add_argument("--workers", help="processes for sweep evaluation (default 1)")
    return parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_config(argv: list[str] | None = None, config_path: str | None = None) -> RunConfiguration:
    """Resolve flags, optional config file and defaults into a validated configuration.

    Raises
    ------
    UsageError
        Unknown key, malformed or out-of-range value, or conflicting sweeps.
    """
    parser = _build_parser()
    parser.__class__ = _Parser
    ns = vars(parser.parse_args([] if argv is None else argv))

    sweeps = ns.pop("sweep", None)
    if sweeps:
        parsed = [_sweep(s) for s in sweeps]
        if len(set(parsed)) > 1:
            raise UsageError(f"conflicting sweeps: {', '.join(sweeps)}")
        ns["sweep"] = sweeps[0]

    path = ns.pop("config", config_path)
    raw = read_config_file(path) if path else {}
    raw.update(ns)

    values = {key: _PARSERS[key](token) for key, token in raw.items()}

    preset = METAL_PRESETS[values.get("preset", "sodium")]
    values.setdefault("omega_p", preset.omega_p)
    values.setdefault("v_f", preset.v_f)
    cfg = RunConfiguration(**values)
    _validate(cfg)
    return cfg


def _validate(cfg: RunConfiguration):
    if not cfg.vf_scale > 0:
        raise UsageError(f"vf-scale must be positive, got {cfg.vf_scale!r}")
    if not cfg.v_f * cfg.vf_scale < SPEED_OF_LIGHT:
        raise UsageError("scaled Fermi velocity must stay below the speed of light")
    if cfg.workers < 1:
        raise UsageError(f"workers must be at least 1, got {cfg.workers!r}")
    try:
        cfg.metal()
        cfg.stack()
        cfg.wave()
        cfg.control()
        cfg.sweep_spec()
    except (DomainError, ConfigurationError) as err:
        raise UsageError(str(err)) from None


# ---- CSV output -----------------------------------------------------------------

def _num(x) -> str:
    if x is None:
        return "NaN"
    if isinstance(x, int):
        return str(x)
    x = float(x)
    return "NaN" if math.isnan(x) else repr(x)


def csv_header(with_oracle: bool, with_error: bool = False) -> list[str]:
    cols = ["omega_ratio", "d_nm", "theta_deg", "eps1", "eps2", "T", "R", "A"]
    if with_oracle:
        cols += ["T_oracle", "R_oracle", "A_oracle"]
    cols += ["terms_used", "tail_bound"]
    if with_error:
        cols.append("error")
    return cols


def emit_csv(rows, destination, with_oracle: bool = False):
    """Write rows as CSV to a path or a text stream.

    Numbers use the shortest round-trip decimal form; failed rows carry
    ``NaN`` results and their message in a trailing ``error`` column, which
    is present only when some row failed.
    """
    with_error = any(r.error is not None for r in rows)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(csv_header(with_oracle, with_error))
    for r in rows:
        line = [
            _num(r.omega_ratio), _num(r.d_nm), _num(math.degrees(r.theta)),
            _num(r.eps1), _num(r.eps2),
            _num(r.transmittance), _num(r.reflectance), _num(r.absorptance),
        ]
        if with_oracle:
            line += [_num(r.transmittance_oracle), _num(r.reflectance_oracle), _num(r.absorptance_oracle)]
        terms = int(r.terms_used) if r.error is None else math.nan
        line += [_num(terms), _num(r.tail_bound)]
        if with_error:
            line.append(r.error or "")
        writer.writerow(line)
    text = buf.getvalue()
    if isinstance(destination, (str, bytes)) or hasattr(destination, "__fspath__"):
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        destination.write(text)


def run(cfg: RunConfiguration):
    spec = cfg.sweep_spec()
    if spec is None:
        return [evaluate_point(cfg.metal(), cfg.stack(), cfg.wave(), cfg.control(), cfg.oracle)]
    return run_sweep(spec, cfg.control(), cfg.oracle, cfg.workers)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
    except UsageError as err:
        print(f"swavefilm: usage error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as err:
        print(f"swavefilm: cannot read config: {err}", file=sys.stderr)
        return EXIT_IO

    rows = run(cfg)
    try:
        emit_csv(rows, cfg.output if cfg.output else sys.stdout, cfg.oracle)
    except OSError as err:
        print(f"swavefilm: cannot write output: {err}", file=sys.stderr)
        return EXIT_IO

    failed = [r for r in rows if r.error is not None]
    if failed:
        print(f"swavefilm: {len(failed)} of {len(rows)} points failed: {failed[0].error}", file=sys.stderr)
        return EXIT_MODEL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
