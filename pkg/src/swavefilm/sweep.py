"""One-dimensional parameter sweeps over frequency, thickness, angle or substrate."""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .errors import ConfigurationError, FilmModelError
from .impedance import SeriesControl
from .optics import evaluate
from .oracle import fresnel_slab
from .units import IncidentWave, MetalParameters, StackConfiguration

AXES = ("omega_ratio", "d_nm", "theta", "eps2")

#: Smallest allowed start of a frequency sweep; the model is singular at Omega = 0.
MIN_OMEGA = 0.01


@dataclass(frozen=True)
class SweepSpec:
    """Sweep of one ``axis`` over ``steps`` evenly spaced values in ``[start, stop]``.

    ``metal``, ``stack`` and ``wave`` supply the values of the fixed
    parameters; the swept one is overwritten at each grid point.  The
    ``theta`` axis is in radians.
    """

    axis: str
    start: float
    stop: float
    steps: int
    metal: MetalParameters
    stack: StackConfiguration
    wave: IncidentWave

    def __post_init__(self):
        if self.axis not in AXES:
            raise ConfigurationError(f"unknown sweep axis {self.axis!r}; expected one of {AXES}")
        if not isinstance(self.steps, (int, np.integer)) or self.steps < 2:
            raise ConfigurationError(f"steps must be an integer >= 2, got {self.steps!r}")
        if not (math.isfinite(self.start) and math.isfinite(self.stop)) or not self.start < self.stop:
            raise ConfigurationError(f"need start < stop, got {self.start!r}, {self.stop!r}")
        if self.axis == "omega_ratio" and self.start < MIN_OMEGA:
            raise ConfigurationError(f"omega_ratio sweep must start at >= {MIN_OMEGA}")
        if self.axis in ("d_nm", "eps2") and not self.start > 0:
            raise ConfigurationError(f"{self.axis} sweep must start above 0")
        if self.axis == "theta" and not (self.start >= 0 and self.stop < math.pi / 2):
            raise ConfigurationError("theta sweep must lie in [0, pi/2)")

    def grid(self) -> list[float]:
        return [float(x) for x in np.linspace(self.start, self.stop, self.steps)]

    def point(self, value: float):
        """``(metal, stack, wave)`` with the swept parameter set to ``value``."""
        stack, wave = self.stack, self.wave
        if self.axis == "omega_ratio":
            wave = replace(wave, omega_ratio=value)
        elif self.axis == "theta":
            wave = replace(wave, theta=value)
        elif self.axis == "d_nm":
            stack = replace(stack, d_nm=value)
        else:
            stack = replace(stack, eps2=value)
        return self.metal, stack, wave


@dataclass(frozen=True)
class SweepRow:
    omega_ratio: float
    d_nm: float
    theta: float
    eps1: float
    eps2: float
    transmittance: float = math.nan
    reflectance: float = math.nan
    absorptance: float = math.nan
    transmittance_oracle: float | None = None
    reflectance_oracle: float | None = None
    absorptance_oracle: float | None = None
    terms_used: float = math.nan
    tail_bound: float = math.nan
    error: str | None = None
    error_kind: str | None = None


def evaluate_point(metal, stack, wave, control=SeriesControl(), with_oracle=False) -> SweepRow:
    """One row; model errors become an error row instead of propagating."""
    base = dict(
        omega_ratio=wave.omega_ratio, d_nm=stack.d_nm, theta=wave.theta,
        eps1=stack.eps1, eps2=stack.eps2,
    )
    if with_oracle:
        try:
            o = fresnel_slab(metal, stack, wave)
            base.update(
                transmittance_oracle=o.transmittance,
                reflectance_oracle=o.reflectance,
                absorptance_oracle=o.absorptance,
            )
        except FilmModelError:
            base.update(
                transmittance_oracle=math.nan, reflectance_oracle=math.nan, absorptance_oracle=math.nan
            )
    try:
        c, z = evaluate(metal, stack, wave, control)
    except FilmModelError as err:
        return SweepRow(**base, error=str(err), error_kind=type(err).__name__)
    return SweepRow(
        **base,
        transmittance=c.transmittance,
        reflectance=c.reflectance,
        absorptance=c.absorptance,
        terms_used=z.terms_used,
        tail_bound=z.tail_bound,
    )


def _evaluate_task(args):
    spec, value, control, with_oracle = args
    return evaluate_point(*spec.point(value), control, with_oracle)


def run_sweep(
    spec: SweepSpec,
    control: SeriesControl = SeriesControl(),
    with_oracle: bool = False,
    workers: int = 1,
) -> list[SweepRow]:
    """Evaluate every grid point of ``spec``, in axis order.

    With ``workers > 1`` points are evaluated in separate processes; the
    result is identical to the sequential run.
    """
    tasks = [(spec, value, control, with_oracle) for value in spec.grid()]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_evaluate_task, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    return [_evaluate_task(t) for t in tasks]
