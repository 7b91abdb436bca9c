"""S-wave transmittance, reflectance and absorptance of a thin metal film
between two dielectric media, with specular reflection of the conduction
electrons at the film surfaces.
"""
from ._backend import BACKEND
from .dielectric import TransverseArgument, drude_permittivity, epsilon_transverse, mode_wavevector
from .errors import (
    BranchPointError,
    ConfigurationError,
    ConvergenceError,
    DegenerateConfigurationError,
    DomainError,
    FilmModelError,
    PoleError,
    ResonanceError,
)
from .impedance import (
    ImpedancePair,
    SeriesControl,
    impedance_antisymmetric,
    impedance_symmetric,
    impedances,
)
from .optics import (
    AmplitudePair,
    OpticalCoefficients,
    absorptance,
    amplitude_factors,
    coefficients,
    evaluate,
    reflectance,
    transmittance,
)
from .oracle import SlabModel, fresnel_slab
from .sweep import SweepRow, SweepSpec, run_sweep
from .units import (
    SODIUM,
    SUBSTRATE_PRESETS,
    IncidentWave,
    MetalParameters,
    StackConfiguration,
    reduced_thickness,
    relative_permittivity_ratio,
)

__version__ = "0.1.0"
