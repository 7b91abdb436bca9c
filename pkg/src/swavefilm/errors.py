"""Exception hierarchy shared by the model, the sweep engine and the CLI."""


class FilmModelError(Exception):
    """Base class for errors raised while evaluating the optical model."""


class DomainError(FilmModelError, ValueError):
    """A parameter lies outside the domain of the formula that consumes it."""


class BranchPointError(DomainError):
    """The transverse permittivity was requested exactly at its logarithmic branch point."""


class ResonanceError(FilmModelError):
    """A mode denominator vanished, i.e. the series hits a pole."""

    def __init__(self, message, mode=None):
        super().__init__(message)
        self.mode = mode


class ConvergenceError(FilmModelError):
    """The mode sum did not reach the requested tolerance within ``max_terms``.

    ``best_estimate`` holds the tail-corrected value reached before giving up.
    """

    def __init__(self, message, best_estimate=None, terms_used=0, tail_bound=float("inf")):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.terms_used = terms_used
        self.tail_bound = tail_bound


class PoleError(FilmModelError):
    """An amplitude factor was requested exactly at its pole."""


class DegenerateConfigurationError(FilmModelError):
    """The common denominator of the reflectance and transmittance vanished."""


class ConfigurationError(ValueError):
    """Invalid sweep or run configuration, detected before any evaluation."""
