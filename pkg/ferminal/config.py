"""
Process-wide numeric settings.

Library functions accept keyword overrides that default to None;
None means "use :func:`get_settings`".
"""

import logging
import os
from dataclasses import dataclass, fields, replace
from typing import Dict, Mapping, Optional, Union

logger = logging.getLogger(__name__)

ENV_PREFIX = "FERMINAL_"


@dataclass(frozen=True)
class Settings:
    """
    Tolerances and size limits.
    """

    compress_tolerance: float = 1e-12
    """
    Coefficients at or below this magnitude are dropped by default compression.
    """
    hermiticity_tolerance: float = 1e-10
    unitarity_tolerance: float = 1e-8
    """
    Largest allowed entry of U^dagger U - I for basis rotations.
    """
    fourier_tolerance: float = 1e-9
    dense_mode_limit: int = 14
    """
    Largest mode count for dense Gaussian-state numerics.
    """
    sparse_qubit_limit: int = 16
    dense_eigen_crossover: int = 12
    """
    Up to this many qubits the eigensolver diagonalizes densely.
    """
    trotter_mode_limit: int = 10
    workers: int = 1
    """
    Threads used by embarrassingly parallel loops.
    """

    def __post_init__(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if value < 0:
                raise ValueError("%s must not be negative, got %r" % (f.name, value))
        if self.workers < 1:
            raise ValueError("workers must be at least 1, got %r" % self.workers)

    @classmethod
    def from_env(
        cls, environ: Optional[Mapping[str, str]] = None, base: Optional["Settings"] = None
    ) -> "Settings":
        """
        Overlay ``FERMINAL_<FIELD>`` environment variables on top of
        ``base`` (or the defaults).

        :param environ: mapping to read instead of :data:`os.environ`
        :param base: settings to start from
        :return: new Settings
        """
        if environ is None:
            environ = os.environ
        overrides: Dict[str, Union[int, float]] = {}
        for f in fields(cls):
            key = ENV_PREFIX + f.name.upper()
            if key not in environ:
                continue
            raw = environ[key]
            try:
                overrides[f.name] = int(raw) if f.type in (int, "int") else float(raw)
            except ValueError:
                raise ValueError("bad value for %s: %r" % (key, raw)) from None
            logger.debug("setting %s=%s from environment", f.name, raw)
        return replace(base if base is not None else cls(), **overrides)


_current: Optional[Settings] = None


def get_settings() -> Settings:
    """
    :return: the process-wide settings, read from the environment on first use.
    """
    global _current
    if _current is None:
        _current = Settings.from_env()
    return _current


def set_settings(settings: Optional[Settings]) -> None:
    """
    Replace the process-wide settings. Passing None re-reads the
    environment on next access.
    """
    global _current
    _current = settings
