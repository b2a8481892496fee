"""Linear homogeneous medium constants."""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class MediumConstants:
    """Permittivity, permeability, and the derived wave speed.

    Only eps * mu enters the wave speed; the defaults are SI vacuum
    values.  c is stored rather than recomputed so the vacuum speed is
    the exact defined integer.
    """

    eps: float
    mu: float
    c: float

    @classmethod
    def from_eps_mu(cls, eps: float, mu: float) -> "MediumConstants":
        if eps <= 0.0 or mu <= 0.0:
            raise ValueError("eps and mu must be positive")
        return cls(eps, mu, 1.0 / math.sqrt(eps * mu))


MU0 = 4.0e-7 * math.pi
C0 = 299792458.0
EPS0 = 1.0 / (MU0 * C0 * C0)

VACUUM = MediumConstants(EPS0, MU0, C0)
