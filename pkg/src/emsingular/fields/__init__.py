"""Field evaluators: static magnetic, static electric, retarded."""

from .base import PotentialResult, e_from_potentials
from .medium import VACUUM, MediumConstants

__all__ = ["PotentialResult", "e_from_potentials", "MediumConstants", "VACUUM"]
