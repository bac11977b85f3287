"""Mapping class group orbits of framings and spin structures on surfaces with boundary."""

from .errors import (
    FramingError,
    InfeasibleError,
    InvalidInputError,
    PreconditionError,
    UnresolvedCaseError,
    UnsupportedCaseError,
)
from .framing import Framing, canonicalize, orbit_key, realize
from .generators import Generator
from .relative import BoundaryData, RelFraming, gen_arf, rel_canonicalize, rel_orbit_key
from .spin import QuadForm
from .surface import F2Class, SurfaceSig

__all__ = [
    "BoundaryData",
    "F2Class",
    "Framing",
    "FramingError",
    "Generator",
    "InfeasibleError",
    "InvalidInputError",
    "PreconditionError",
    "QuadForm",
    "RelFraming",
    "SurfaceSig",
    "UnresolvedCaseError",
    "UnsupportedCaseError",
    "canonicalize",
    "gen_arf",
    "orbit_key",
    "realize",
    "rel_canonicalize",
    "rel_orbit_key",
]
