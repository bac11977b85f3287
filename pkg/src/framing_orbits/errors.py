"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class FramingError(Exception):
    """Base class for every error raised by :mod:`framing_orbits`."""

    exit_code = 1


class InvalidInputError(FramingError, ValueError):
    """Malformed data: wrong vector lengths, unknown generator, bad JSON."""

    exit_code = 1


class InfeasibleError(FramingError):
    """Well-formed data describing an object that cannot exist.

    Examples are a boundary profile violating the Poincare-Hopf sum, or an
    orbit key whose ``a_tilde`` does not divide the boundary gcd.
    """

    exit_code = 2


class PreconditionError(InfeasibleError):
    """An invariant was requested outside the domain where it is defined."""


class UnsupportedCaseError(InfeasibleError):
    """The requested classification is deliberately not provided."""


class UnresolvedCaseError(InfeasibleError):
    """A configuration the canonicalizer refuses to guess about."""
