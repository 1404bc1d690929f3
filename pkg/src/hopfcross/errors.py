"""Exceptions shared across the package.

Verifiers return reports and never raise on mathematical failure;
constructors raise one of these when a precondition does not hold,
because continuing would silently skip axiom checks downstream.
"""

from __future__ import annotations


class HopfcrossError(Exception):
    """Base class for all package-specific errors."""


class PreconditionError(HopfcrossError):
    """A constructor precondition failed."""


class ClosureViolation(PreconditionError):
    """A product left the subspace it was supposed to stay in."""


class NonGroupTable(PreconditionError):
    """A multiplication table does not describe a group."""


class NotCentralIdempotent(PreconditionError):
    """The designated unit element is not a central idempotent."""


class NotIntegral(PreconditionError):
    """The given element is not a left integral."""


class NotCentral(PreconditionError):
    """The given element is not central."""


class NormalizationFailed(PreconditionError):
    """The integral/center pair does not normalize to the unit."""


class NotCocommutative(PreconditionError):
    """The construction needs a cocommutative Hopf algebra."""


class CoinvariantsMismatch(PreconditionError):
    """The coinvariants of the coaction differ from the embedded coefficients."""


class CompositeNotGauge(PreconditionError):
    """A convolution composite of gauge maps is not itself a gauge map."""


class SpecFileError(HopfcrossError):
    """A spec file failed to parse or validate; message names the JSON path."""
