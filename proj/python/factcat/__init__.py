"""The category of factorization of a commutative cancellative monoid."""

from ._core import *  # noqa: F401,F403
from ._core import (
    CapabilityError,
    FactcatError,
    GuardError,
    Monoid,
    Morphism,
    ParseError,
    RangeError,
    ValidationError,
)

__all__ = [name for name in dir() if not name.startswith("_")]
