"""Exception types and enumeration caps shared by every module."""

from __future__ import annotations

import contextlib
import contextvars
import os

__all__ = [
    "KloostermanError",
    "DegreeOutOfRange",
    "NotIrreducible",
    "DivisionByZero",
    "NonDivisorSubfieldDegree",
    "ZeroInput",
    "NonDivisorOrder",
    "FieldTooLarge",
    "OddDegree",
    "ZeroCoefficient",
    "DegenerateC",
    "NonIntegralCoefficient",
    "NonIntegralCount",
    "CountMismatch",
    "caps_lifted",
    "check_cap",
]


class KloostermanError(ValueError):
    """Base class for every domain error raised by this package."""


class DegreeOutOfRange(KloostermanError):
    pass


class NotIrreducible(KloostermanError):
    pass


class DivisionByZero(KloostermanError, ZeroDivisionError):
    pass


class NonDivisorSubfieldDegree(KloostermanError):
    pass


class ZeroInput(KloostermanError):
    pass


class NonDivisorOrder(KloostermanError):
    pass


class FieldTooLarge(KloostermanError):
    """An exhaustive operation was asked to run above its size cap."""


class OddDegree(KloostermanError):
    pass


class ZeroCoefficient(KloostermanError):
    pass


class DegenerateC(KloostermanError):
    pass


class NonIntegralCoefficient(KloostermanError):
    pass


class NonIntegralCount(KloostermanError):
    pass


class CountMismatch(KloostermanError):
    """Two independent counting routes disagreed."""


FORCE_ENV = "BINKLOOST_FORCE"

_lifted: contextvars.ContextVar[bool] = contextvars.ContextVar("caps_lifted", default=False)


@contextlib.contextmanager
def caps_lifted(enabled: bool = True):
    """Temporarily disable the enumeration caps (the CLI's ``--force``)."""
    token = _lifted.set(enabled)
    try:
        yield
    finally:
        _lifted.reset(token)


def _env_force() -> bool:
    return os.environ.get(FORCE_ENV, "").strip().lower() in {"1", "true", "yes", "on"}


def check_cap(m: int, cap: int, what: str) -> None:
    if m > cap and not (_lifted.get() or _env_force()):
        raise FieldTooLarge(f"{what}: m = {m} exceeds the cap m <= {cap} (use --force to lift)")
