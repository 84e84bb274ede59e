"""Size caps consulted by the enumeration routines.

The caps live in a context variable so a caller (the CLI, a test) can tighten
or relax them for one computation without threading them through every call.
"""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Limits:
    max_n: int = 12
    max_order: int = 10**6
    max_monomials: int = 2 * 10**6
    max_oracle_monomials: int = 5000


_current: contextvars.ContextVar[Limits] = contextvars.ContextVar(
    "perminvariants_limits", default=Limits()
)


def current() -> Limits:
    return _current.get()


@contextlib.contextmanager
def limits(**overrides):
    """Temporarily override caps, e.g. ``with limits(max_order=5000): ...``."""
    token = _current.set(replace(_current.get(), **overrides))
    try:
        yield _current.get()
    finally:
        _current.reset(token)
