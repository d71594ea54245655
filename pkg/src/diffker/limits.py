"""Process-wide resource limits.

All big-integer growth is governed by a bit-length cap; explicit
enumerations are governed by an element-count cap.  Both can be overridden
temporarily with the context managers below.  The default bit cap may be
set through the ``DIFFKER_BIT_CAP`` environment variable.
"""

from __future__ import annotations

import os
import threading
from contextlib import ExitStack, contextmanager

DEFAULT_BIT_CAP = 1 << 24
DEFAULT_ENUMERATION_LIMIT = 100_000
DEFAULT_ITERATION_BUDGET = 10_000_000


def _env_int(name, default):
    raw = os.environ.get(name)
    if not raw:
        return default
    value = int(raw, 0)
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {raw!r}")
    return value


_state = threading.local()


def _get(attr, default):
    return getattr(_state, attr, default)


def bit_cap() -> int:
    return _get("bit_cap", _env_int("DIFFKER_BIT_CAP", DEFAULT_BIT_CAP))


def enumeration_limit() -> int:
    return _get("enumeration_limit", DEFAULT_ENUMERATION_LIMIT)


def iteration_budget() -> int:
    return _get("iteration_budget", DEFAULT_ITERATION_BUDGET)


def symbolic_enabled() -> bool:
    return _get("symbolic", False)


@contextmanager
def _override(attr, value):
    missing = object()
    old = getattr(_state, attr, missing)
    setattr(_state, attr, value)
    try:
        yield value
    finally:
        if old is missing:
            delattr(_state, attr)
        else:
            setattr(_state, attr, old)


@contextmanager
def limits(bits=None, enumeration=None, iterations=None):
    """Override any subset of the limits for the current thread."""
    with ExitStack() as stack:
        if bits is not None:
            stack.enter_context(_override("bit_cap", int(bits)))
        if enumeration is not None:
            stack.enter_context(_override("enumeration_limit", int(enumeration)))
        if iterations is not None:
            stack.enter_context(_override("iteration_budget", int(iterations)))
        yield


def symbolic():
    """Allow powers of two beyond the bit cap to be returned as :class:`Huge`."""
    return _override("symbolic", True)
