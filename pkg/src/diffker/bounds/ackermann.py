"""The two-argument Ackermann function, its iterates, and the n-fold variant A_n."""

from __future__ import annotations

import threading

from .. import limits
from ..counts import Huge, checked, pow2, short
from ..errors import BudgetExceeded, ValueExceedsLimit

_cache = {}
_cache_lock = threading.Lock()


def ackermann(x, y):
    """A(0,y)=y+1, A(x,0)=A(x-1,1), A(x,y)=A(x-1,A(x,y-1))."""
    if x < 0 or y < 0:
        raise ValueError("Ackermann arguments must be nonnegative")
    if x == 0:
        return y + 1
    if x == 1:
        return y + 2
    if x == 2:
        return 2 * y + 3
    if x == 3:
        if isinstance(y, Huge):
            raise ValueExceedsLimit(f"A(3, {y.describe()})", None, limits.bit_cap())
        return pow2(y + 3, expr=f"A(3,{short(y)})") - 3
    if isinstance(y, Huge):
        raise ValueExceedsLimit(f"A({x}, {y.describe()})", None, limits.bit_cap())
    with _cache_lock:
        hit = _cache.get((x, y))
    if hit is not None:
        return hit
    # A(x, y) = A(x-1, .) applied y + 1 times to 1
    value = iterate(x - 1, y + 1, 1)
    if isinstance(value, int):
        with _cache_lock:
            _cache[(x, y)] = value
    return value


def iterate(x, k, y0):
    """A(x, .) applied ``k`` times starting from ``y0``."""
    if k < 0:
        raise ValueError("iteration count must be nonnegative")
    if x == 0:
        return y0 + k
    if x == 1:
        return y0 + 2 * k
    if x == 2:
        # y -> 2y + 3 has fixed point -3
        if isinstance(k, Huge):
            raise ValueExceedsLimit(f"A(2, .)^{k.describe()}", None, limits.bit_cap())
        return pow2(k, y0 + 3, expr=f"A(2,.)^{short(k)}({short(y0)})") - 3
    if isinstance(k, Huge):
        raise ValueExceedsLimit(f"A({x}, .)^{k.describe()}", None, limits.bit_cap())
    budget = limits.iteration_budget()
    if k > budget:
        # every step at least doubles, so k steps from y0 >= 0 exceed any sane cap
        if k > limits.bit_cap() + 64:
            raise ValueExceedsLimit(f"A({x}, .)^{short(k)}({short(y0)})", k, limits.bit_cap())
        raise BudgetExceeded(f"{k} iterations of A({x}, .) exceed the budget {budget}")
    y = y0
    for _ in range(k):
        y = ackermann(x, y)
    return y


def iterated_ackermann(n, x, y):
    """A_1(x,y) = A(x,y-1) - 1 and A_n(x,y) = A(x, A_{n-1}(x,y) - 1) - 1."""
    if n < 1 or y < 1:
        raise ValueError("A_n needs n >= 1 and y >= 1")
    value = ackermann(x, y - 1) - 1
    for _ in range(n - 1):
        value = ackermann(x, value - 1) - 1
    return checked(value, f"A_{n}({x},{y})")


def compare_iterates(x, a, u, b, v) -> int:
    """Sign of A(x,.)^a(u) - A(x,.)^b(v), exact even when neither side is computable.

    Common layers are peeled off (A(x, .) is strictly increasing), and what
    remains is evaluated until it passes the other side or hits the cap.
    """
    k = min(a, b)
    a, b = a - k, b - k
    if a == 0 and b == 0:
        return (u > v) - (u < v)
    sign = 1
    if a == 0:
        a, u, b, v = b, v, a, u
        sign = -1
    # now b == 0: compare A^a(u) with the plain value v
    if v.bit_length() >= limits.bit_cap() - 2:
        raise ValueExceedsLimit("comparison target", v.bit_length(), limits.bit_cap())
    cur = u
    for _ in range(a):
        try:
            cur = ackermann(x, cur)
        except ValueExceedsLimit:
            return sign
        if cur > v:
            return sign
    return sign * ((cur > v) - (cur < v))
