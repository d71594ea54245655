"""Degree-growth functions f: N_{>0} -> N.

Besides evaluation each function reports ``arith_until(i)``: the largest
``j >= i`` such that ``f(t+1) - f(t) == 1`` for every ``t`` in ``[i, j)``, or
``None`` when the unit steps never stop.  The greedy-length computation uses
this to switch to closed forms on stretches of unit growth.
"""

from __future__ import annotations

from ..counts import pow2, short


class GrowthFunction:
    name = "growth"

    def __call__(self, i):
        raise NotImplementedError

    def arith_until(self, i):
        return i

    def check_monotone(self, upto):
        prev = self(1)
        for i in range(2, upto + 1):
            cur = self(i)
            if cur < prev:
                raise ValueError(f"{self} decreases at {i}")
            prev = cur


class Arithmetic(GrowthFunction):
    """f(i) = s + i - 1."""

    name = "arithmetic"

    def __init__(self, s):
        if s < 0:
            raise ValueError("s must be nonnegative")
        self.s = s

    def __call__(self, i):
        return self.s + i - 1

    def arith_until(self, i):
        return None

    def __repr__(self):
        return f"Arithmetic({self.s})"


class RepeatFirst(GrowthFunction):
    """g(1) = r and g(i) = i + r - 2 for i >= 2 (one repeated degree, then unit steps)."""

    name = "g"

    def __init__(self, r):
        if r < 0:
            raise ValueError("r must be nonnegative")
        self.r = r

    def __call__(self, i):
        if i < 1:
            raise ValueError("growth functions start at 1")
        return self.r if i == 1 else i + self.r - 2

    def arith_until(self, i):
        return i if i == 1 else None

    def __repr__(self):
        return f"RepeatFirst({self.r})"


class Doubling(GrowthFunction):
    """f(i) = 2^i * r."""

    name = "doubling"

    def __init__(self, r):
        if r < 1:
            raise ValueError("r must be positive")
        self.r = r

    def __call__(self, i):
        return pow2(i, self.r, expr=f"2^{short(i)}*{self.r}")

    def __repr__(self):
        return f"Doubling({self.r})"


class Table(GrowthFunction):
    """Explicit finite list of values f(1), f(2), ...; monotone."""

    name = "table"

    def __init__(self, values):
        values = [int(v) for v in values]
        if not values:
            raise ValueError("empty growth table")
        if any(b < a for a, b in zip(values, values[1:])) or values[0] < 0:
            raise ValueError("growth table must be nonnegative and nondecreasing")
        self.values = values

    def __call__(self, i):
        if not 1 <= i <= len(self.values):
            raise IndexError(f"growth table has no entry {i} (length {len(self.values)})")
        return self.values[i - 1]

    def arith_until(self, i):
        j = i
        while j < len(self.values) and self.values[j] - self.values[j - 1] == 1:
            j += 1
        return j

    def __repr__(self):
        return f"Table({self.values})"


class Shifted(GrowthFunction):
    """i -> base(i + offset)."""

    def __init__(self, base, offset):
        self.base = base
        self.offset = offset
        self.name = base.name

    def __call__(self, i):
        return self.base(i + self.offset)

    def arith_until(self, i):
        j = self.base.arith_until(i + self.offset)
        return None if j is None else j - self.offset

    def __repr__(self):
        return f"Shifted({self.base!r}, {self.offset})"


class PiecewiseGn(GrowthFunction):
    """The n-block growth function: block j is a copy of RepeatFirst(r_j) shifted past
    the earlier blocks, with r_1 = r and r_{j+1} = (length so far) + r - j.

    Block lengths come from the greedy-length recursion, so building one of
    these for large parameters is as expensive as that recursion.
    """

    name = "g_n"

    def __init__(self, r, m, n):
        from .greedy import psi

        if n < 1:
            raise ValueError("n must be >= 1")
        self.r, self.m, self.n = r, m, n
        self.starts = []  # B_{j-1}: number of indices before block j
        self.rs = []
        total = 0
        for j in range(1, n + 1):
            rj = total + r - (j - 1)
            self.starts.append(total)
            self.rs.append(rj)
            if j < n:
                total = total + psi(RepeatFirst(rj), m)

    def _block(self, i):
        j = len(self.starts) - 1
        while j > 0 and i <= self.starts[j]:
            j -= 1
        return j

    def __call__(self, i):
        if i < 1:
            raise ValueError("growth functions start at 1")
        j = self._block(i)
        return RepeatFirst(self.rs[j])(i - self.starts[j])

    def arith_until(self, i):
        j = self._block(i)
        local = i - self.starts[j]
        if local == 1:
            return i
        if j + 1 < len(self.starts):
            end = self.starts[j + 1]
            # the step into the next block is a unit step as well
            if self(end + 1) - self(end) == 1:
                return end + 1
            return end
        return None

    def __repr__(self):
        return f"PiecewiseGn({self.r}, {self.m}, {self.n})"
