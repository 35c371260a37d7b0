"""Piecewise-linear functions, on a circle or on a plain interval.

Used for the exact window-mass profiles (circular, wrapping between the
last and first breakpoint) and for the envelope functions of the integral
lower-bound certificates (plain interval).
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .errors import InvalidInputError


@dataclass(frozen=True)
class PiecewiseLinear:
    """Continuous piecewise-linear function given by breakpoint knots.

    ``period`` set: the function lives on a circle of that perimeter and
    interpolates cyclically from the last knot back to the first.  A single
    knot means a constant function.  ``period`` None: the domain is
    [xs[0], xs[-1]].
    """

    xs: tuple[float, ...]
    ys: tuple[float, ...]
    period: float | None = None

    def __post_init__(self):
        if len(self.xs) != len(self.ys) or not self.xs:
            raise InvalidInputError("need matching, nonempty knot vectors")
        if any(b < a for a, b in zip(self.xs, self.xs[1:])):
            raise InvalidInputError("knot positions must be sorted")
        if self.period is not None and (
            self.xs[0] < 0.0 or self.xs[-1] >= self.period
        ):
            raise InvalidInputError("circular knots must lie in [0, period)")

    def __call__(self, x: float) -> float:
        xs, ys = self.xs, self.ys
        if self.period is not None:
            L = self.period
            if len(xs) == 1:
                return ys[0]
            x = x % L
            i = bisect_right(xs, x) - 1
            if i < 0:  # before the first knot: segment wrapping from the last
                x0, y0 = xs[-1] - L, ys[-1]
                x1, y1 = xs[0], ys[0]
            elif i == len(xs) - 1:
                x0, y0 = xs[-1], ys[-1]
                x1, y1 = xs[0] + L, ys[0]
            else:
                x0, y0 = xs[i], ys[i]
                x1, y1 = xs[i + 1], ys[i + 1]
        else:
            if x < xs[0] or x > xs[-1]:
                raise InvalidInputError(f"{x} outside the domain")
            if len(xs) == 1:
                return ys[0]
            i = min(bisect_right(xs, x) - 1, len(xs) - 2)
            if i < 0:
                i = 0
            x0, y0, x1, y1 = xs[i], ys[i], xs[i + 1], ys[i + 1]
        if x1 == x0:
            return y0
        t = (x - x0) / (x1 - x0)
        return y0 + t * (y1 - y0)

    def slopes(self) -> list[float]:
        """Slope of every segment (including the wrap segment if circular)."""
        out = []
        n = len(self.xs)
        for i in range(n - 1):
            dx = self.xs[i + 1] - self.xs[i]
            if dx > 0.0:
                out.append((self.ys[i + 1] - self.ys[i]) / dx)
        if self.period is not None and n > 1:
            dx = self.xs[0] + self.period - self.xs[-1]
            if dx > 0.0:
                out.append((self.ys[0] - self.ys[-1]) / dx)
        return out

    def integral(self) -> float:
        """Exact integral over the full domain (whole circle if periodic)."""
        xs, ys = self.xs, self.ys
        n = len(xs)
        if self.period is not None and n == 1:
            return ys[0] * self.period
        total = 0.0
        for i in range(n - 1):
            total += 0.5 * (ys[i] + ys[i + 1]) * (xs[i + 1] - xs[i])
        if self.period is not None:
            dx = xs[0] + self.period - xs[-1]
            total += 0.5 * (ys[-1] + ys[0]) * dx
        return total

    def integral_over(self, segments) -> float:
        """Exact integral over a union of [lo, hi] intervals.

        Every interval must be breakpoint-aligned or interior to a linear
        piece for exactness; we integrate the interpolant, which is exact
        for the profiles produced in this package because their breakpoints
        include all arc endpoints.
        """
        total = 0.0
        for lo, hi in segments:
            if hi <= lo:
                continue
            cuts = [lo]
            for x in self.xs:
                if lo < x < hi:
                    cuts.append(x)
            cuts.append(hi)
            cuts.sort()
            for a, b in zip(cuts, cuts[1:]):
                total += 0.5 * (self(a) + self(b)) * (b - a)
        return total
