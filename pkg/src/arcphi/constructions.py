"""Generators for the extremal and near-extremal configurations.

The two continuous families achieve the bounds with equality exactly when
the perimeter divides evenly:

* ``equispaced_density``: n equal arcs equally spread; the density bound is
  tight when n = W(xi) * L.
* ``alternating_partition``: (k+1) n arcs of length 1/sqrt(k^2+1) assigned
  round-robin to k+1 classes; the colouring bound is tight by construction
  of the perimeter.

On the discrete side, ``block_colouring`` produces the periodic block
pattern, and ``blowup`` maps any colouring of 1..n to an interval partition
of a circle of perimeter n/m via cells of width 1/m.
"""

from __future__ import annotations

import math

from .circle import Arc, ArcSet, Circle, Partition, normalize
from .discrete import DiscreteColouring
from .errors import DomainError


def equispaced_density(xi: float, L: float, n: int) -> ArcSet:
    """n arcs of length xi*L/n with starts at j*L/n, j = 0..n-1."""
    if not 0.0 <= xi <= 1.0:
        raise DomainError(f"density must lie in [0, 1], got {xi}")
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if xi == 0.0:
        return normalize([], L)
    if xi == 1.0:
        return ArcSet(Circle(float(L)), (Arc(0.0, float(L)),))
    length = xi * L / n
    return normalize([(j * L / n, length) for j in range(n)], L)


def alternating_partition(k: int, n: int) -> tuple[Partition, Circle]:
    """Cyclically alternating equal-arc partition that attains the
    colouring bound.

    The circle gets perimeter n (k+1) / sqrt(k^2+1); arc t (of (k+1) n
    arcs of length 1/sqrt(k^2+1)) goes to class t mod (k+1).
    """
    if k < 0 or n < 1:
        raise DomainError(f"need k >= 0 and n >= 1, got k={k}, n={n}")
    u = 1.0 / math.sqrt(k * k + 1.0)
    total = (k + 1) * n
    L = total * u
    circle = Circle(L)
    by_class: list[list[tuple[float, float]]] = [[] for _ in range(k + 1)]
    for t in range(total):
        start = t * L / total  # == t * u up to rounding, tiles exactly
        length = (t + 1) * L / total - start
        by_class[t % (k + 1)].append((start, length))
    parts = tuple(normalize(raw, L) for raw in by_class)
    return Partition(circle, parts), circle


def block_colouring(k: int, n: int, t_blocks: int) -> DiscreteColouring:
    """Periodic block colouring: x gets colour (floor((x-1)/t) mod (k+1)) + 1.

    Blocks of t consecutive integers cycle through the colours; the last
    block may be partial.
    """
    if k < 0 or n < 1 or t_blocks < 1:
        raise DomainError(
            f"need k >= 0, n >= 1, t_blocks >= 1, got {k}, {n}, {t_blocks}")
    colors = tuple(((x - 1) // t_blocks) % (k + 1) + 1 for x in range(1, n + 1))
    return DiscreteColouring(k=k, colors=colors)


def blowup(c: DiscreteColouring, m: int) -> tuple[Partition, Circle]:
    """Interval partition of the circle of perimeter n/m induced by a
    colouring: cell j = [(j-1)/m, j/m) joins the class of colour c(j)."""
    n = c.n
    if m < 1 or n < m:
        raise DomainError(f"need n >= m >= 1, got n={n}, m={m}")
    L = n / m
    circle = Circle(L)
    by_class: list[list[tuple[float, float]]] = [[] for _ in range(c.k + 1)]
    for j in range(1, n + 1):
        start = (j - 1) / m
        length = j / m - start  # end lands exactly on j/m
        by_class[c.colors[j - 1] - 1].append((start, length))
    parts = tuple(normalize(raw, L) for raw in by_class)
    return Partition(circle, parts), circle
