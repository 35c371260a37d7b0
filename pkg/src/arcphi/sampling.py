"""Seeded random instances for the property suites and tests."""

from __future__ import annotations

import numpy as np

from .circle import ArcSet, normalize
from .discrete import DiscreteColouring


def rng_from_seed(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_arcset(
    rng: np.random.Generator,
    max_arcs: int = 8,
    L_range: tuple[float, float] = (1.0, 20.0),
) -> ArcSet:
    """Random arc set: up to max_arcs arcs from sorted uniform endpoints.

    Half the draws get an extra rotation so wrap-through-0 representations
    are exercised.
    """
    L = float(rng.uniform(*L_range))
    n = int(rng.integers(1, max_arcs + 1))
    pts = np.sort(rng.random(2 * n)) * L
    raw = [(float(pts[2 * i]), float(pts[2 * i + 1] - pts[2 * i]))
           for i in range(n)]
    if rng.random() < 0.5:
        shift = float(rng.random() * L)
        raw = [(s + shift, ln) for s, ln in raw]
    return normalize(raw, L)


def random_colouring(
    rng: np.random.Generator, k: int, n: int
) -> DiscreteColouring:
    colors = tuple(int(c) for c in rng.integers(1, k + 2, size=n))
    return DiscreteColouring(k=k, colors=colors)
