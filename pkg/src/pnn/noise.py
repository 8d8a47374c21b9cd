"""Seeded pattern ensembles and the two distortion channels.

Sign noise ``a`` flips a coordinate's sign with probability a; level noise
``b`` replaces a coordinate's level with a uniform draw over the q-1 *other*
levels with probability b.  So b is the probability that the level actually
changes (the observable event).  Binary helpers cover the q=1 case used by
the decorrelating pipeline.

All generators are pure functions of their arguments and the supplied
``numpy`` Generator (see :mod:`pnn.rng`): same seed and stream, same output.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import NetworkKind, Pattern


@dataclass(frozen=True)
class NoiseSpec:
    """Distortion rates: sign-flip probability a, level-change probability b."""

    a: float = 0.0
    b: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.a <= 1.0:
            raise ValueError(f"a must be in [0, 1], got {self.a}")
        if not 0.0 <= self.b <= 1.0:
            raise ValueError(f"b must be in [0, 1], got {self.b}")


def random_qnary_patterns(
    m: int, n: int, q: int, kind: NetworkKind, rng: np.random.Generator
) -> list[Pattern]:
    """M random patterns with i.i.d. equiprobable coordinates.

    PNN2 coordinates are uniform over 2q signed states, PNN3 over q unsigned
    states (all signs +1).
    """
    if m < 1 or n < 1 or q < 1:
        raise ValueError(f"need m, n, q >= 1, got m={m} n={n} q={q}")
    patterns = []
    for _ in range(m):
        levels = rng.integers(1, q + 1, size=n)
        if kind is NetworkKind.PNN2:
            signs = 2 * rng.integers(0, 2, size=n) - 1
        else:
            signs = np.ones(n, dtype=np.int8)
        patterns.append(Pattern(signs, levels))
    return patterns


def apply_qnary_noise(
    pattern: Pattern, q: int, spec: NoiseSpec, rng: np.random.Generator
) -> Pattern:
    """Distort each coordinate independently per ``spec``.

    A triggered level replacement never reproduces the old level.  With q=1
    there are no other levels, so only the sign channel acts.
    """
    signs = pattern.signs.copy()
    levels = pattern.levels.copy()
    n = len(pattern)
    if spec.a > 0:
        flip = rng.random(n) < spec.a
        signs[flip] = -signs[flip]
    if spec.b > 0 and q > 1:
        hit = rng.random(n) < spec.b
        offsets = rng.integers(1, q, size=n)
        shifted = (levels - 1 + offsets) % q + 1
        levels[hit] = shifted[hit]
    return Pattern(signs, levels)


def random_binary_patterns(m: int, n: int, rng: np.random.Generator) -> list[np.ndarray]:
    """M i.i.d. uniform +-1 vectors of length n."""
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1, got m={m} n={n}")
    return [(2 * rng.integers(0, 2, size=n) - 1).astype(np.int8) for _ in range(m)]


def apply_binary_noise(y: np.ndarray, a: float, rng: np.random.Generator) -> np.ndarray:
    """Flip each +-1 coordinate independently with probability a."""
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"a must be in [0, 1], got {a}")
    y = np.asarray(y, dtype=np.int8)
    out = y.copy()
    flip = rng.random(y.size) < a
    out[flip] = -out[flip]
    return out


def correlated_binary_patterns(
    m: int, n: int, overlap_fraction: float, rng: np.random.Generator
) -> list[np.ndarray]:
    """M +-1 vectors sharing a random template.

    Each coordinate copies the template with probability ``overlap_fraction``
    and is drawn uniformly otherwise, giving strongly correlated ensembles
    for stress-testing binary retrieval.
    """
    if not 0.0 <= overlap_fraction < 1.0:
        raise ValueError(f"overlap_fraction must be in [0, 1), got {overlap_fraction}")
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1, got m={m} n={n}")
    template = (2 * rng.integers(0, 2, size=n) - 1).astype(np.int8)
    patterns = []
    for _ in range(m):
        fresh = (2 * rng.integers(0, 2, size=n) - 1).astype(np.int8)
        copy_mask = rng.random(n) < overlap_fraction
        patterns.append(np.where(copy_mask, template, fresh).astype(np.int8))
    return patterns
