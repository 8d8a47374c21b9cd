"""Counter-based random number streams for reproducible simulations.

Every stochastic routine in this package takes an explicit ``numpy``
``Generator``.  ``make_rng(seed, stream)`` builds one on top of the Philox
counter-based bit generator, keyed by the 128-bit pair ``(seed, stream)``.
Distinct (seed, stream) pairs yield statistically independent sequences, and
the same pair always reproduces the same sequence, so Monte Carlo trials can
be keyed by trial index and run serially or in parallel with identical
results.
"""

import numpy as np

_MASK64 = (1 << 64) - 1


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Return a generator for the given (seed, stream) pair.

    seed   -- 64-bit experiment seed (wider ints are masked)
    stream -- substream id, e.g. a trial index
    """
    key = np.array([seed & _MASK64, stream & _MASK64], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))
