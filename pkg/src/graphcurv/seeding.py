"""Counter-based deterministic randomness.

Everything random in this package is a pure function of (seed, counter...)
through a SplitMix64 finalizer, so output is bit-identical across platforms,
runs, and any parallel schedule.  No stateful RNG is ever shared.
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(x: int) -> int:
    """SplitMix64 finalizer on a 64-bit word."""
    x &= _MASK
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9 & _MASK
    x = (x ^ (x >> 27)) * 0x94D049BB133111EB & _MASK
    return (x ^ (x >> 31)) & _MASK


def counter_value(seed: int, *counters: int) -> int:
    """Uniform 64-bit value for a (seed, counter...) tuple."""
    x = mix64(seed)
    for c in counters:
        x = mix64((x + _GOLDEN + c) & _MASK)
    return x


def counter_values_np(seed: int, counters: np.ndarray, *prefix: int) -> np.ndarray:
    """Vectorized :func:`counter_value` over a uint64 counter array.

    Equivalent to ``[counter_value(seed, *prefix, int(c)) for c in counters]``.
    """
    x = mix64(seed)
    for c in prefix:
        x = mix64((x + _GOLDEN + c) & _MASK)
    with np.errstate(over="ignore"):
        z = counters.astype(np.uint64) + np.uint64((x + _GOLDEN) & _MASK)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        return z ^ (z >> np.uint64(31))
