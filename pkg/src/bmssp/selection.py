"""Linear-time selection used for block maintenance in the bounded queue.

The default pivot rule is deterministic median-of-medians, so selection is
worst-case linear; a randomized pivot rule is available behind the same
interface.  Selection deliberately avoids full sorting: block splits and
batch pulls must stay linear in the number of elements handled.
"""

from __future__ import annotations

import random
from typing import Callable, Sequence, TypeVar

__all__ = ["select_kth_value", "median_of_medians_pivot", "randomized_pivot"]

T = TypeVar("T")
KeyFn = Callable[[T], object]
PivotFn = Callable[[list, KeyFn], object]


def _identity(x):
    return x


def median_of_medians_pivot(items: list, key: KeyFn = _identity):
    """Deterministic pivot: median of the medians of groups of five."""
    if len(items) <= 5:
        return key(sorted(items, key=key)[len(items) // 2])
    medians = [
        sorted(items[i : i + 5], key=key)[min(4, len(items) - i - 1) // 2]
        for i in range(0, len(items), 5)
    ]
    return select_kth_value(medians, len(medians) // 2, key=key)


_rng = random.Random(0x5EED)


def randomized_pivot(items: list, key: KeyFn = _identity):
    """Uniform random pivot; expected linear selection."""
    return key(items[_rng.randrange(len(items))])


def select_kth_value(
    items: Sequence[T],
    k: int,
    key: KeyFn = _identity,
    pivot_fn: PivotFn = median_of_medians_pivot,
):
    """Value of the k-th smallest key (0-based, counting duplicates) among
    ``items``.  Does not modify the input."""
    if not 0 <= k < len(items):
        raise ValueError(f"k={k} out of range for {len(items)} items")
    lst = list(items)
    while True:
        if len(lst) <= 5:
            return key(sorted(lst, key=key)[k])
        pivot = pivot_fn(lst, key)
        lows = [x for x in lst if key(x) < pivot]
        if k < len(lows):
            lst = lows
            continue
        n_eq = sum(1 for x in lst if key(x) == pivot)
        if k < len(lows) + n_eq:
            return pivot
        highs = [x for x in lst if key(x) > pivot]
        k -= len(lows) + n_eq
        lst = highs
