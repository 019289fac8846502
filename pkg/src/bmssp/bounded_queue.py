"""Partial-priority structure for batch extraction of smallest-value keys.

A :class:`BoundedQueue` holds at most one live value per key (the minimum
seen since the key was inserted or last pulled), all strictly below a fixed
bound ``B``.  ``pull`` removes a batch of roughly ``M`` smallest-value keys
and returns a separating bound that is strictly above every extracted value
and at most every remaining one.

Internals: one ordered sequence of blocks, each holding at most ``M``
unsorted (key, value) pairs and carrying an upper bound; the upper bounds
form an ordered index so ``insert`` locates its block by bisection.
``batch_prepend`` splits its batch into value-ascending runs and pushes them
onto the front (a batch is below everything stored, so front uppers stay
ordered).  Oversized blocks are split around their median value via
linear-time selection, never by sorting.  Stale pairs (superseded by a
smaller value for the same key) are dropped lazily whenever a block is
scanned.
"""

from __future__ import annotations

from typing import Hashable, Iterable

from .selection import select_kth_value

__all__ = ["BoundedQueue"]

Key = Hashable
Value = object  # any totally ordered value type (ints, floats, tuples, ...)


class _Block:
    __slots__ = ("pairs", "upper", "split_floor")

    def __init__(self, pairs: list, upper):
        self.pairs = pairs
        self.upper = upper
        self.split_floor = 0  # raised when a split fails on an all-equal block


class BoundedQueue:
    """Batch priority structure with ``insert``, ``batch_prepend`` and ``pull``.

    Args:
        M: nominal batch size for ``pull`` (>= 1).
        bound: exclusive upper bound on stored values; ``pull`` returns it
            once the structure empties.
        validate: enable O(contents) precondition checks on ``batch_prepend``
            (intended for tests; contract violations are otherwise unchecked).
    """

    def __init__(self, M: int, bound, validate: bool = False):
        if M < 1:
            raise ValueError("M must be >= 1")
        self.M = M
        self.bound = bound
        self._validate = validate
        self._best: dict[Key, Value] = {}
        self._blocks: list[_Block] = [_Block([], upper=bound)]
        self._uppers: list = [bound]

    # ------------------------------------------------------------------
    def __len__(self) -> int:
        return len(self._best)

    def is_empty(self) -> bool:
        return not self._best

    # ------------------------------------------------------------------
    def insert(self, key: Key, value) -> None:
        """Store ``value`` for ``key``, keeping the per-key minimum."""
        if not value < self.bound:
            raise ValueError(f"value {value!r} not below bound {self.bound!r}")
        current = self._best.get(key)
        if current is not None and current <= value:
            return
        self._best[key] = value
        idx = self._bisect_uppers(value)
        block = self._blocks[idx]
        block.pairs.append((key, value))
        if len(block.pairs) > max(self.M, 2 * block.split_floor):
            self._split(idx)

    def _bisect_uppers(self, value) -> int:
        # First block whose upper bound admits value.  Values are generic, so
        # run the bisection manually rather than through the bisect module.
        uppers = self._uppers
        lo, hi = 0, len(uppers) - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if uppers[mid] < value:
                lo = mid + 1
            else:
                hi = mid
        return lo

    def _live_pairs(self, block: _Block) -> list:
        best = self._best
        return [p for p in block.pairs if best.get(p[0]) == p[1]]

    def _split(self, idx: int) -> None:
        block = self._blocks[idx]
        live = self._live_pairs(block)
        if len(live) <= self.M:
            block.pairs = live
            block.split_floor = 0
            return
        mid_val = select_kth_value([v for _, v in live], (len(live) - 1) // 2)
        lows = [p for p in live if p[1] <= mid_val]
        highs = [p for p in live if p[1] > mid_val]
        if not highs:
            # The median is the maximum.  Peel off the strictly smaller pairs
            # if any; a genuine single-value pile cannot be split by value,
            # so back off and retry only once the block doubles, keeping
            # maintenance amortized.
            lows = [p for p in live if p[1] < mid_val]
            if not lows:
                block.pairs = live
                block.split_floor = len(live)
                return
            highs = [p for p in live if p[1] == mid_val]
            low_upper = max(v for _, v in lows)
        else:
            low_upper = mid_val
        block.pairs = highs
        block.split_floor = 0
        self._blocks.insert(idx, _Block(lows, upper=low_upper))
        self._uppers.insert(idx, low_upper)

    # ------------------------------------------------------------------
    def batch_prepend(self, pairs: Iterable[tuple[Key, Value]]) -> None:
        """Store every (key, value) pair, merging duplicates by minimum.

        Precondition (checked only with ``validate=True``): every value is
        strictly below everything currently stored and below the bound.
        Subsequent pulls therefore see these pairs before all previously
        stored ones.
        """
        batch: dict[Key, Value] = {}
        for key, value in pairs:
            known = batch.get(key)
            if known is None or value < known:
                batch[key] = value
        if not batch:
            return
        if self._validate:
            front = self._front_min()
            for value in batch.values():
                assert value < self.bound, "batch_prepend value at or above bound"
                assert front is None or value < front, (
                    "batch_prepend value not below stored minimum"
                )
        best = self._best
        items = []
        for key, value in batch.items():
            current = best.get(key)
            if current is not None and current <= value:
                continue
            best[key] = value
            items.append((key, value))
        if not items:
            return
        self._trim_front()
        chunks = self._chunks(items)
        blocks = [_Block(chunk, upper=max(v for _, v in chunk)) for chunk in chunks]
        self._blocks[0:0] = blocks
        self._uppers[0:0] = [b.upper for b in blocks]

    def _trim_front(self) -> None:
        """Drop leading blocks with no live pairs so front uppers stay ordered."""
        while len(self._blocks) > 1 and not self._live_pairs(self._blocks[0]):
            self._blocks.pop(0)
            self._uppers.pop(0)
        if len(self._blocks) == 1 and not self._live_pairs(self._blocks[0]):
            self._blocks[0].pairs = []

    def _chunks(self, items: list) -> list[list]:
        """Partition into value-ascending runs of at most M pairs each."""
        if len(items) <= self.M:
            return [items]
        mid_val = select_kth_value([v for _, v in items], (len(items) - 1) // 2)
        lows = [p for p in items if p[1] <= mid_val]
        highs = [p for p in items if p[1] > mid_val]
        if not highs:
            # The median is the maximum: recurse on the strictly smaller
            # pairs, if any, then the equal-valued tail.  For a single value
            # plain slicing is fine (key order within a value never matters).
            lows = [p for p in items if p[1] < mid_val]
            if not lows:
                return [items[i : i + self.M] for i in range(0, len(items), self.M)]
            highs = [p for p in items if p[1] == mid_val]
        return self._chunks(lows) + self._chunks(highs)

    # ------------------------------------------------------------------
    def pull(self) -> tuple[Value, set]:
        """Remove and return ``(separating_bound, keys)``.

        The keys are those with the smallest values; at least ``M`` of them
        when that many are stored, extended so that ties never straddle the
        boundary.  The separating bound is strictly above every extracted
        value and at most every remaining one; it equals the queue bound
        once the structure empties.  An empty pull returns ``(bound, set())``.
        """
        best = self._best
        if not best:
            return (self.bound, set())
        M = self.M
        remaining_live = len(best)
        collected: list[tuple[Key, Value]] = []
        seen: set[Key] = set()
        last_upper = None
        live_count = 0
        while live_count < M and live_count < remaining_live:
            block = self._blocks.pop(0)
            self._uppers.pop(0)
            last_upper = block.upper
            if not self._blocks:
                self._blocks.append(_Block([], upper=self.bound))
                self._uppers.append(self.bound)
            # A key can appear twice at the same value (re-insert after a pull
            # left a stale twin behind); keep only the first occurrence.
            live = [p for p in self._live_pairs(block) if not (p[0] in seen or seen.add(p[0]))]
            collected.extend(live)
            live_count += len(live)

        if live_count > M:
            v_cut = select_kth_value([v for _, v in collected], M - 1)
            pulled = [p for p in collected if p[1] <= v_cut]
            keep = [p for p in collected if p[1] > v_cut]
            if keep:
                upper = last_upper if last_upper is not None else self.bound
                self._blocks.insert(0, _Block(keep, upper=upper))
                self._uppers.insert(0, upper)
        else:
            pulled = collected

        keys = set()
        v_max = None
        for key, value in pulled:
            keys.add(key)
            del best[key]
            if v_max is None or value > v_max:
                v_max = value

        # Ties may continue into untouched blocks; keep extracting until the
        # smallest remaining value is strictly above everything pulled.
        while best:
            front = self._front_block()
            if front is None:
                break
            live = self._live_pairs(front)
            tied = [p for p in live if p[1] == v_max]
            if not tied:
                break
            front.pairs = [p for p in live if p[1] != v_max]
            for key, _ in tied:
                keys.add(key)
                best.pop(key, None)

        bound = self.bound if not best else self._front_min()
        return (bound, keys)

    # ------------------------------------------------------------------
    def _front_block(self) -> _Block | None:
        """First block holding a live pair, dropping exhausted blocks."""
        i = 0
        while i < len(self._blocks):
            block = self._blocks[i]
            live = self._live_pairs(block)
            if live:
                block.pairs = live
                return block
            if len(self._blocks) > 1:
                self._blocks.pop(i)
                self._uppers.pop(i)
            else:
                block.pairs = []
                break
        return None

    def _front_min(self):
        block = self._front_block()
        if block is None:
            return None
        return min(v for _, v in block.pairs)
