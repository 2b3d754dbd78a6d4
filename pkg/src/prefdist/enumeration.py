"""Exhaustive generation of weak orders and compatible-completion filtering.

The number of weak orders of n objects is the n-th ordered Bell (Fubini)
number: 1, 3, 13, 75, 541, 4683, ...  The blowup is guarded by a hard cap;
exceeding it raises instead of truncating silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import CapExceededError
from .model import WeakOrder

#: Largest universe enumerated by default (545,835 weak orders at n=8).
DEFAULT_ENUMERATION_CAP = 8


def _rank_vectors(n: int) -> Iterator[tuple[int, ...]]:
    """All canonical rank vectors of length n, in lexicographic order.

    vec[i] is the class position of object i (0 = most preferred).  A vector
    is canonical when the set of used values is {0, ..., max}; each such
    vector corresponds to exactly one weak order.
    """
    vec: list[int] = []
    counts = [0] * n

    def extend(used_max: int, holes: int) -> Iterator[tuple[int, ...]]:
        pos = len(vec)
        if pos == n:
            if holes == 0:
                yield tuple(vec)
            return
        remaining = n - pos
        for value in range(n):
            if counts[value] == 0:
                if value <= used_max:
                    new_max, new_holes = used_max, holes - 1
                else:
                    new_max, new_holes = value, holes + (value - used_max - 1)
            else:
                new_max, new_holes = used_max, holes
            if new_holes > remaining - 1:
                continue  # not enough slots left to fill every gap
            counts[value] += 1
            vec.append(value)
            yield from extend(new_max, new_holes)
            vec.pop()
            counts[value] -= 1

    yield from extend(-1, 0)


def _order_from_ranks(ranks: tuple[int, ...]) -> WeakOrder:
    buckets: list[list[int]] = [[] for _ in range(max(ranks) + 1)]
    for idx, rank in enumerate(ranks):
        buckets[rank].append(idx)
    return WeakOrder(tuple(tuple(bucket) for bucket in buckets), len(ranks))


def enumerate_weak_orders(n: int, *, cap: int | None = None) -> Iterator[WeakOrder]:
    """Lazily yield every total weak order of n objects, exactly once.

    The sequence is deterministic and repeatable: orders appear in
    lexicographic order of their rank vectors.
    """
    if n < 1:
        raise ValueError(f"need at least one object, got {n}")
    limit = DEFAULT_ENUMERATION_CAP if cap is None else cap
    if n > limit:
        raise CapExceededError(f"n={n} exceeds the enumeration cap {limit}")
    return (_order_from_ranks(ranks) for ranks in _rank_vectors(n))


@dataclass(frozen=True)
class CompatibleSet:
    """A partial order together with every total order that completes it."""

    ppo: WeakOrder
    ctpos: tuple[WeakOrder, ...]

    @property
    def count(self) -> int:
        return len(self.ctpos)


def compatible_tpos(ppo: WeakOrder, *, cap: int | None = None) -> CompatibleSet:
    """Every total order whose restriction to the mentioned objects equals ``ppo``.

    An order mentioning nothing is compatible with every total order; a total
    order is compatible only with itself.  Completion order follows the
    enumeration order.
    """
    mentioned = ppo.mentioned
    matches = tuple(
        candidate
        for candidate in enumerate_weak_orders(ppo.universe_size, cap=cap)
        if candidate.restrict(mentioned) == ppo
    )
    return CompatibleSet(ppo, matches)
