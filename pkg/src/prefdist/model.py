"""Object universes, weak orderings with ties, and the preference-expression grammar.

A :class:`WeakOrder` is an ordered sequence of disjoint tie-classes over a
universe of N objects; earlier classes are strictly preferred.  An order that
mentions every object is total, one that mentions fewer is partial, and any
pair involving an unmentioned object compares as :data:`PairRelation.UNKNOWN`.

Text syntax (whitespace insignificant)::

    ordering := group ('>' group)*
    group    := ident | '(' ident ('=' ident)+ ')'
    ident    := [A-Za-z0-9_]+

so ``B > A > C`` is a strict chain, ``C > (A = B)`` ties A with B below C and
``(A = B = C)`` ties everything.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import (
    DimensionMismatchError,
    DuplicateObjectError,
    EmptyExpressionError,
    IndexOutOfRangeError,
    PreferenceSyntaxError,
    SubsetNotMentionedError,
    UnknownObjectError,
)


class PairRelation(Enum):
    """Outcome of comparing two objects under a weak order."""

    SUCC = "succ"  # row object strictly preferred
    EQUIV = "equiv"  # tied
    PREC = "prec"  # row object strictly dispreferred
    UNKNOWN = "unknown"  # at least one object unmentioned


@dataclass(frozen=True)
class ObjectUniverse:
    """Ordered collection of distinct, non-empty object labels."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))
        if not self.labels:
            raise ValueError("universe must contain at least one object")
        if any(not label for label in self.labels):
            raise ValueError("object labels must be non-empty strings")
        seen: set[str] = set()
        for label in self.labels:
            if label in seen:
                raise DuplicateObjectError(f"duplicate object label {label!r}")
            seen.add(label)

    @classmethod
    def numbered(cls, n: int) -> "ObjectUniverse":
        """Universe with default labels ``x1 .. xn``."""
        if n < 1:
            raise ValueError("universe must contain at least one object")
        return cls(tuple(f"x{i}" for i in range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownObjectError(f"unknown object {label!r}") from None


@dataclass(frozen=True)
class WeakOrder:
    """Ordered disjoint tie-classes of object indices; earlier class wins.

    ``classes`` is canonical: within each class indices are sorted ascending.
    The class sequence itself is semantic and never reordered.  A value is
    immutable and hashable once constructed.
    """

    classes: tuple[tuple[int, ...], ...]
    universe_size: int

    def __post_init__(self) -> None:
        if self.universe_size < 0:
            raise ValueError("universe_size must be non-negative")
        canonical = tuple(tuple(sorted(group)) for group in self.classes)
        object.__setattr__(self, "classes", canonical)
        seen: set[int] = set()
        for group in canonical:
            if not group:
                raise ValueError("tie-classes must be non-empty")
            for idx in group:
                if not 0 <= idx < self.universe_size:
                    raise IndexOutOfRangeError(
                        f"object index {idx} outside [0, {self.universe_size})"
                    )
                if idx in seen:
                    raise DuplicateObjectError(f"object index {idx} appears twice")
                seen.add(idx)

    @property
    def mentioned(self) -> frozenset[int]:
        return frozenset(idx for group in self.classes for idx in group)

    @property
    def is_total(self) -> bool:
        return len(self.mentioned) == self.universe_size

    def ranks(self) -> dict[int, int]:
        """Class position of every mentioned index (0 = most preferred)."""
        return {idx: pos for pos, group in enumerate(self.classes) for idx in group}

    def relation(self, i: int, j: int) -> PairRelation:
        """Compare objects i and j; UNKNOWN when either is unmentioned (i != j)."""
        for idx in (i, j):
            if not 0 <= idx < self.universe_size:
                raise IndexOutOfRangeError(
                    f"object index {idx} outside [0, {self.universe_size})"
                )
        if i == j:
            return PairRelation.EQUIV
        ranks = self.ranks()
        ri, rj = ranks.get(i), ranks.get(j)
        if ri is None or rj is None:
            return PairRelation.UNKNOWN
        if ri == rj:
            return PairRelation.EQUIV
        return PairRelation.SUCC if ri < rj else PairRelation.PREC

    def reverse(self) -> "WeakOrder":
        """Same tie-classes in the opposite sequence."""
        return WeakOrder(tuple(reversed(self.classes)), self.universe_size)

    def restrict(self, subset: Iterable[int]) -> "WeakOrder":
        """Drop every index outside ``subset``, preserving the class sequence.

        ``subset`` must be mentioned by this ordering; empty intersections
        disappear, so the result mentions exactly ``subset``.
        """
        keep = frozenset(subset)
        extra = keep - self.mentioned
        if extra:
            raise SubsetNotMentionedError(
                f"indices not mentioned by the ordering: {sorted(extra)}"
            )
        groups = []
        for group in self.classes:
            kept = tuple(idx for idx in group if idx in keep)
            if kept:
                groups.append(kept)
        return WeakOrder(tuple(groups), self.universe_size)


def chain_order(n: int) -> WeakOrder:
    """The strict chain: object 0 over object 1 over ... over object n-1."""
    return WeakOrder(tuple((i,) for i in range(n)), n)


_TOKEN = re.compile(r"[A-Za-z0-9_]+|[>=()]")
_SYMBOLS = {">", "=", "(", ")"}


def _tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        if match is None:
            raise PreferenceSyntaxError(f"unexpected character {text[pos]!r}")
        tokens.append(match.group())
        pos = match.end()
    return tokens


def parse_preference(text: str, universe: ObjectUniverse) -> WeakOrder:
    """Parse ``A > (B = C) > D`` style text into a weak order over ``universe``.

    Every identifier must name a universe object and may appear only once.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise EmptyExpressionError("empty preference expression")

    pos = 0

    def take(expected: str | None = None) -> str:
        nonlocal pos
        if pos >= len(tokens):
            raise PreferenceSyntaxError("unexpected end of expression")
        token = tokens[pos]
        if expected is not None and token != expected:
            raise PreferenceSyntaxError(f"expected {expected!r}, got {token!r}")
        pos += 1
        return token

    def take_ident() -> str:
        token = take()
        if token in _SYMBOLS:
            raise PreferenceSyntaxError(f"expected an object name, got {token!r}")
        return token

    def take_group() -> list[str]:
        if pos < len(tokens) and tokens[pos] == "(":
            take("(")
            members = [take_ident()]
            take("=")
            members.append(take_ident())
            while pos < len(tokens) and tokens[pos] == "=":
                take("=")
                members.append(take_ident())
            take(")")
            return members
        return [take_ident()]

    groups = [take_group()]
    while pos < len(tokens):
        take(">")
        groups.append(take_group())

    seen: set[str] = set()
    indexed: list[tuple[int, ...]] = []
    for members in groups:
        for label in members:
            if label in seen:
                raise DuplicateObjectError(f"object {label!r} mentioned twice")
            seen.add(label)
        indexed.append(tuple(universe.index(label) for label in members))
    return WeakOrder(tuple(indexed), len(universe))


def render_preference(order: WeakOrder, universe: ObjectUniverse) -> str:
    """Canonical text for a weak order, e.g. ``C > (A = B)``.

    Inverse of :func:`parse_preference` for any order mentioning at least one
    object; an empty order renders as the empty string, which does not parse.
    """
    if order.universe_size != len(universe):
        raise DimensionMismatchError(
            f"ordering over {order.universe_size} objects, universe has {len(universe)}"
        )
    parts = []
    for group in order.classes:
        labels = [universe.labels[idx] for idx in group]
        parts.append(labels[0] if len(labels) == 1 else "(" + " = ".join(labels) + ")")
    return " > ".join(parts)
