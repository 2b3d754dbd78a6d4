"""Belief-mass encoding of pairwise preferences and the distances built on it.

Each ordered object pair (i, j) gets a three-state frame — i strictly
preferred, tied, i strictly dispreferred — and a mass function over its eight
subsets.  A certain comparison puts mass 1 on the matching state, an unknown
comparison puts mass 1 on the whole frame, and arbitrary mass functions model
probabilistic or imprecise comparisons.

Subsets are addressed by bitmask (bit 0 = preferred, bit 1 = tied, bit 2 =
dispreferred), and the mask doubles as the index into the 8-component mass
vector: empty set, {succ}, {equiv}, {succ, equiv}, {prec}, {succ, prec},
{equiv, prec}, full frame.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import IO, Any

import numpy as np
from numpy.typing import NDArray

from .errors import (
    BbaFormatError,
    DegenerateUniverseError,
    DimensionMismatchError,
    EmptySubsetError,
    UnnormalizedMassError,
)
from .model import PairRelation, WeakOrder, chain_order

ATOM_SUCC = 0b001
ATOM_EQUIV = 0b010
ATOM_PREC = 0b100
FULL_FRAME = 0b111

_MASS_TOLERANCE = 1e-9

# Orientation swap (i, j) -> (j, i): preferred and dispreferred atoms trade
# places, so mask k maps to _SWAPPED_MASK[k] (an involution).
_SWAPPED_MASK = (0, 4, 2, 6, 1, 5, 3, 7)


def _check_subset(subset: int) -> None:
    if subset == 0:
        raise EmptySubsetError("belief and plausibility need a non-empty subset")
    if not 0 < subset <= FULL_FRAME:
        raise ValueError(f"subset mask must lie in 1..7, got {subset}")


@dataclass(frozen=True)
class BeliefInterval:
    """Lower and upper probability bounds [bel, pl] of one subset."""

    bel: float
    pl: float

    def __post_init__(self) -> None:
        if (
            self.bel < -_MASS_TOLERANCE
            or self.pl > 1.0 + _MASS_TOLERANCE
            or self.bel > self.pl + _MASS_TOLERANCE
        ):
            raise ValueError(f"need 0 <= bel <= pl <= 1, got [{self.bel}, {self.pl}]")

    @property
    def uncertainty(self) -> float:
        """Interval width pl - bel; zero for Bayesian mass functions."""
        return self.pl - self.bel


@dataclass(frozen=True)
class MassFunction:
    """Normalized basic belief assignment over the 3-state pairwise frame.

    ``masses[mask]`` is the mass of the subset with that bitmask; the empty
    set carries none, components are non-negative, and the total is 1
    (within 1e-9).  Violations raise UnnormalizedMassError, so every instance
    in circulation is a valid normalized assignment.
    """

    masses: tuple[float, ...]

    def __post_init__(self) -> None:
        values = tuple(float(v) for v in self.masses)
        object.__setattr__(self, "masses", values)
        if len(values) != 8:
            raise UnnormalizedMassError(f"mass vector needs 8 components, got {len(values)}")
        if values[0] != 0.0:
            raise UnnormalizedMassError(f"empty set must carry zero mass, got {values[0]}")
        if any(v < 0.0 for v in values):
            raise UnnormalizedMassError("masses must be non-negative")
        total = sum(values)
        if abs(total - 1.0) > _MASS_TOLERANCE:
            raise UnnormalizedMassError(f"masses sum to {total!r}, expected 1")

    @classmethod
    def certain(cls, subset: int) -> "MassFunction":
        """All mass on one non-empty subset."""
        _check_subset(subset)
        return cls(tuple(1.0 if mask == subset else 0.0 for mask in range(8)))

    @classmethod
    def vacuous(cls) -> "MassFunction":
        """All mass on the full frame: total ignorance of the comparison."""
        return cls.certain(FULL_FRAME)

    @classmethod
    def from_masses(cls, assignment: dict[int, float]) -> "MassFunction":
        """Build from a sparse {subset mask: mass} mapping."""
        values = [0.0] * 8
        for mask, mass in assignment.items():
            if not 0 <= mask <= FULL_FRAME:
                raise ValueError(f"subset mask must lie in 0..7, got {mask}")
            values[mask] = mass
        return cls(tuple(values))

    def bel(self, subset: int) -> float:
        """Total mass of the non-empty subsets contained in ``subset``."""
        _check_subset(subset)
        return sum(self.masses[y] for y in range(1, 8) if y & subset == y)

    def pl(self, subset: int) -> float:
        """Total mass of the subsets intersecting ``subset``; 1 - bel(complement)."""
        _check_subset(subset)
        return sum(self.masses[y] for y in range(1, 8) if y & subset)

    def interval(self, subset: int) -> BeliefInterval:
        return BeliefInterval(self.bel(subset), self.pl(subset))

    def swapped(self) -> "MassFunction":
        """The same evidence read in the reversed pair orientation (j, i)."""
        return MassFunction(tuple(self.masses[k] for k in _SWAPPED_MASK))


_RELATION_MASK = {
    PairRelation.SUCC: ATOM_SUCC,
    PairRelation.EQUIV: ATOM_EQUIV,
    PairRelation.PREC: ATOM_PREC,
    PairRelation.UNKNOWN: FULL_FRAME,
}


def bba_from_relation(relation: PairRelation) -> MassFunction:
    """Certain mass on the matching state; vacuous for an unknown comparison."""
    return MassFunction.certain(_RELATION_MASK[relation])


@dataclass(frozen=True)
class BbaMatrix:
    """N x N grid of mass functions; cell (i, j) judges object i against object j."""

    cells: tuple[tuple[MassFunction, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.cells)
        if any(len(row) != n for row in self.cells):
            raise DimensionMismatchError("cell grid must be square")

    @property
    def n(self) -> int:
        return len(self.cells)

    def as_array(self) -> NDArray[np.float64]:
        """Mass components as an (n, n, 8) array."""
        return np.array(
            [[cell.masses for cell in row] for row in self.cells], dtype=np.float64
        )


def build_bba_matrix(ppo: WeakOrder) -> BbaMatrix:
    """Encode a (partial) order: certain cells for known comparisons, vacuous
    cells for unmentioned pairs, tie-certain diagonal."""
    n = ppo.universe_size
    return BbaMatrix(
        tuple(
            tuple(bba_from_relation(ppo.relation(i, j)) for j in range(n))
            for i in range(n)
        )
    )


def _jaccard_kernel() -> NDArray[np.float64]:
    kernel = np.empty((8, 8))
    for a in range(8):
        for b in range(8):
            union = a | b
            if union == 0:
                kernel[a, b] = 1.0  # empty-vs-empty convention; that coordinate is always 0
            else:
                kernel[a, b] = (a & b).bit_count() / union.bit_count()
    return kernel


_JACCARD = _jaccard_kernel()

#: 1 / 2^(atoms - 1); scales the subset sum of the interval metric into [0, 1].
_INTERVAL_SCALE = 0.25


def jousselme_distance(m1: MassFunction, m2: MassFunction) -> float:
    """Quadratic-form distance sqrt(0.5 * d^T K d) with the Jaccard overlap kernel.

    Lies in [0, 1]; 1 is reached exactly between certain masses on disjoint
    subsets.
    """
    diff = np.asarray(m1.masses) - np.asarray(m2.masses)
    value = 0.5 * float(diff @ _JACCARD @ diff)
    return math.sqrt(max(value, 0.0))


def belief_interval_distance(m1: MassFunction, m2: MassFunction) -> float:
    """Aggregate Wasserstein distance between the [bel, pl] intervals.

    Sums, over the seven non-empty subsets, the squared interval distance
    (midpoint gap squared plus a third of the half-width gap squared), scales
    by 1/4 and takes the square root; lies in [0, 1].
    """
    total = 0.0
    for subset in range(1, 8):
        b1, p1 = m1.bel(subset), m1.pl(subset)
        b2, p2 = m2.bel(subset), m2.pl(subset)
        mid_gap = ((b1 + p1) - (b2 + p2)) / 2.0
        halfwidth_gap = ((p1 - b1) - (p2 - b2)) / 2.0
        total += mid_gap * mid_gap + halfwidth_gap * halfwidth_gap / 3.0
    return math.sqrt(_INTERVAL_SCALE * total)


class BbaMetric(Enum):
    """Distance between two mass functions used by the indirect method."""

    JOUSSELME = "jousselme"
    BELIEF_INTERVAL = "belief-interval"


_METRIC_FN = {
    BbaMetric.JOUSSELME: jousselme_distance,
    BbaMetric.BELIEF_INTERVAL: belief_interval_distance,
}

_METRIC_METHOD_NAME = {
    BbaMetric.JOUSSELME: "indirect-j",
    BbaMetric.BELIEF_INTERVAL: "indirect-bi",
}

#: Reference mass for the indirect score: certain strict preference of row over column.
_SUCC_CERTAIN = MassFunction.certain(ATOM_SUCC)


@dataclass(frozen=True)
class DistanceReport:
    """Raw distance, the full-contradiction maximum, and their ratio."""

    method: str
    raw: float
    max: float
    normalized: float


def _check_pair(ppo1: WeakOrder, ppo2: WeakOrder) -> int:
    if ppo1.universe_size != ppo2.universe_size:
        raise DimensionMismatchError(
            f"orderings over different universes: {ppo1.universe_size} vs {ppo2.universe_size}"
        )
    n = ppo1.universe_size
    if n < 2:
        raise DegenerateUniverseError(
            f"normalized distances need at least two objects, got {n}"
        )
    return n


def _mass_grid_distance(b1: BbaMatrix, b2: BbaMatrix) -> float:
    # Equals the Frobenius norm of the flattened 8N x 8N difference: each mass
    # component appears exactly once in the sum of squares either way.
    return float(np.linalg.norm(b1.as_array() - b2.as_array()))


def _direct_max(n: int) -> float:
    chain = chain_order(n)
    return _mass_grid_distance(
        build_bba_matrix(chain), build_bba_matrix(chain.reverse())
    )


def direct_distance(ppo1: WeakOrder, ppo2: WeakOrder) -> DistanceReport:
    """Distance between two (partial) orders through their full mass grids.

    No enumeration is involved: cost is quadratic in the number of objects.
    Normalization divides by the chain-vs-reversed-chain distance.
    """
    n = _check_pair(ppo1, ppo2)
    raw = _mass_grid_distance(build_bba_matrix(ppo1), build_bba_matrix(ppo2))
    maximum = _direct_max(n)
    return DistanceReport("direct", raw, maximum, raw / maximum)


def direct_distance_general(b1: BbaMatrix, b2: BbaMatrix) -> DistanceReport:
    """Direct distance for caller-supplied mass grids.

    Accepts any normalized cells, so probabilistic and imprecise pairwise
    judgments are fine.  Normalization still uses the chain-built maximum, so
    adversarial grids (for example with conflicting diagonals) can exceed 1.
    """
    if b1.n != b2.n:
        raise DimensionMismatchError(f"grid sizes differ: {b1.n} vs {b2.n}")
    if b1.n < 2:
        raise DegenerateUniverseError(
            f"normalized distances need at least two objects, got {b1.n}"
        )
    raw = _mass_grid_distance(b1, b2)
    maximum = _direct_max(b1.n)
    return DistanceReport("direct", raw, maximum, raw / maximum)


def indirect_psm(ppo: WeakOrder, metric: BbaMetric) -> NDArray[np.float64]:
    """Score-alike matrix: entry (i, j) is the metric distance from cell (i, j)
    to the certain row-over-column reference mass.

    Certain strict preference scores 0, certain reversal or tie scores 1,
    ignorance lands strictly in between, and the diagonal is all ones.
    """
    distance = _METRIC_FN[metric]
    cells = build_bba_matrix(ppo).cells
    n = ppo.universe_size
    entries = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            entries[i, j] = distance(cells[i][j], _SUCC_CERTAIN)
    return entries


def indirect_distance(
    ppo1: WeakOrder, ppo2: WeakOrder, metric: BbaMetric
) -> DistanceReport:
    """Frobenius distance between the two score-alike matrices, normalized.

    A lossy compression of the pairwise evidence compared to the direct
    method: the N x N matrix keeps only each cell's distance to the
    reference, not the cell itself.
    """
    n = _check_pair(ppo1, ppo2)
    raw = float(np.linalg.norm(indirect_psm(ppo1, metric) - indirect_psm(ppo2, metric)))
    chain = chain_order(n)
    maximum = float(
        np.linalg.norm(indirect_psm(chain, metric) - indirect_psm(chain.reverse(), metric))
    )
    return DistanceReport(_METRIC_METHOD_NAME[metric], raw, maximum, raw / maximum)


_FOCAL_KEY_TO_MASK = {
    "1": ATOM_SUCC,
    "2": ATOM_EQUIV,
    "3": ATOM_PREC,
    "1|2": ATOM_SUCC | ATOM_EQUIV,
    "1|3": ATOM_SUCC | ATOM_PREC,
    "2|3": ATOM_EQUIV | ATOM_PREC,
    "1|2|3": FULL_FRAME,
}


def _cell_from_json(cell: Any) -> MassFunction:
    if not isinstance(cell, dict):
        raise BbaFormatError("cell must be an object mapping focal-set keys to masses")
    values = [0.0] * 8
    for key, mass in cell.items():
        mask = _FOCAL_KEY_TO_MASK.get(key)
        if mask is None:
            raise BbaFormatError(
                f"invalid focal-set key {key!r} (expected one of "
                f"{', '.join(sorted(_FOCAL_KEY_TO_MASK))})"
            )
        if isinstance(mass, bool) or not isinstance(mass, (int, float)):
            raise BbaFormatError(f"mass for {key!r} must be a number, got {mass!r}")
        values[mask] = float(mass)
    return MassFunction(tuple(values))


def bba_matrix_from_json(document: Any) -> BbaMatrix:
    """Parse the wire format ``{"n": N, "cells": [[{...}, ...], ...]}``.

    Focal-set keys are "1", "2", "3", "1|2", "1|3", "2|3" and "1|2|3" (atom 1
    = row preferred, 2 = tied, 3 = column preferred); omitted subsets carry
    zero mass and empty-set keys are rejected.  Diagnostics name the
    offending cell.
    """
    if not isinstance(document, dict):
        raise BbaFormatError("top-level value must be a JSON object")
    n = document.get("n")
    cells = document.get("cells")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise BbaFormatError("'n' must be a positive integer")
    if not isinstance(cells, list) or len(cells) != n:
        raise BbaFormatError(f"'cells' must be a list of {n} rows")
    rows = []
    for i, row in enumerate(cells):
        if not isinstance(row, list) or len(row) != n:
            raise BbaFormatError(f"row {i} must hold {n} cells")
        parsed_row = []
        for j, cell in enumerate(row):
            try:
                parsed_row.append(_cell_from_json(cell))
            except (BbaFormatError, UnnormalizedMassError) as exc:
                raise type(exc)(f"cell ({i}, {j}): {exc}") from None
        rows.append(tuple(parsed_row))
    return BbaMatrix(tuple(rows))


def load_bba_matrix(source: str | IO[str]) -> BbaMatrix:
    """Read a BBA matrix from a JSON file path or an open text stream."""
    if isinstance(source, str):
        with open(source, encoding="utf-8") as handle:
            document = json.load(handle)
    else:
        document = json.load(source)
    return bba_matrix_from_json(document)
