"""Distances between total and partial preference orderings.

Two independent routes to the same question — how far apart are two
(possibly partial) rankings:

* brute force: enumerate every total order compatible with each partial one
  and reduce the grid of normalized score-matrix distances with a decision
  attitude (:func:`bfm_distance`);
* belief encoding: give every object pair a mass function over the
  preferred/tied/dispreferred frame and compare the grids directly
  (:func:`direct_distance`) or through per-pair metric scores
  (:func:`indirect_distance`).

Both routes agree with the classical normalized score-matrix distance
whenever the inputs are total.
"""

from .belief import (
    ATOM_EQUIV,
    ATOM_PREC,
    ATOM_SUCC,
    FULL_FRAME,
    BbaMatrix,
    BbaMetric,
    BeliefInterval,
    DistanceReport,
    MassFunction,
    bba_from_relation,
    bba_matrix_from_json,
    belief_interval_distance,
    build_bba_matrix,
    direct_distance,
    direct_distance_general,
    indirect_distance,
    indirect_psm,
    jousselme_distance,
    load_bba_matrix,
)
from .bfm import Attitude, BfmReport, bfm_distance, bfm_grid
from .enumeration import (
    DEFAULT_ENUMERATION_CAP,
    CompatibleSet,
    compatible_tpos,
    enumerate_weak_orders,
)
from .errors import (
    BbaFormatError,
    CapExceededError,
    ConventionMismatchError,
    DegenerateUniverseError,
    DimensionMismatchError,
    DuplicateObjectError,
    EmptyExpressionError,
    EmptySubsetError,
    IndexOutOfRangeError,
    NotTotalError,
    PrefdistError,
    PreferenceSyntaxError,
    SubsetNotMentionedError,
    UnknownObjectError,
    UnnormalizedMassError,
)
from .model import (
    ObjectUniverse,
    PairRelation,
    WeakOrder,
    chain_order,
    parse_preference,
    render_preference,
)
from .psm import (
    PreferenceScoreMatrix,
    PsmConvention,
    build_psm,
    frobenius_distance,
    max_psm_distance,
    normalized_distance,
)

__version__ = "0.1.0"

__all__ = [
    "ATOM_EQUIV",
    "ATOM_PREC",
    "ATOM_SUCC",
    "Attitude",
    "BbaFormatError",
    "BbaMatrix",
    "BbaMetric",
    "BeliefInterval",
    "BfmReport",
    "CapExceededError",
    "CompatibleSet",
    "ConventionMismatchError",
    "DEFAULT_ENUMERATION_CAP",
    "DegenerateUniverseError",
    "DimensionMismatchError",
    "DistanceReport",
    "DuplicateObjectError",
    "EmptyExpressionError",
    "EmptySubsetError",
    "FULL_FRAME",
    "IndexOutOfRangeError",
    "MassFunction",
    "NotTotalError",
    "ObjectUniverse",
    "PairRelation",
    "PrefdistError",
    "PreferenceScoreMatrix",
    "PreferenceSyntaxError",
    "PsmConvention",
    "SubsetNotMentionedError",
    "UnknownObjectError",
    "UnnormalizedMassError",
    "WeakOrder",
    "bba_from_relation",
    "bba_matrix_from_json",
    "belief_interval_distance",
    "bfm_distance",
    "bfm_grid",
    "build_bba_matrix",
    "build_psm",
    "chain_order",
    "compatible_tpos",
    "direct_distance",
    "direct_distance_general",
    "enumerate_weak_orders",
    "frobenius_distance",
    "indirect_distance",
    "indirect_psm",
    "jousselme_distance",
    "load_bba_matrix",
    "max_psm_distance",
    "normalized_distance",
    "parse_preference",
    "render_preference",
]
