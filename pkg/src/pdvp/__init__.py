"""Exact toolkit for place-difference-value patterns in permutations and words."""

from .intset import EVENS, IntSet, ODDS, POSITIVES, finite, multiples, union
from .pattern import (
    Mode,
    Pdvp,
    YTriple,
    make_classical,
    make_des_k,
    make_gp,
    make_xy_descent,
)
from .dsl import ParseError, parse_gp, parse_pattern, render_pattern, render_set
from .matcher import (
    Occurrence,
    PermSequence,
    WordSequence,
    avoids,
    count,
    iter_occurrences,
    occurrences,
)
from .exhaustive import (
    DistributionTable,
    EnumerationLimitError,
    perm_distribution,
    perm_multi_avoiders,
    word_distribution,
    word_multi_avoiders,
)
from .transfer import (
    BivarPoly,
    RationalGF,
    StatPattern,
    ZSeriesTable,
    dp_series,
    expand_rational,
    gf_equal_series,
    solve_transfer_system,
)

__all__ = [
    "EVENS",
    "IntSet",
    "ODDS",
    "POSITIVES",
    "finite",
    "multiples",
    "union",
    "Mode",
    "Pdvp",
    "YTriple",
    "make_classical",
    "make_des_k",
    "make_gp",
    "make_xy_descent",
    "ParseError",
    "parse_gp",
    "parse_pattern",
    "render_pattern",
    "render_set",
    "Occurrence",
    "PermSequence",
    "WordSequence",
    "avoids",
    "count",
    "iter_occurrences",
    "occurrences",
    "DistributionTable",
    "EnumerationLimitError",
    "perm_distribution",
    "perm_multi_avoiders",
    "word_distribution",
    "word_multi_avoiders",
    "BivarPoly",
    "RationalGF",
    "StatPattern",
    "ZSeriesTable",
    "dp_series",
    "expand_rational",
    "gf_equal_series",
    "solve_transfer_system",
]
