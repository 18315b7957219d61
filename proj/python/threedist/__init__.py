"""Three distance and three gap computations over exact rationals.

Real inputs are strings: "p/q", a decimal literal, or one of the named
constants phi_frac, sqrt2_frac, log2_3_frac.  Exact results come back as
"p/q" strings.
"""

import json
from fractions import Fraction

from . import _threedist
from ._threedist import (
    ThreeDistError,
    farey_sequence,
    hits,
    render_partition_strip,
    render_un_map,
    two_length_orders,
)

__all__ = [
    "ThreeDistError",
    "brute_lengths",
    "census",
    "decompose",
    "empirical_frequencies",
    "farey_neighbors",
    "farey_sequence",
    "fraction",
    "gap_structure",
    "hits",
    "intervals",
    "render_partition_strip",
    "render_un_map",
    "temperament",
    "two_length_orders",
]

__version__ = "0.1.0"


def fraction(text):
    """Parse a "p/q" string from a result into a Fraction."""
    return Fraction(text)


def _ratio(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def decompose(alpha, n, precision=128):
    return json.loads(_threedist.decompose(_ratio(alpha), n, precision))


def intervals(alpha, n, precision=128):
    return json.loads(_threedist.intervals(_ratio(alpha), n, precision))


def census(alpha, n, precision=128):
    return json.loads(_threedist.census(_ratio(alpha), n, precision))


def brute_lengths(alpha, n):
    return json.loads(_threedist.brute_lengths(_ratio(alpha), n))


def gap_structure(alpha, beta, precision=128, scan_cap=1_000_000):
    return json.loads(_threedist.gap_structure(_ratio(alpha), _ratio(beta), precision, scan_cap))


def empirical_frequencies(alpha, beta, n_indices, precision=128):
    raw = json.loads(
        _threedist.empirical_frequencies(_ratio(alpha), _ratio(beta), n_indices, precision)
    )
    return {int(gap): freq for gap, freq in raw.items()}


def farey_neighbors(alpha, n, precision=128):
    return json.loads(_threedist.farey_neighbors(_ratio(alpha), n, precision))


def temperament(generator="log2_3_frac", counts=(2, 3, 5, 7, 12, 17), precision=128):
    return json.loads(_threedist.temperament(_ratio(generator), list(counts), precision))
