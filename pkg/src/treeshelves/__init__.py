"""Exact enumeration of treeshelves.

Treeshelves are binary increasing trees whose children occupy explicit
left/right slots.  The package counts them, tracks occurrences of the
eight local patterns, builds the avoider classes directly, carries the
bivariate generating-function recurrences in exact arithmetic, realizes
the bijections with set partitions, tagged trees and unordered binary
increasing trees, and checks the popularity growth formulas.
"""

from .asymptotics import (
    AsymptoticReport,
    asymptotic_log_popularity,
    asymptotic_popularity,
    lambert_w,
    ratio_report,
)
from .bijections import (
    JTree,
    LL_avoider_to_unordered,
    SetPartition,
    UnorderedTree,
    enumerate_jtrees,
    enumerate_partitions,
    enumerate_unordered,
    jtree_to_shelf,
    parse_jtree,
    parse_partition,
    parse_unordered,
    partition_to_shelf,
    render_jtree,
    render_partition,
    render_unordered,
    shelf_to_jtree,
    shelf_to_partition,
    shift,
    standard_representation,
    unordered_to_LL_avoider,
)
from .patterns import (
    PatternId,
    ShelfSurvey,
    avoids,
    count_occurrences,
    distribution_polynomial,
    filter_avoiders,
    generate_avoiders,
    pattern_profile,
    popularity,
)
from .poly import PolyY
from .series import (
    bell_numbers,
    distribution_series,
    egf_add,
    egf_differentiate,
    egf_exp,
    egf_integrate,
    egf_mul,
    egf_reciprocal,
    euler_numbers,
    lah_number,
    named_sequence,
    popularity_series,
    series_counts,
)
from .shelf import (
    EnumerationLimitError,
    Node,
    ShelfParseError,
    ShelfValidationError,
    Treeshelf,
    ValidationReport,
    enumerate_shelves,
    mirror,
    parse_shelf,
    permutation_to_shelf,
    render_shelf,
    shelf_to_permutation,
    validate,
)

__version__ = "0.1.0"
