"""Maximal chains in the Tamari lattices: exact enumeration, bijections, counting."""

from .shapes import (
    Box,
    Enclosure,
    Partition,
    PrimePathInfo,
    ShapeError,
    contained_in_staircase,
    corner_boxes,
    covers_with_strips,
    enclosure,
    format_partition,
    from_dyck_path,
    parse_partition,
    partitions_in_staircase,
    prime_path_of_row,
    prime_subpath_heights,
    staircase,
    strip_of_box,
    to_dyck_path,
    upper_covers,
    upper_covers_dyck,
)
from .tableaux import (
    ChainError,
    NotChainTableauError,
    RSetClass,
    Tableau,
    TableauError,
    chain_to_tableau,
    classify_r_set,
    is_chain_tableau,
    outer_diagonal,
    plus_full_set_labels,
    tableau_to_chain,
    truncate,
    validate_tableau,
)
from .bijections import (
    ChainDecomposition,
    GrowthDomainError,
    NoPlusFullSetError,
    append_next_label,
    chain_without_plus_full_sets,
    decompose,
    expand_chain,
    extract_plus_full_set,
    insert_plus_full_set,
    pivot_row,
    recompose,
    repeat_row,
    unrepeat_row,
)
from .counting import (
    ChainCensus,
    IncompleteTableError,
    LengthHistogram,
    census,
    chains_count,
    conjecture_values,
    count_by_length,
    count_nofull_brute,
    enumerate_maximal_chains,
    equal_representation_check,
    longest_chain_count,
    nofull_initial_values,
    vanishing_check,
)

__version__ = "0.1.0"
