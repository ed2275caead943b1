"""Strict bicolorings of Steiner triple systems and their extension under doubling."""

from .coloring import (
    Coloring,
    chromatic_bounds,
    enumerate_bicolorings,
    find_bicoloring,
    independence_number,
    max_colors_bound,
    verify_bicoloring,
)
from .designs import (
    DoublingAssociation,
    TripleSystem,
    bose_construction,
    cyclic_sts,
    double,
    find_subsystem,
    skolem_construction,
    validate_sts,
)
from .extension import (
    ExtensionCertificate,
    counting_filter,
    enumerate_eq1_solutions,
    filter_corollary2,
    search_extension,
    theorem3_eligible,
    theorem3_extend,
    theorem4_extend,
    trivial_doubling_colorings,
    verify_certificate,
)
from .factorization import (
    OneFactorization,
    circle_factorization,
    recursive_split_factorization,
    theorem3_factorization,
    validate_factorization,
)
from .chain import ChainRecord, ChiGapCertificate, advance_chain, seed_certificate, verify_chain

__version__ = "0.1.0"
