"""Error-correcting codes from group ring encodings."""

from grcodes.codes import (
    LinearCode,
    SubmoduleBasis,
    best_basis,
    check_code,
    check_elements,
    check_matrix,
    dual,
    greedy_basis,
    is_ideal,
    is_self_dual,
    unit_code,
    zero_divisor_code,
)
from grcodes.distance import estimate_distance, min_distance
from grcodes.groupring import GF2, ZZ, GroupRingElement, RingSpec, format_element, parse_element, parse_ring_spec
from grcodes.groups import Group, GroupSpec, make_group, parse_group_spec
from grcodes.rgmatrix import classify, rg_matrix, sigma

__version__ = "0.1.0"

__all__ = [
    "GF2",
    "ZZ",
    "Group",
    "GroupRingElement",
    "GroupSpec",
    "LinearCode",
    "RingSpec",
    "SubmoduleBasis",
    "best_basis",
    "check_code",
    "check_elements",
    "check_matrix",
    "classify",
    "dual",
    "estimate_distance",
    "format_element",
    "greedy_basis",
    "is_ideal",
    "is_self_dual",
    "make_group",
    "min_distance",
    "parse_element",
    "parse_group_spec",
    "parse_ring_spec",
    "rg_matrix",
    "sigma",
    "unit_code",
    "zero_divisor_code",
]
