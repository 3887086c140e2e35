# Signed-index lattice S(n,r) and its region atlas
from .types import Shape, LatticeString
from .strings import make_string, render_string, parse_string
from .order import leq, meet, join, complement, to_subset, rank, covers, covered_by
from .universe import (
    LatticeTable,
    lattice_table,
    enumerate_strings,
    bottom,
    top,
    upset,
    downset,
    is_antichain,
)
from .regions import (
    Region,
    SpecialElement,
    LemmaReport,
    PropertyCheck,
    classify,
    special,
    region_size,
    region_codes,
    region_mask,
    check_lemma_properties,
)

__all__ = [
    "Shape",
    "LatticeString",
    "make_string",
    "render_string",
    "parse_string",
    "leq",
    "meet",
    "join",
    "complement",
    "to_subset",
    "rank",
    "covers",
    "covered_by",
    "LatticeTable",
    "lattice_table",
    "enumerate_strings",
    "bottom",
    "top",
    "upset",
    "downset",
    "is_antichain",
    "Region",
    "SpecialElement",
    "LemmaReport",
    "PropertyCheck",
    "classify",
    "special",
    "region_size",
    "region_codes",
    "region_mask",
    "check_lemma_properties",
]
