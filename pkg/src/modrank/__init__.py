"""Minimal generator counts and r-generator verdicts for modules over finite group algebras."""

from __future__ import annotations

from .chop import frattini, is_irreducible, semisimple_decompose, socle
from .errors import ModrankError
from .field import FiniteField, ff_make, field_of_order
from .fgmod import dual, hom_space, quotient_module, restrict, spin
from .genprop import d_min, has_r_gen_property, nns_count, paper_width_d, rstar, theorem2_report, theorem3_series
from .group import GroupTable, group_from_perms, named_group
from .grpalg import FGModule, module_from_action, regular_module, trivial_module
from .instance import Instance, load_instance, parse_instance
from .linalg import Subspace

__version__ = "0.1.0"

__all__ = [
    "FGModule",
    "FiniteField",
    "GroupTable",
    "Instance",
    "ModrankError",
    "Subspace",
    "d_min",
    "dual",
    "ff_make",
    "field_of_order",
    "frattini",
    "group_from_perms",
    "has_r_gen_property",
    "hom_space",
    "is_irreducible",
    "load_instance",
    "module_from_action",
    "named_group",
    "nns_count",
    "paper_width_d",
    "parse_instance",
    "quotient_module",
    "regular_module",
    "restrict",
    "rstar",
    "semisimple_decompose",
    "socle",
    "spin",
    "theorem2_report",
    "theorem3_series",
    "trivial_module",
]
