"""Exact invariants of smooth complete toric surfaces.

The modules build on each other: ``lattice`` (integer linear algebra),
``fan`` (rays, self-intersections, blow-ups), ``divisors`` (Picard group and
cohomology), ``neg2`` (``-2``-curves and the structural conditions), ``knum``
(numerical K-theory) and ``report`` (the autoequivalence structure report).
"""

from .divisors import DivisorClass, TorusDivisor, cohomology, picard
from .errors import FanError, InvariantViolation, ToricError
from .fan import (
    Fan,
    blow_up,
    census,
    construct_chain_surface,
    hirzebruch,
    minimal_model,
    paper_example,
    projective_plane,
    validate,
)
from .fanio import dump_fan, load_fan
from .knum import KClass, euler, exceptional_presentation
from .neg2 import check_conditions, splitting_check
from .report import Conclusion, analyze, parse, render

__version__ = "0.1.0"

__all__ = [
    "Conclusion",
    "DivisorClass",
    "Fan",
    "FanError",
    "InvariantViolation",
    "KClass",
    "ToricError",
    "TorusDivisor",
    "analyze",
    "blow_up",
    "census",
    "check_conditions",
    "cohomology",
    "construct_chain_surface",
    "dump_fan",
    "euler",
    "exceptional_presentation",
    "hirzebruch",
    "load_fan",
    "minimal_model",
    "paper_example",
    "parse",
    "picard",
    "projective_plane",
    "render",
    "splitting_check",
    "validate",
]
