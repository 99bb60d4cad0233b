"""Whittaker modules over the twisted Heisenberg-Virasoro algebra."""

__version__ = "0.1.0"

from .algebra import Generator, LieElement, I, L, Z, bracket, bracket_generators  # noqa: E402
from .partitions import Partition, Pseudopartition, enumerate_pairs, to_word  # noqa: E402
from .uea import PBWMonomial, UEAElement, multiply, normal_form  # noqa: E402
from .modules import (  # noqa: E402
    BasisIndex,
    CentralCharacter,
    InvalidPsiError,
    ModuleVector,
    Reduced,
    Universal,
    WhittakerMap,
    act,
    defect,
    make_psi,
)
from .solver import (  # noqa: E402
    Bounds,
    descend,
    nilpotency_index,
    submodule_membership,
    verify_lemma,
    whittaker_solve,
)
from .syntax import format_element, parse_element  # noqa: E402

__all__ = [
    "Generator", "LieElement", "I", "L", "Z", "bracket", "bracket_generators",
    "Partition", "Pseudopartition", "enumerate_pairs", "to_word",
    "PBWMonomial", "UEAElement", "multiply", "normal_form",
    "BasisIndex", "CentralCharacter", "InvalidPsiError", "ModuleVector", "Reduced",
    "Universal", "WhittakerMap", "act", "defect", "make_psi",
    "Bounds", "descend", "nilpotency_index", "submodule_membership", "verify_lemma",
    "whittaker_solve", "format_element", "parse_element",
]
