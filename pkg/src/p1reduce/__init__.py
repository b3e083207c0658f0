"""Exact semistable reduction for bundles on the projective line.

Layers, bottom up: ground fields -> Puiseux scalars -> truncated Laurent
series -> matrices -> Birkhoff factorization and cohomology -> the
reduction engine and its deformation cross-check.  Root-system
combinatorics live in :mod:`p1reduce.rootdata` and feed the central
cocharacter bookkeeping.
"""

from ._kernels import BACKEND
from .bundles import (
    BirkhoffFactorization,
    CohClass,
    LoopCocycle,
    SplittingType,
    birkhoff_factorize,
    canonical_parabolic,
    coboundary_split,
    cohomology_dims,
    h1_project,
    splitting_type,
)
from .deformation import (
    build_levi_family,
    check_fibers,
    check_reduction,
    classes_match,
    first_order_class,
)
from .engine import (
    block_ldu,
    extend_trivially,
    langton_step,
    maximal_central_exponent,
    normalize_to_canonical,
    semistable_reduce,
)
from .groundfield import QQ, FpElement, GroundField
from .rootdata import build_root_system, central_weight, char_bound, unipotent_filtration
from .scalars import PuiseuxScalar
from .series import TLaurent

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BirkhoffFactorization",
    "CohClass",
    "FpElement",
    "GroundField",
    "LoopCocycle",
    "PuiseuxScalar",
    "QQ",
    "SplittingType",
    "TLaurent",
    "birkhoff_factorize",
    "block_ldu",
    "build_levi_family",
    "build_root_system",
    "canonical_parabolic",
    "central_weight",
    "char_bound",
    "check_fibers",
    "check_reduction",
    "classes_match",
    "coboundary_split",
    "cohomology_dims",
    "extend_trivially",
    "first_order_class",
    "h1_project",
    "langton_step",
    "maximal_central_exponent",
    "normalize_to_canonical",
    "semistable_reduce",
    "splitting_type",
    "unipotent_filtration",
]
