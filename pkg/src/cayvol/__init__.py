"""Cayley evolution algebras over exact fields and their automorphism groups."""

from .autgrp import AutGroup, algebra_isomorphic, automorphism_group, diag_group, recognize, subgroup_report
from .cayley import WeightFunction, cay, cay_group, group_algebra, psi, realize, rho
from .evoalg import EvolutionAlgebra
from .field import parse_field
from .group import FiniteGroup, build
from .monomial import MonomialMap

__version__ = "0.1.0"

__all__ = [
    "AutGroup", "EvolutionAlgebra", "FiniteGroup", "MonomialMap", "WeightFunction",
    "algebra_isomorphic", "automorphism_group", "build", "cay", "cay_group", "diag_group",
    "group_algebra", "parse_field", "psi", "realize", "recognize", "rho", "subgroup_report",
]
