"""Exact computations with free G-SFTs presented as square matrices over Z+[G]."""

from .groups import FiniteGroup, GroupElement, make_group, regular_permutation_matrix
from .groupring import GroupRingElement, u_element
from .matrices import GroupRingMatrix, IntMatrix, ReciprocalCharPoly, reciprocal_charpoly, structure_flags
from .gsft import (GraphAction, augmentation_matrix, extension_matrix, graph_action_is_inert, is_inert,
                   quotient_presentation, zeta_equal)
from .equivalences import SEWitness, verify_se

__all__ = [
    "FiniteGroup", "GroupElement", "make_group", "regular_permutation_matrix",
    "GroupRingElement", "u_element",
    "GroupRingMatrix", "IntMatrix", "ReciprocalCharPoly", "reciprocal_charpoly", "structure_flags",
    "GraphAction", "augmentation_matrix", "extension_matrix", "graph_action_is_inert", "is_inert",
    "quotient_presentation", "zeta_equal",
    "SEWitness", "verify_se",
]
