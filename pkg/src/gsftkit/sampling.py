"""Random instance generators shared by the self test and the test suite."""

from __future__ import annotations

import random

from .groupring import GroupRingElement, u_element
from .groups import FiniteGroup
from .matrices import GroupRingMatrix, IntMatrix, structure_flags


def random_group_ring_matrix(rng: random.Random, group: FiniteGroup, size: int, max_coeff: int = 2,
                             density: float = 0.5) -> GroupRingMatrix:
    """Non-negative matrix; each coefficient is nonzero with probability ``density``."""
    entries = [[GroupRingElement(group, [rng.randint(1, max_coeff) if rng.random() < density else 0
                                         for _ in range(group.order)])
                for _ in range(size)] for _ in range(size)]
    return GroupRingMatrix(group, entries)


def random_int_matrix(rng: random.Random, rows: int, cols: int, max_entry: int = 2) -> IntMatrix:
    return IntMatrix([[rng.randint(0, max_entry) for _ in range(cols)] for _ in range(rows)])


def random_essential_matrix(rng: random.Random, size: int, max_entry: int = 2) -> IntMatrix:
    while True:
        m = random_int_matrix(rng, size, size, max_entry)
        if structure_flags(m).essential:
            return m


def random_u_multiple(rng: random.Random, group: FiniteGroup, size: int, max_entry: int = 2,
                      primitive: bool = False) -> GroupRingMatrix:
    """``u_G * M`` for a random non-negative ``M`` (nonzero, primitive on request)."""
    while True:
        m = random_int_matrix(rng, size, size, max_entry)
        if not any(any(r) for r in m.entries):
            continue
        if primitive and not structure_flags(m).primitive:
            continue
        return u_element(group) * GroupRingMatrix.embed(m, group)
