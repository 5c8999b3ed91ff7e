"""Instance generators for the equivalence and acceptance tests."""

import random

from gsftkit.equivalences import SEWitness, Z_PLUS, Z_PLUS_G
from gsftkit.groupring import GroupRingElement
from gsftkit.gsft import augmentation_matrix, is_inert
from gsftkit.matrices import GroupRingMatrix, structure_flags


def random_support_matrix(rng, group, rows, cols, elements=None, density=0.4, max_coeff=1):
    elements = range(group.order) if elements is None else list(elements)
    out = []
    for _ in range(rows):
        row = []
        for _ in range(cols):
            coeffs = [0] * group.order
            for g in elements:
                if rng.random() < density:
                    coeffs[g] = rng.randint(1, max_coeff)
            row.append(GroupRingElement(group, coeffs))
        out.append(row)
    return GroupRingMatrix(group, out)


def inert_pair(rng, group, max_tries=10_000):
    """Inert ``B = R0 S0`` and ``C = S0 R0`` with the Z+ witness ``(A(R0), A(S0))`` of lag 1."""
    for _ in range(max_tries):
        n, m = rng.randint(1, 2), rng.randint(1, 3)
        r0 = random_support_matrix(rng, group, n, m)
        s0 = random_support_matrix(rng, group, m, n)
        b, c = r0 @ s0, s0 @ r0
        if not (structure_flags(b).essential and structure_flags(c).essential):
            continue
        if is_inert(b).inert and is_inert(c).inert:
            return b, c, SEWitness(augmentation_matrix(r0), augmentation_matrix(s0), 1, Z_PLUS)
    raise RuntimeError("no inert pair found")


def descent_instance(rng, group, subgroup, g, max_tries=10_000):
    """``A = R0 S0`` over Z+[H] and ``B = g^-1 (S0 R0) g`` with the Z+[G] witness ``(R0 g, g^-1 S0)``.

    ``g`` lies outside ``H`` so the witness genuinely leaves Z[H].
    """
    gel = group.element(g)
    ginv = gel.inverse()
    for _ in range(max_tries):
        n, m = rng.randint(1, 3), rng.randint(1, 3)
        r0 = random_support_matrix(rng, group, n, m, subgroup, 0.5)
        s0 = random_support_matrix(rng, group, m, n, subgroup, 0.5)
        a, b0 = r0 @ s0, s0 @ r0
        fa, fb = structure_flags(a), structure_flags(b0)
        if not (fa.irreducible and fa.essential and fb.irreducible and fb.essential):
            continue
        b = (ginv * b0) * gel
        return a, b, SEWitness(r0 * gel, ginv * s0, 1, Z_PLUS_G)
    raise RuntimeError("no irreducible instance found")


def rng_for(seed):
    return random.Random(seed)
