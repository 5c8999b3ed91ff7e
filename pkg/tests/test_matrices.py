import random

import pytest
import sympy

from gsftkit.errors import InvariantViolation, NegativeEntryError, ShapeMismatchError
from gsftkit.groupring import GroupRingElement, u_element
from gsftkit.groups import FiniteGroup
from gsftkit.matrices import (GroupRingMatrix, IntMatrix, ReciprocalCharPoly, determinant, equal_up_to_relabeling,
                              find_permutation_similarity, kronecker, mat_pow, reciprocal_charpoly, structure_flags)
from gsftkit.sampling import random_group_ring_matrix, random_int_matrix


def sympy_reciprocal(m):
    t = sympy.Symbol("t")
    n = len(m.entries)
    poly = sympy.Poly((sympy.eye(n) - t * sympy.Matrix(m.entries)).det(), t)
    coeffs = [int(c) for c in reversed(poly.all_coeffs())]
    return ReciprocalCharPoly(tuple(coeffs))


def test_charpoly_and_det_against_sympy():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(1, 5)
        m = IntMatrix([[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)])
        assert reciprocal_charpoly(m) == sympy_reciprocal(m)
        assert determinant(m) == int(sympy.Matrix(m.entries).det())


def test_trace_series_and_zeta():
    a = IntMatrix([[1, 1], [1, 0]])
    rcp = reciprocal_charpoly(a)
    assert rcp.coeffs == (1, -1, -1)
    assert rcp.charpoly(2) == (-1, -1, 1)
    assert rcp.trace_series(8) == [mat_pow(a, k).trace() for k in range(1, 9)]
    # zeta of the golden mean shift is 1/(1 - t - t^2): Fibonacci numbers
    assert rcp.inverse_series(6) == [1, 1, 2, 3, 5, 8, 13]


def test_divides():
    p = ReciprocalCharPoly((1, -1))
    assert p.divides(ReciprocalCharPoly((1, -3, 2)))
    assert not ReciprocalCharPoly((1, -2)).divides(ReciprocalCharPoly((1, -1, -1)))
    assert not ReciprocalCharPoly((1, 2)).divides(ReciprocalCharPoly((1, 0, 0, 1, 1)))


def test_determinant_known_values():
    assert determinant(IntMatrix([[2]])) == 2
    assert determinant(IntMatrix([[0, 1], [1, 0]])) == -1
    assert determinant(IntMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])) == 0


def test_kronecker_trace_and_labels():
    a, b = IntMatrix([[1, 2], [3, 4]], rows=["x", "y"]), IntMatrix([[0, 1], [1, 1]])
    k = kronecker(a, b)
    assert k.shape == (4, 4)
    assert k.trace() == a.trace() * b.trace()
    assert k.rows[1] == ("x", 1)
    assert k.entries[2][1] == 3 * 1


def test_labels_and_relabeling():
    a = IntMatrix([[0, 1], [1, 1]], rows=["p", "q"])
    b = a.reordered(["q", "p"])
    assert b.entries == ((1, 1), (1, 0))
    assert equal_up_to_relabeling(a, b, {"p": "p", "q": "q"})
    perm = find_permutation_similarity(IntMatrix([[1, 1], [1, 0]]), IntMatrix([[0, 1], [1, 1]]))
    assert perm is not None
    assert find_permutation_similarity(IntMatrix([[2, 0], [0, 0]]), IntMatrix([[1, 1], [1, 0]])) is None


def test_shape_errors():
    with pytest.raises(ShapeMismatchError):
        IntMatrix([[1, 2]]) @ IntMatrix([[1, 2]])
    with pytest.raises(ShapeMismatchError):
        IntMatrix([[1, 2], [3]])


def test_exact_div():
    assert IntMatrix([[2, 4]]).exact_div(2) == IntMatrix([[1, 2]])
    with pytest.raises(InvariantViolation):
        IntMatrix([[3]]).exact_div(2)


def test_structure_flags():
    assert structure_flags(IntMatrix([[1, 1], [1, 0]])) .primitive
    period2 = structure_flags(IntMatrix([[0, 1], [1, 0]]))
    assert period2.irreducible and not period2.primitive and period2.period == 2
    reducible = structure_flags(IntMatrix([[1, 1], [0, 1]]))
    assert reducible.essential and not reducible.irreducible
    assert not structure_flags(IntMatrix([[1, 0], [1, 0]])).essential


def test_group_ring_matrix_products_match_naive(z2):
    rng = random.Random(3)
    group = FiniteGroup.cyclic(3)
    for _ in range(30):
        a = random_group_ring_matrix(rng, group, 3)
        b = random_group_ring_matrix(rng, group, 3)
        c = a @ b
        for i in range(3):
            for j in range(3):
                expected = GroupRingElement.zero(group)
                for k in range(3):
                    expected = expected + a.entries[i][k] * b.entries[k][j]
                assert c.entries[i][j] == expected


def test_group_ring_matrix_json_round_trip(z2):
    m = GroupRingMatrix(z2, [[{"1": 1}, 1], [0, u_element(z2)]], rows=["a", "b"])
    back = GroupRingMatrix.from_json(z2, m.to_json())
    assert back == m
    assert m.project(1) == IntMatrix([[1, 0], [0, 1]], rows=["a", "b"])
    assert IntMatrix.from_json(random_int_matrix(random.Random(1), 2, 3).to_json()).shape == (2, 3)


def test_nonnegativity(z2):
    assert not GroupRingMatrix(z2, [[{"0": -1}]]).is_nonnegative()
    assert IntMatrix([[0, 2]]).is_nonnegative()
