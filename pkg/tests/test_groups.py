import pytest

from gsftkit.errors import DomainMismatchError, GroupAxiomError
from gsftkit.groups import (FiniteGroup, are_conjugate_subgroups, conjugate_subgroup, generate_subgroup, is_normal,
                            is_subgroup, make_group, regular_permutation_matrix)
from gsftkit.matrices import IntMatrix, mat_mul

from conftest import s3_group


def test_cyclic_table():
    g = FiniteGroup.cyclic(4)
    assert g.order == 4
    assert g.mul(3, 2) == 1
    assert g.inv(1) == 3
    assert g.is_abelian()


def test_rejects_non_associative():
    # a Latin square with identity 0 that is not a group
    table = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(GroupAxiomError, match="associativ"):
        FiniteGroup(table)


def test_rejects_bad_identity_and_missing_inverse():
    with pytest.raises(GroupAxiomError):
        FiniteGroup([[1, 0], [0, 1]])
    with pytest.raises(GroupAxiomError):
        FiniteGroup([[0, 1], [1, 1]])


def test_order_cap():
    with pytest.raises(Exception):
        FiniteGroup.cyclic(65)


def test_foreign_element_rejected():
    a, b = FiniteGroup.cyclic(2), FiniteGroup.cyclic(3)
    with pytest.raises(DomainMismatchError):
        a.element(b.element(1))


def test_make_group_specs():
    assert make_group({"type": "cyclic", "order": 3}) == FiniteGroup.cyclic(3)
    klein = make_group({"type": "product", "factors": [{"type": "cyclic", "order": 2}] * 2})
    assert klein.order == 4 and all(klein.mul(x, x) == 0 for x in range(4))
    s3 = s3_group()[0]
    assert make_group({"type": "table", "table": s3.table}) == s3


def test_s3_nonabelian():
    s3, perms = s3_group()
    assert not s3.is_abelian()
    a3 = generate_subgroup(s3, [perms.index((1, 2, 0))])
    assert len(a3) == 3 and is_normal(s3, a3)
    t = perms.index((1, 0, 2))
    h = generate_subgroup(s3, [t])
    assert is_subgroup(s3, h) and not is_normal(s3, h)
    other = generate_subgroup(s3, [perms.index((0, 2, 1))])
    g = are_conjugate_subgroups(s3, h, other)
    assert g is not None and set(conjugate_subgroup(s3, g, h)) == set(other)
    assert are_conjugate_subgroups(s3, h, a3) is None


def test_regular_representation_is_homomorphism():
    groups = [FiniteGroup.cyclic(n) for n in range(1, 7)] + [s3_group()[0]]
    groups.append(make_group({"type": "product", "factors": [{"type": "cyclic", "order": 2}] * 3}))
    for grp in groups:
        mats = [regular_permutation_matrix(grp, g) for g in range(grp.order)]
        assert mats[0] == IntMatrix.identity(range(grp.order))
        for g in range(grp.order):
            for h in range(grp.order):
                assert mat_mul(mats[g], mats[h]) == mats[grp.mul(g, h)]
