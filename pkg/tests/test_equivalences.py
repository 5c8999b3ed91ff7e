import pytest

from gsftkit.equivalences import (SEWitness, Z_PLUS, Z_PLUS_G, descend_se_to_subgroup, increase_lag, lift_se,
                                  se_between_augmentation_and_extension, se_from_inert_pair, verify_se,
                                  verify_sse_chain)
from gsftkit.errors import DomainMismatchError, HypothesisError, NotInertError
from gsftkit.groupring import u_element
from gsftkit.groups import FiniteGroup, generate_subgroup
from gsftkit.gsft import augmentation_matrix, extension_matrix
from gsftkit.matrices import GroupRingMatrix, IntMatrix

from builders import descent_instance, inert_pair, rng_for
from conftest import s3_group

Z2 = FiniteGroup.cyclic(2)
E, G = {"0": 1}, {"1": 1}
U = {"0": 1, "1": 1}


def test_verify_se_accepts_elementary_pair():
    r, s = IntMatrix([[1, 1]]), IntMatrix([[1], [1]])
    report = verify_se(IntMatrix([[2]]), IntMatrix([[1, 1], [1, 1]]), SEWitness(r, s, 1))
    assert report.valid and report.first_failure is None


def test_verify_se_reports_failing_equation():
    r, s = IntMatrix([[1, 0]]), IntMatrix([[1], [1]])
    report = verify_se(IntMatrix([[2]]), IntMatrix([[1, 1], [1, 1]]), SEWitness(r, s, 1))
    assert not report.valid
    assert report.first_failure.name == "A^lag = RS"
    assert report.to_json()["equations"][0]["mismatch"]["lhs"] == 2


def test_verify_se_rejects_negative_and_mixed_domains():
    r, s = IntMatrix([[2, -1]]), IntMatrix([[1], [1]])
    assert not verify_se(IntMatrix([[1]]), IntMatrix([[1, 1], [1, 1]]), SEWitness(r, s, 1)).valid
    with pytest.raises(DomainMismatchError):
        verify_se(GroupRingMatrix(Z2, [[U]]), IntMatrix([[2]]), SEWitness(IntMatrix([[1]]), IntMatrix([[1]]), 1))


def test_reversed_witness():
    a, b = IntMatrix([[2]]), IntMatrix([[1, 1], [1, 1]])
    w = SEWitness(IntMatrix([[1, 1]]), IntMatrix([[1], [1]]), 1)
    assert verify_se(b, a, w.reversed()).valid


def test_increase_lag_keeps_validity():
    a, b = IntMatrix([[2]]), IntMatrix([[1, 1], [1, 1]])
    w = SEWitness(IntMatrix([[1, 1]]), IntMatrix([[1], [1]]), 1)
    for j in range(4):
        longer = increase_lag(a, b, w, j)
        assert longer.lag == 1 + j and verify_se(a, b, longer).valid


def test_sse_chain():
    a, b = IntMatrix([[2]]), IntMatrix([[1, 1], [1, 1]])
    w = SEWitness(IntMatrix([[1, 1]]), IntMatrix([[1], [1]]), 1)
    reports = verify_sse_chain([a, b, a], [w, w.reversed()])
    assert all(r.valid for r in reports)


def test_aug_ext_witness_for_u():
    b = GroupRingMatrix(Z2, [[U]])
    w = se_between_augmentation_and_extension(b)
    assert w.lag == 1
    assert w.R.entries == ((1, 1),) and w.S.entries == ((1,), (1,))


def test_aug_ext_witness_for_u_times_golden_mean():
    b = u_element(Z2) * GroupRingMatrix.embed(IntMatrix([[1, 1], [1, 0]]), Z2)
    w = se_between_augmentation_and_extension(b)
    assert w.lag == 1
    assert verify_se(augmentation_matrix(b), extension_matrix(b), w).valid


def test_aug_ext_witness_needs_inert():
    with pytest.raises(NotInertError):
        se_between_augmentation_and_extension(GroupRingMatrix(Z2, [[G, E], [G, 0]]))


def test_lift_documented_instance():
    b, c = GroupRingMatrix(Z2, [[U]]), GroupRingMatrix(Z2, [[E, G], [E, G]])
    w = SEWitness(IntMatrix([[1, 1]]), IntMatrix([[1], [1]]), 1, Z_PLUS)
    lifted = lift_se(b, c, w)
    assert lifted.domain == Z_PLUS_G and lifted.lag == 4
    assert verify_se(b, c, lifted).valid
    # the augmented witness is a Z+ witness of the same lag
    aug = SEWitness(augmentation_matrix(lifted.R), augmentation_matrix(lifted.S), lifted.lag, Z_PLUS)
    assert verify_se(augmentation_matrix(b), augmentation_matrix(c), aug).valid
    assert verify_se(b, c, se_from_inert_pair(b, c, w)).valid


def test_lift_falls_back_when_short_recipe_fails():
    b = GroupRingMatrix(Z2, [[{"0": 2, "1": 2}]])
    c = GroupRingMatrix(Z2, [[U, G], [{"0": 2, "1": 2}, U]])
    w = SEWitness(IntMatrix([[2, 1]]), IntMatrix([[1], [2]]), 1, Z_PLUS)
    # the lag-2k pair (u_G R, A(C^k) S / |G|) at k = 2
    s2 = increase_lag(augmentation_matrix(b), augmentation_matrix(c), w, 1).S
    m_c = augmentation_matrix(c.power(2)).exact_div(2)
    short = SEWitness(u_element(Z2) * GroupRingMatrix.embed(w.R, Z2), GroupRingMatrix.embed(m_c @ s2, Z2), 4,
                      Z_PLUS_G)
    report = verify_se(b, c, short)
    assert not report.valid and report.first_failure.name == "SA = BS"
    lifted = lift_se(b, c, w)
    assert lifted.lag == 6 and verify_se(b, c, lifted).valid


def test_lift_trivial_and_generated_pairs():
    b = GroupRingMatrix(Z2, [[U]])
    ident = SEWitness(IntMatrix([[1]]), IntMatrix([[2]]), 1, Z_PLUS)
    assert verify_se(b, b, lift_se(b, b, ident)).valid
    rng = rng_for(12)
    for _ in range(10):
        bb, cc, w = inert_pair(rng, FiniteGroup.cyclic(3))
        lifted = lift_se(bb, cc, w)
        assert verify_se(bb, cc, lifted).valid
        aug = SEWitness(augmentation_matrix(lifted.R), augmentation_matrix(lifted.S), lifted.lag, Z_PLUS)
        assert verify_se(augmentation_matrix(bb), augmentation_matrix(cc), aug).valid


def test_lift_rejects_non_inert():
    b = GroupRingMatrix(Z2, [[G, E], [G, 0]])
    with pytest.raises(NotInertError):
        lift_se(b, b, SEWitness(IntMatrix([[1, 0], [0, 1]]), IntMatrix([[1, 1], [1, 0]]), 1))


def test_descent_trivial_subgroup():
    a = GroupRingMatrix(Z2, [[E]])
    w = SEWitness(GroupRingMatrix(Z2, [[G]]), GroupRingMatrix(Z2, [[G]]), 2, Z_PLUS_G)
    result = descend_se_to_subgroup(a, a, [0], w)
    assert result.element.index == 1
    assert result.witness.R.entries[0][0] == 1 and result.witness.S.entries[0][0] == 1
    assert result.witness.subgroup == (0,)


def test_descent_whole_group_is_identity():
    b, c = GroupRingMatrix(Z2, [[U]]), GroupRingMatrix(Z2, [[E, G], [E, G]])
    lifted = lift_se(b, c, SEWitness(IntMatrix([[1, 1]]), IntMatrix([[1], [1]]), 1))
    result = descend_se_to_subgroup(b, c, [0, 1], lifted)
    assert result.element.is_identity()
    assert result.witness.R == lifted.R and result.witness.S == lifted.S


@pytest.mark.parametrize("seed", range(5))
def test_descent_round_trip_z4(seed):
    z4 = FiniteGroup.cyclic(4)
    a, b, w = descent_instance(rng_for(seed), z4, [0, 2], 1)
    assert verify_se(a, b, w).valid
    result = descend_se_to_subgroup(a, b, [0, 2], w)
    assert verify_se(a, result.conjugated, result.witness).valid
    assert result.witness.subgroup == (0, 2)


def test_descent_round_trip_s3():
    s3, perms = s3_group()
    a3 = sorted(generate_subgroup(s3, [perms.index((1, 2, 0))]))
    t = perms.index((1, 0, 2))
    a, b, w = descent_instance(rng_for(1), s3, a3, t)
    result = descend_se_to_subgroup(a, b, a3, w)
    assert result.element.index not in a3
    assert verify_se(a, result.conjugated, result.witness).valid


def test_descent_rejects_non_normal():
    s3, perms = s3_group()
    h = sorted(generate_subgroup(s3, [perms.index((1, 0, 2))]))
    a = GroupRingMatrix(s3, [[1]])
    w = SEWitness(GroupRingMatrix(s3, [[1]]), GroupRingMatrix(s3, [[1]]), 1, Z_PLUS_G)
    with pytest.raises(HypothesisError, match="normal"):
        descend_se_to_subgroup(a, a, h, w)


def test_witness_json_round_trip():
    b, c = GroupRingMatrix(Z2, [[U]]), GroupRingMatrix(Z2, [[E, G], [E, G]])
    lifted = lift_se(b, c, SEWitness(IntMatrix([[1, 1]]), IntMatrix([[1], [1]]), 1))
    back = SEWitness.from_json(lifted.to_json(), Z2)
    assert back == lifted
