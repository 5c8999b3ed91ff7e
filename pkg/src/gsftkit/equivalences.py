"""Shift equivalence witnesses over Z+ and Z+[G].

A witness ``(R, S, lag)`` for the ordered pair ``(A, B)`` must satisfy

    A^lag = R S,   B^lag = S R,   A R = R B,   S A = B S,

with ``R`` and ``S`` non-negative. Lag 1 is an elementary strong shift
equivalence. Nothing here searches for equivalences: witnesses are either
supplied and checked, or built along the explicit recipes below, and every
built witness is verified before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import (DomainMismatchError, HypothesisError, InputError, InvariantViolation, NotInertError,
                     ShapeMismatchError)
from .groupring import u_element
from .groups import FiniteGroup, GroupElement, generate_subgroup, is_normal, is_subgroup
from .gsft import augmentation_matrix, extension_matrix, is_inert
from .matrices import GroupRingMatrix, IntMatrix, _thaw_label, kronecker, structure_flags

Z_PLUS = "Z+"
Z_PLUS_G = "Z+[G]"


@dataclass(frozen=True)
class SEWitness:
    R: IntMatrix | GroupRingMatrix
    S: IntMatrix | GroupRingMatrix
    lag: int
    domain: str = Z_PLUS
    # when set, all matrices must have entries supported on this subgroup
    subgroup: tuple[int, ...] | None = None

    def reversed(self) -> SEWitness:
        """The witness for the swapped pair ``(B, A)``."""
        return SEWitness(self.S, self.R, self.lag, self.domain, self.subgroup)

    def to_json(self) -> dict:
        out = {"R": self.R.to_json(), "S": self.S.to_json(), "lag": self.lag, "domain": self.domain}
        if self.subgroup is not None:
            out["subgroup"] = list(self.subgroup)
        return out

    @classmethod
    def from_json(cls, data: Mapping, group: FiniteGroup | None = None) -> SEWitness:
        if not isinstance(data, Mapping):
            raise InputError("witness JSON must be an object")
        for key in ("R", "S", "lag"):
            if key not in data:
                raise InputError(f"witness JSON is missing {key!r}")
        domain = data.get("domain", Z_PLUS if group is None else Z_PLUS_G)
        lag = data["lag"]
        if isinstance(lag, bool) or not isinstance(lag, int) or lag < 1:
            raise InputError(f"lag must be a positive integer, got {lag!r}")
        if domain == Z_PLUS:
            r, s = IntMatrix.from_json(data["R"]), IntMatrix.from_json(data["S"])
        elif domain == Z_PLUS_G:
            if group is None:
                raise InputError("a group is required to read a Z+[G] witness")
            r, s = GroupRingMatrix.from_json(group, data["R"]), GroupRingMatrix.from_json(group, data["S"])
        else:
            raise InputError(f"unknown witness domain {domain!r}")
        sub = data.get("subgroup")
        return cls(r, s, lag, domain, tuple(sorted(sub)) if sub is not None else None)


@dataclass(frozen=True)
class EquationCheck:
    name: str
    ok: bool
    mismatch: tuple | None = None  # (row label, col label, lhs entry, rhs entry)

    def to_json(self) -> dict:
        out = {"equation": self.name, "ok": self.ok}
        if self.mismatch is not None:
            r, c, lhs, rhs = self.mismatch
            out["mismatch"] = {"row": _thaw_label(r), "col": _thaw_label(c),
                               "lhs": _entry_json(lhs), "rhs": _entry_json(rhs)}
        return out


def _entry_json(x):
    return x if isinstance(x, int) else x.to_dict()


@dataclass(frozen=True)
class SEReport:
    valid: bool
    lag: int
    domain: str
    equations: tuple[EquationCheck, ...]
    nonnegative: dict = field(default_factory=dict)
    support_ok: bool = True

    def __bool__(self):
        return self.valid

    @property
    def first_failure(self) -> EquationCheck | None:
        return next((e for e in self.equations if not e.ok), None)

    def to_json(self) -> dict:
        return {"valid": self.valid, "lag": self.lag, "domain": self.domain,
                "equations": [e.to_json() for e in self.equations],
                "nonnegative": dict(self.nonnegative), "subgroup_support": self.support_ok}


def _check_domain(domain: str, *mats):
    if domain == Z_PLUS:
        if not all(isinstance(m, IntMatrix) for m in mats):
            raise DomainMismatchError("a Z+ witness needs integer matrices throughout")
    elif domain == Z_PLUS_G:
        if not all(isinstance(m, GroupRingMatrix) for m in mats):
            raise DomainMismatchError("a Z+[G] witness needs group ring matrices throughout")
        group = mats[0].group
        if any(m.group != group for m in mats):
            raise DomainMismatchError("witness matrices live over different groups")
    else:
        raise DomainMismatchError(f"unknown domain {domain!r}")


def _aligned(a, b, w: SEWitness):
    """Check shapes and give ``R``, ``S`` the labels of ``A`` and ``B``."""
    a._require_square("shift equivalence")
    b._require_square("shift equivalence")
    n, m = len(a.rows), len(b.rows)
    if w.R.shape != (n, m):
        raise ShapeMismatchError(f"R has shape {w.R.shape}, expected {(n, m)}")
    if w.S.shape != (m, n):
        raise ShapeMismatchError(f"S has shape {w.S.shape}, expected {(m, n)}")
    if not isinstance(w.lag, int) or w.lag < 1:
        raise InputError(f"lag must be a positive integer, got {w.lag!r}")
    return w.R.relabeled(a.rows, b.rows), w.S.relabeled(b.rows, a.rows)


def verify_se(a, b, w: SEWitness) -> SEReport:
    """Check every defining equation of a shift equivalence and report the first mismatch of each."""
    _check_domain(w.domain, a, b, w.R, w.S)
    r, s = _aligned(a, b, w)
    checks = []
    for name, lhs, rhs in (("A^lag = RS", a.power(w.lag), r @ s),
                           ("B^lag = SR", b.power(w.lag), s @ r),
                           ("AR = RB", a @ r, r @ b),
                           ("SA = BS", s @ a, b @ s)):
        diff = lhs.first_difference(rhs)
        checks.append(EquationCheck(name, diff is None, diff))
    nonneg = {"R": r.is_nonnegative(), "S": s.is_nonnegative()}
    support_ok = True
    if w.subgroup is not None:
        support_ok = all(m.entries_within(w.subgroup) for m in (a, b, r, s))
    valid = all(c.ok for c in checks) and all(nonneg.values()) and support_ok
    return SEReport(valid, w.lag, w.domain, tuple(checks), nonneg, support_ok)


def verify_sse_chain(matrices: Sequence, witnesses: Sequence[SEWitness]) -> list[SEReport]:
    """Check a strong shift equivalence chain link by link; every link must have lag 1."""
    if len(witnesses) != len(matrices) - 1:
        raise InputError("a chain of n matrices needs n-1 witnesses")
    reports = []
    for (x, y), w in zip(zip(matrices, matrices[1:]), witnesses):
        if w.lag != 1:
            raise InputError("strong shift equivalence links must have lag 1")
        reports.append(verify_se(x, y, w))
    return reports


def _require_valid(a, b, w: SEWitness, what="witness"):
    report = verify_se(a, b, w)
    if not report.valid:
        fail = report.first_failure
        detail = fail.name if fail else "non-negativity or subgroup support"
        raise HypothesisError(f"{what} is not a valid shift equivalence: {detail} fails")
    return report


def _checked(a, b, w: SEWitness) -> SEWitness:
    report = verify_se(a, b, w)
    if not report.valid:
        raise InvariantViolation(f"constructed witness fails verification: {report.to_json()}")
    return w


def increase_lag(a, b, w: SEWitness, j: int) -> SEWitness:
    """Raise the lag by ``j``, replacing ``S`` by ``S A^j``."""
    if j < 0:
        raise InputError("lag increment must be non-negative")
    _require_valid(a, b, w, "input witness")
    if j == 0:
        return w
    r, s = _aligned(a, b, w)
    return _checked(a, b, SEWitness(r, s @ a.power(j), w.lag + j, w.domain, w.subgroup))


def _require_inert(b: GroupRingMatrix, name: str):
    cert = is_inert(b)
    if not cert.inert:
        raise NotInertError(
            f"{name} is not inert: coefficient of element {cert.element} in entry ({cert.i!r}, {cert.j!r}) of "
            f"its {cert.exponent}-th power is {cert.values[0]}, identity coefficient is {cert.values[1]}",
            cert)
    return cert


def se_between_augmentation_and_extension(b: GroupRingMatrix) -> SEWitness:
    """Witness over Z+ between ``A(B)`` and ``E(B)`` for inert ``B``.

    With ``l`` the inertness exponent and ``M`` the identity coefficient of
    ``B^l``: ``R = I (x) 1_G^T`` and ``S = M (x) 1_G``.
    """
    cert = _require_inert(b, "B")
    order = b.group.order
    group_labels = list(range(order))
    ones_row = IntMatrix.ones([0], group_labels)
    ones_col = IntMatrix.ones(group_labels, [0])
    r = kronecker(IntMatrix.identity(b.rows), ones_row).relabeled(rows=b.rows)
    s = kronecker(cert.matrix, ones_col).relabeled(cols=b.rows)
    return _checked(augmentation_matrix(b), extension_matrix(b), SEWitness(r, s, cert.exponent, Z_PLUS))


def lift_se(b: GroupRingMatrix, c: GroupRingMatrix, w: SEWitness) -> SEWitness:
    """Lift a Z+ witness between ``A(B)`` and ``A(C)`` to a Z+[G] witness between ``B`` and ``C``.

    The lag is first raised to some ``k`` at which both ``B^k`` and ``C^k``
    lie in ``u_G * Z+``. The pair ``(u_G R, A(C^k) S / |G|)`` of lag ``2k``
    is tried first. Its ``S`` factor is not a multiple of ``u_G``, so
    ``SB = CS`` can fail (for example ``B = [2u_G]``,
    ``C = [[u_G, g], [2u_G, u_G]]`` over Z/2Z). In that case the pair
    ``(B^k R, C^k S)`` of lag ``3k`` is returned; it is always valid because
    both factors are ``u_G`` multiples.
    """
    if b.group != c.group:
        raise DomainMismatchError("B and C are over different groups")
    cert_b = _require_inert(b, "B")
    cert_c = _require_inert(c, "C")
    aug_b, aug_c = augmentation_matrix(b), augmentation_matrix(c)
    if w.domain != Z_PLUS:
        raise DomainMismatchError("the witness to lift must be over Z+")
    _require_valid(aug_b, aug_c, w, "augmentation witness")
    k = max(w.lag, cert_b.exponent, cert_c.exponent)
    w = increase_lag(aug_b, aug_c, w, k - w.lag)
    r, s = _aligned(aug_b, aug_c, w)
    group = b.group
    u = u_element(group)
    b_k, c_k = b.power(k), c.power(k)
    m_c = augmentation_matrix(c_k).exact_div(group.order)
    short = SEWitness(u * GroupRingMatrix.embed(r, group), GroupRingMatrix.embed(m_c @ s, group), 2 * k, Z_PLUS_G)
    if verify_se(b, c, short).valid:
        return short
    r_g, s_g = GroupRingMatrix.embed(r, group), GroupRingMatrix.embed(s, group)
    return _checked(b, c, SEWitness(b_k @ r_g, c_k @ s_g, 3 * k, Z_PLUS_G))


def se_from_inert_pair(b: GroupRingMatrix, c: GroupRingMatrix, w_aug: SEWitness) -> SEWitness:
    """Shift equivalence over Z+[G] for inert ``B``, ``C`` whose augmentations are shift equivalent over Z+."""
    _require_inert(b, "B")
    _require_inert(c, "C")
    _require_valid(augmentation_matrix(b), augmentation_matrix(c), w_aug, "augmentation witness")
    return lift_se(b, c, w_aug)


@dataclass(frozen=True)
class Descent:
    element: GroupElement
    conjugated: GroupRingMatrix  # g B g^-1
    witness: SEWitness


def _first_escape(m: GroupRingMatrix, allowed: frozenset[int]):
    for r, row in zip(m.rows, m.entries):
        for c, x in zip(m.cols, row):
            if not set(x.support()) <= allowed:
                return r, c, x
    return None


def descend_se_to_subgroup(a: GroupRingMatrix, b: GroupRingMatrix, subgroup: Sequence,
                           w: SEWitness) -> Descent:
    """Turn a Z+[G] witness between matrices over Z+[H] into a Z+[H] witness for ``(A, g B g^-1)``.

    ``H`` must be normal and ``A``, ``B`` irreducible and essential. If the
    witness already lives over Z+[H] then ``g`` is the identity. Otherwise
    ``g`` is the first group element, scanning ``R`` row-major and then by
    element index, that occurs in an entry of ``R``; the new witness is
    ``(R g^-1, g S)``.
    """
    group = a.group
    if b.group != group:
        raise DomainMismatchError("A and B are over different groups")
    if not is_subgroup(group, subgroup):
        raise HypothesisError(f"{sorted(subgroup)} is not a subgroup")
    h = frozenset(generate_subgroup(group, subgroup))
    if not is_normal(group, h):
        raise HypothesisError(f"subgroup {sorted(h)} is not normal")
    for name, m in (("A", a), ("B", b)):
        esc = _first_escape(m, h)
        if esc is not None:
            raise HypothesisError(f"{name}[{esc[0]!r}, {esc[1]!r}] = {esc[2]!r} is not in Z[H]")
        flags = structure_flags(m)
        if not (flags.irreducible and flags.essential):
            raise HypothesisError(f"{name} must be irreducible and essential")
    if w.domain != Z_PLUS_G:
        raise DomainMismatchError("descent needs a Z+[G] witness")
    _require_valid(a, b, w)
    r, s = _aligned(a, b, w)

    if _first_escape(r, h) is None and _first_escape(s, h) is None:
        g = group.identity
    else:
        g = None
        for row in r.entries:
            for x in row:
                nz = x.support()
                if nz:
                    g = group.element(nz[0])
                    break
            if g is not None:
                break
        if g is None:
            raise HypothesisError("R is zero; A and B cannot be essential")
    ginv = g.inverse()
    new_r = r * ginv
    new_s = g * s
    for name, m in (("R g^-1", new_r), ("g S", new_s)):
        esc = _first_escape(m, h)
        if esc is not None:
            raise HypothesisError(f"{name} entry ({esc[0]!r}, {esc[1]!r}) = {esc[2]!r} escapes Z[H]")
    conj_b = (g * b) * ginv
    witness = SEWitness(new_r, new_s, w.lag, Z_PLUS_G, tuple(sorted(h)))
    return Descent(g, conj_b, _checked(a, conj_b, witness))
