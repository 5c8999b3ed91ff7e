"""Weight classes and elementary positive equivalence moves.

The weight group ``W_i(A)`` collects the label products of cycles based at
``i`` in the graph of ``A``; for irreducible ``A`` it is a subgroup whose
conjugacy class (the weight class) does not depend on ``i``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import DomainMismatchError, HypothesisError, InputError, InvariantViolation, ShapeMismatchError
from .groupring import GroupRingElement
from .groups import GroupElement, are_conjugate_subgroups, is_subgroup
from .matrices import GroupRingMatrix, structure_flags


@dataclass(frozen=True)
class WeightClass:
    subgroup: tuple[int, ...]
    base: object

    def to_json(self) -> dict:
        return {"subgroup": list(self.subgroup), "base": self.base}


def _require_irreducible(a: GroupRingMatrix):
    if not isinstance(a, GroupRingMatrix):
        raise InputError("weight classes are defined for matrices over Z[G]")
    a._require_square("weight group")
    if not a.is_nonnegative():
        raise InputError("weight groups need a matrix over Z+[G]")
    if not structure_flags(a).irreducible:
        raise HypothesisError("matrix is reducible; its weight set need not be a subgroup")


def _weights_at(a: GroupRingMatrix, base: int) -> tuple[int, ...]:
    """BFS on ``V x G`` from the successors of ``(base, 1)``; returns ``{g : (base, g) reached}``."""
    group = a.group
    table = group.table
    arcs = [[(j, x.support()) for j, x in enumerate(row) if x] for row in a.entries]
    seen = set()
    queue = deque()
    for j, labels in arcs[base]:
        for t in labels:
            if (j, t) not in seen:
                seen.add((j, t))
                queue.append((j, t))
    while queue:
        v, h = queue.popleft()
        for j, labels in arcs[v]:
            for t in labels:
                nxt = (j, table[h][t])
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return tuple(sorted(g for v, g in seen if v == base))


def weight_group(a: GroupRingMatrix, i=None) -> WeightClass:
    """Weight group at vertex ``i`` (default: the first vertex).

    All base vertices are computed and checked to give conjugate subgroups.
    """
    _require_irreducible(a)
    group = a.group
    base = a.rows[0] if i is None else i
    pos = a.row_position(base)
    per_vertex = [_weights_at(a, v) for v in range(len(a.rows))]
    for v, w in enumerate(per_vertex):
        if not is_subgroup(group, w):
            raise InvariantViolation(f"weights at {a.rows[v]!r} do not form a subgroup: {w}")
        if are_conjugate_subgroups(group, per_vertex[pos], w) is None:
            raise InvariantViolation("weight groups at different vertices are not conjugate")
    return WeightClass(per_vertex[pos], base)


def weight_class_equal(a: GroupRingMatrix, b: GroupRingMatrix) -> tuple[bool, GroupElement | None]:
    """Whether the weight classes agree; if so also a ``g`` with ``g W(A) g^-1 = W(B)``."""
    if a.group != b.group:
        raise DomainMismatchError("matrices over different groups")
    wa, wb = weight_group(a), weight_group(b)
    g = are_conjugate_subgroups(a.group, wa.subgroup, wb.subgroup)
    return g is not None, g


class StabilizedMatrix:
    """A finite core standing for the infinite matrix that is the identity outside the core."""

    __slots__ = ("core",)

    def __init__(self, core: GroupRingMatrix):
        core._require_square("stabilized matrix")
        self.core = core

    @classmethod
    def identity_minus(cls, a: GroupRingMatrix) -> StabilizedMatrix:
        """``(I - A)`` stabilized."""
        return cls(a.identity_like() - a)

    @classmethod
    def elementary(cls, like: GroupRingMatrix, i, j, z) -> StabilizedMatrix:
        """Identity except for ``z`` at ``(i, j)``, ``i != j``."""
        core = like.identity_like()
        pi, pj = core.row_position(i), core.col_position(j)
        if pi == pj:
            raise InputError("elementary matrices need i != j")
        entries = [list(row) for row in core.entries]
        entries[pi][pj] = core._coerce_entry(z)
        return cls(GroupRingMatrix(core.group, entries, core.rows, core.cols))

    def __matmul__(self, other: StabilizedMatrix) -> StabilizedMatrix:
        if self.core.rows != other.core.rows:
            raise ShapeMismatchError("stabilized cores differ; growing the core is not supported")
        return StabilizedMatrix(self.core @ other.core)

    def __eq__(self, other):
        if not isinstance(other, StabilizedMatrix):
            return NotImplemented
        return self.core == other.core

    def __repr__(self):
        return f"StabilizedMatrix({self.core!r})"


LEFT = "left"
RIGHT = "right"


def apply_positive_move(a: GroupRingMatrix, side: str, i, j, g) -> GroupRingMatrix:
    """One elementary positive equivalence move.

    ``side="left"``: ``(I - B) = E_ij(g) (I - A)``, i.e. row ``i`` of ``B`` is
    ``A_i + g A_j - g e_j``. ``side="right"``: ``(I - B) = (I - A) E_ij(g)``,
    i.e. column ``j`` of ``B`` is ``A^j + A^i g - e_i g``. Requires ``i != j``
    and a positive coefficient of ``g`` in ``A[i, j]``; both indices must lie
    in the core.
    """
    if not isinstance(a, GroupRingMatrix):
        raise InputError("positive moves act on matrices over Z+[G]")
    a._require_square("positive move")
    if not a.is_nonnegative():
        raise InputError("positive moves need a matrix over Z+[G]")
    if side not in (LEFT, RIGHT):
        raise InputError(f"side must be {LEFT!r} or {RIGHT!r}")
    group = a.group
    g = group.element(g)
    pi, pj = a.row_position(i), a.col_position(j)
    if pi == pj:
        raise InputError("positive moves need i != j")
    if a.entries[pi][pj][g] <= 0:
        raise HypothesisError(f"coefficient of {g.index} in A[{i!r}, {j!r}] is not positive")

    entries = [list(row) for row in a.entries]
    n = len(entries)
    gel = GroupRingElement.basis(group, g)
    if side == LEFT:
        for c in range(n):
            entries[pi][c] = entries[pi][c] + gel * a.entries[pj][c]
        entries[pi][pj] = entries[pi][pj] - gel
    else:
        for r in range(n):
            entries[r][pj] = entries[r][pj] + a.entries[r][pi] * gel
        entries[pi][pj] = entries[pi][pj] - gel
    b = GroupRingMatrix(group, entries, a.rows, a.cols)
    if not b.is_nonnegative():
        raise InvariantViolation("positive move produced a negative coefficient")

    move = StabilizedMatrix.elementary(a, i, j, gel)
    before = StabilizedMatrix.identity_minus(a)
    expected = move @ before if side == LEFT else before @ move
    if StabilizedMatrix.identity_minus(b) != expected:
        raise InvariantViolation("moved matrix does not reproduce the stabilized identity")
    return b
