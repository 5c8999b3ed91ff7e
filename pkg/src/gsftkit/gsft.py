"""Augmentation, extension, inertness and quotients for matrices over Z+[G].

A square matrix ``B`` over Z+[G] presents a free G-SFT: its extension
``E(B)`` is the adjacency matrix of a |G|-fold covering graph on ``V x G``
with G acting on the second coordinate, and its augmentation ``A(B)`` is the
adjacency matrix of the quotient. :func:`quotient_presentation` goes the other
way, from a free graph action to ``B``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import ActionError, InputError, InvariantViolation, NegativeEntryError, ShapeMismatchError
from .groupring import GroupRingElement
from .groups import FiniteGroup, regular_permutation_matrix
from .matrices import (GroupRingMatrix, IntMatrix, _freeze_label, _thaw_label, equal_up_to_relabeling,
                       kronecker, reciprocal_charpoly)


def _require_nonnegative_square(b: GroupRingMatrix):
    if not isinstance(b, GroupRingMatrix):
        raise InputError(f"expected a matrix over Z[G], got {type(b).__name__}")
    b._require_square()
    for r, row in zip(b.rows, b.entries):
        for c, x in zip(b.cols, row):
            if not x.is_nonnegative():
                raise NegativeEntryError(f"entry ({r!r}, {c!r}) = {x!r} has a negative coefficient")


def augmentation_matrix(b: GroupRingMatrix) -> IntMatrix:
    """Entrywise coefficient sum."""
    return IntMatrix([[x.augmentation() for x in row] for row in b.entries], b.rows, b.cols)


def extension_matrix(b: GroupRingMatrix) -> IntMatrix:
    """The covering adjacency matrix on labels ``(i, g)``.

    Entry ``((i, g), (j, h))`` is the coefficient of ``g^-1 h`` in ``B[i, j]``.
    The result is cross-checked against ``sum_g proj_g(B) (x) P_g``.
    """
    _require_nonnegative_square(b)
    group = b.group
    order = group.order
    inv, table = group.inverses, group.table
    labels = [(i, g) for i in b.rows for g in range(order)]
    entries = []
    for row in b.entries:
        for g in range(order):
            ginv = inv[g]
            entries.append([x.coeffs[table[ginv][h]] for x in row for h in range(order)])
    ext = IntMatrix(entries, labels, labels)

    via_kron = None
    for g in range(order):
        term = kronecker(b.project(g), regular_permutation_matrix(group, g))
        via_kron = term if via_kron is None else via_kron + term
    if via_kron != ext:
        raise InvariantViolation("the two descriptions of the extension matrix disagree")
    return ext


def inertness_bound(b) -> int:
    """Exponent at which ``B^l in u_G Z+`` decides inertness: ``max(1, n(|G|-1))``."""
    b._require_square()
    return max(1, len(b.rows) * (b.group.order - 1))


@dataclass(frozen=True)
class InertnessCertificate:
    """Outcome of :func:`is_inert`.

    Inert: ``B**exponent == u_G * matrix`` entrywise. Not inert: at
    ``exponent`` the entry ``(i, j)`` has coefficient ``values[0]`` on
    ``element`` but ``values[1]`` on the identity.
    """

    inert: bool
    exponent: int
    bound: int
    matrix: IntMatrix | None = None
    element: int | None = None
    i: object = None
    j: object = None
    values: tuple[int, int] | None = None

    def to_json(self) -> dict:
        out = {"inert": self.inert, "exponent": self.exponent, "bound": self.bound}
        if self.inert:
            out["matrix"] = self.matrix.to_json()
        else:
            out["witness"] = {"g": self.element, "i": _thaw_label(self.i), "j": _thaw_label(self.j),
                              "coefficient_at_g": self.values[0], "coefficient_at_identity": self.values[1]}
        return out


def _u_multiple_witness(p: GroupRingMatrix):
    for r, row in zip(p.rows, p.entries):
        for c, x in zip(p.cols, row):
            base = x.coeffs[0]
            for g, coef in enumerate(x.coeffs):
                if coef != base:
                    return g, r, c, coef, base
    return None


def is_inert(b: GroupRingMatrix) -> InertnessCertificate:
    """Decide whether some power of ``B`` lies in ``u_G * Z+``.

    Powers ``B, B^2, ...`` are scanned up to the bound, so an inert verdict
    carries the least witnessing exponent. Once a power lands in
    ``u_G * Z+`` every later power does too, so the bound power is decisive.
    """
    _require_nonnegative_square(b)
    bound = inertness_bound(b)
    power = b
    for ell in range(1, bound + 1):
        bad = _u_multiple_witness(power)
        if bad is None:
            return InertnessCertificate(True, ell, bound, matrix=power.project(0))
        if ell == bound:
            g, r, c, at_g, at_e = bad
            return InertnessCertificate(False, ell, bound, element=g, i=r, j=c, values=(at_g, at_e))
        power = power @ b
    raise AssertionError("unreachable")


def zeta_equal(b: GroupRingMatrix) -> bool:
    """Whether the extension and the augmentation have the same zeta function."""
    return reciprocal_charpoly(extension_matrix(b)) == reciprocal_charpoly(augmentation_matrix(b))


# graph actions ---------------------------------------------------------------

Edge = tuple  # (source position, target position, multiplicity index)


def _compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """``p after q``."""
    return tuple(p[x] for x in q)


@dataclass(frozen=True)
class GraphAction:
    """A group acting on the graph of ``adjacency`` by graph automorphisms.

    ``vertex_perms[g][v]`` is the position of ``g.v``. ``edge_perms[g]`` maps
    edges ``(i, j, k)`` (positions, ``0 <= k < A[i, j]``) to edges; when
    omitted, the canonical lift ``(i, j, k) -> (g.i, g.j, k)`` is used. The
    constructor validates that this is a group action, free on vertices and
    compatible with source and target maps.
    """

    adjacency: IntMatrix
    group: FiniteGroup
    vertex_perms: tuple
    edge_perms: tuple | None = field(default=None)

    def __post_init__(self):
        a, group = self.adjacency, self.group
        a._require_square("graph action")
        if not a.is_nonnegative():
            raise NegativeEntryError("adjacency matrix has a negative entry")
        n = len(a.rows)
        perms = tuple(tuple(p) for p in self.vertex_perms)
        if len(perms) != group.order:
            raise ActionError(f"need one vertex permutation per group element, got {len(perms)}")
        for g, p in enumerate(perms):
            if sorted(p) != list(range(n)):
                raise ActionError(f"vertex map of element {g} is not a permutation of 0..{n - 1}")
        object.__setattr__(self, "vertex_perms", perms)
        if perms[0] != tuple(range(n)):
            raise ActionError("the identity element does not act trivially")
        for g in range(group.order):
            for h in range(group.order):
                if perms[group.table[g][h]] != _compose(perms[g], perms[h]):
                    raise ActionError(f"not an action: map of {g}*{h} differs from composite of maps")
        for g in range(1, group.order):
            for v in range(n):
                if perms[g][v] == v:
                    raise ActionError(f"action is not free: element {g} fixes vertex {a.rows[v]!r}")
        m = a.entries
        for g in range(1, group.order):
            p = perms[g]
            for i in range(n):
                for j in range(n):
                    if m[p[i]][p[j]] != m[i][j]:
                        raise ActionError(
                            f"element {g} is not a graph automorphism: A[{a.rows[i]!r},{a.rows[j]!r}] = {m[i][j]}"
                            f" but A at the image is {m[p[i]][p[j]]}")
        edges = self.edges_by_position()
        if self.edge_perms is None:
            eperms = tuple({(i, j, k): (p[i], p[j], k) for (i, j, k) in edges} for p in perms)
        else:
            eperms = tuple(dict(ep) for ep in self.edge_perms)
            if len(eperms) != group.order:
                raise ActionError("need one edge map per group element")
            edge_set = set(edges)
            for g, ep in enumerate(eperms):
                if set(ep) != edge_set or set(ep.values()) != edge_set:
                    raise ActionError(f"edge map of element {g} is not a bijection of the edge set")
                for (i, j, k), (i2, j2, _) in ep.items():
                    if (i2, j2) != (perms[g][i], perms[g][j]):
                        raise ActionError(f"edge map of element {g} does not commute with endpoints at edge {(i, j, k)}")
            for g in range(group.order):
                for h in range(group.order):
                    gh = eperms[group.table[g][h]]
                    if any(gh[e] != eperms[g][eperms[h][e]] for e in edges):
                        raise ActionError(f"edge maps are not an action at {g}*{h}")
        object.__setattr__(self, "edge_perms", eperms)

    def edges_by_position(self) -> list[Edge]:
        m = self.adjacency.entries
        return [(i, j, k) for i, row in enumerate(m) for j, x in enumerate(row) for k in range(x)]

    def edges(self) -> list[tuple]:
        rows = self.adjacency.rows
        return [(rows[i], rows[j], k) for i, j, k in self.edges_by_position()]

    def act_on_vertex(self, g: int, label):
        rows = self.adjacency.rows
        return rows[self.vertex_perms[self.group.index(g)][self.adjacency.row_position(label)]]

    @classmethod
    def from_generators(cls, adjacency: IntMatrix, group: FiniteGroup,
                        vertex_generators: Mapping[int, Sequence[int]],
                        edge_generators: Mapping[int, Mapping] | None = None) -> GraphAction:
        """Extend permutations given for some group elements to the whole group.

        Permutations are position lists over ``adjacency.rows``. The generated
        maps must agree wherever two words reach the same element, otherwise
        the input is not an action.
        """
        n = len(adjacency.rows)
        gens = {group.index(g): tuple(p) for g, p in vertex_generators.items()}
        for g, p in gens.items():
            if sorted(p) != list(range(n)):
                raise ActionError(f"vertex map of element {g} is not a permutation of 0..{n - 1}")
        perms = _close_under_generators(group, gens, tuple(range(n)), _compose, "vertex")
        eperms = None
        if edge_generators is not None:
            egens = {group.index(g): dict(m) for g, m in edge_generators.items()}
            ident = {(i, j, k): (i, j, k) for i, row in enumerate(adjacency.entries)
                     for j, x in enumerate(row) for k in range(x)}
            eperms = _close_under_generators(group, egens, ident,
                                             lambda p, q: {e: p[q[e]] for e in q}, "edge")
        return cls(adjacency, group, perms, eperms)


def _close_under_generators(group, gens, identity, compose, what):
    maps = {0: identity}
    queue = deque([0])
    while queue:
        g = queue.popleft()
        for s, ps in gens.items():
            try:
                candidate = compose(maps[g], ps)
            except KeyError:
                raise ActionError(f"{what} map of element {s} is not defined on every {what}") from None
            gs = group.table[g][s]
            if gs in maps:
                if maps[gs] != candidate:
                    raise ActionError(f"{what} maps are inconsistent at element {gs}: not a group action")
            else:
                maps[gs] = candidate
                queue.append(gs)
    if len(maps) != group.order:
        missing = sorted(set(range(group.order)) - set(maps))
        raise ActionError(f"generators do not generate the group; no map for elements {missing}")
    return tuple(maps[g] for g in range(group.order))


def extension_action(b: GroupRingMatrix) -> GraphAction:
    """The covering graph of ``B`` with G acting by ``g.(i, h) = (i, gh)``."""
    ext = extension_matrix(b)
    group = b.group
    order = group.order
    n = len(b.rows)
    perms = [tuple(i * order + group.table[g][h] for i in range(n) for h in range(order))
             for g in range(order)]
    return GraphAction(ext, group, perms)


def quotient_presentation(action: GraphAction) -> tuple[GroupRingMatrix, dict]:
    """Present a free graph action as a matrix over Z+[G].

    The representative of each orbit is its first vertex in row order. The
    vertex ``g.rep_i`` is renamed ``(rep_i, g)`` and ``B[rep_i, rep_j]`` has
    coefficient ``A[rep_i, g.rep_j]`` on ``g``. Returns ``B`` and the renaming,
    after checking that ``E(B)`` reproduces the input under it.
    """
    a, group = action.adjacency, action.group
    perms = action.vertex_perms
    n = len(a.rows)
    reps = []
    owner = {}
    for v in range(n):
        if v in owner:
            continue
        reps.append(v)
        for g in range(group.order):
            w = perms[g][v]
            owner[w] = (v, g)
    rep_labels = [a.rows[v] for v in reps]
    relabel = {a.rows[w]: (a.rows[v], g) for w, (v, g) in owner.items()}
    entries = []
    for ri in reps:
        row = []
        for rj in reps:
            row.append(GroupRingElement(group, [a.entries[ri][perms[g][rj]] for g in range(group.order)]))
        entries.append(row)
    b = GroupRingMatrix(group, entries, rep_labels, rep_labels)

    if not equal_up_to_relabeling(a, extension_matrix(b), relabel):
        raise InvariantViolation("extension of the quotient does not reproduce the input graph")
    for g in range(group.order):
        for w in range(n):
            i, h = relabel[a.rows[w]]
            if relabel[a.rows[perms[g][w]]] != (i, group.table[g][h]):
                raise InvariantViolation("quotient relabeling does not intertwine the group actions")
    return b, relabel


def graph_action_is_inert(action: GraphAction) -> InertnessCertificate:
    """Inertness of a free graph action, via its quotient presentation.

    The verdict is cross-checked on the input adjacency matrix: at the
    certificate's exponent ``l``, ``A^l[i, j] == A^l[i, g.j]`` for all
    ``g, i, j`` must hold exactly when the action is inert.
    """
    b, _ = quotient_presentation(action)
    cert = is_inert(b)
    power = action.adjacency.power(cert.exponent).entries
    perms = action.vertex_perms
    n = len(power)
    holds = all(power[i][j] == power[i][p[j]] for p in perms for i in range(n) for j in range(n))
    if holds != cert.inert:
        raise InvariantViolation("direct graph criterion disagrees with the group-ring criterion")
    return cert


def graph_action_from_json(data: Mapping) -> GraphAction:
    """Parse ``{"adjacency": matrix, "group": spec, "vertex_action": {...}, "edge_action": {...}}``.

    ``vertex_action`` maps element indices (as strings) to permutations. Each
    permutation lists, for every vertex in label order, the image vertex given
    either as a label or as a position. ``edge_action`` optionally maps element
    indices to lists of ``[[i, j, k], [i2, j2, k2]]`` pairs with vertex labels.
    """
    from .groups import make_group

    if not isinstance(data, Mapping):
        raise InputError("graph action JSON must be an object")
    for key in ("adjacency", "group", "vertex_action"):
        if key not in data:
            raise InputError(f"graph action JSON is missing {key!r}")
    adjacency = IntMatrix.from_json(data["adjacency"])
    group = make_group(data["group"])
    labels = adjacency.rows
    label_set = set(labels)

    def position(x):
        x = _freeze_label(x)
        if x in label_set:
            return adjacency.row_position(x)
        if isinstance(x, int) and 0 <= x < len(labels):
            return x
        raise InputError(f"unknown vertex {x!r} in action")

    raw = data["vertex_action"]
    if not isinstance(raw, Mapping):
        raise InputError("'vertex_action' must map element indices to permutations")
    vgens = {}
    for key, perm in raw.items():
        if not isinstance(perm, list) or len(perm) != len(labels):
            raise InputError(f"permutation for element {key} must list {len(labels)} images")
        vgens[_int_key(key)] = [position(x) for x in perm]
    egens = None
    if data.get("edge_action") is not None:
        egens = {}
        for key, pairs in data["edge_action"].items():
            mapping = {}
            for src, dst in pairs:
                mapping[(position(src[0]), position(src[1]), int(src[2]))] = \
                    (position(dst[0]), position(dst[1]), int(dst[2]))
            egens[_int_key(key)] = mapping
    return GraphAction.from_generators(adjacency, group, vgens, egens)


def _int_key(key) -> int:
    try:
        return int(key)
    except (TypeError, ValueError):
        raise InputError(f"group element keys must be integer indices, got {key!r}") from None


def graph_action_to_json(action: GraphAction) -> dict:
    rows = action.adjacency.rows
    out = {"adjacency": action.adjacency.to_json(),
           "group": action.group.to_spec(),
           "vertex_action": {str(g): [_thaw_label(rows[v]) for v in p]
                             for g, p in enumerate(action.vertex_perms) if g}}
    canonical = all(ep == {(i, j, k): (p[i], p[j], k) for (i, j, k) in ep}
                    for ep, p in zip(action.edge_perms, action.vertex_perms))
    if not canonical:
        out["edge_action"] = {
            str(g): [[[_thaw_label(rows[i]), _thaw_label(rows[j]), k],
                      [_thaw_label(rows[i2]), _thaw_label(rows[j2]), k2]]
                     for (i, j, k), (i2, j2, k2) in sorted(ep.items())]
            for g, ep in enumerate(action.edge_perms) if g}
    return out
