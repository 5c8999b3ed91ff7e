"""Finite groups given by explicit multiplication tables.

Elements are the integers ``0 .. order-1`` and ``0`` is always the identity.
Everything here is exhaustive, so groups are capped at a small order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DomainMismatchError, GroupAxiomError, InputError

MAX_ORDER = 64


class FiniteGroup:
    """A finite group stored as its Cayley table.

    ``table[a][b]`` is the index of ``a*b``. The constructor checks the group
    axioms exhaustively (Latin square, two-sided identity at index 0,
    associativity) and raises :class:`GroupAxiomError` naming the first
    failure.
    """

    __slots__ = ("table", "order", "inverses", "_hash", "_spec")

    def __init__(self, table: Sequence[Sequence[int]], *, max_order: int = MAX_ORDER, _spec=None):
        table = tuple(tuple(int(x) for x in row) for row in table)
        n = len(table)
        if n < 1:
            raise GroupAxiomError("group table is empty")
        if n > max_order:
            raise GroupAxiomError(f"group order {n} exceeds the configured cap {max_order}")
        for a, row in enumerate(table):
            if len(row) != n:
                raise GroupAxiomError(f"row {a} has length {len(row)}, expected {n}")
            if any(not 0 <= x < n for x in row):
                raise GroupAxiomError(f"row {a} has an entry outside 0..{n - 1}")
        for g in range(n):
            if table[0][g] != g or table[g][0] != g:
                raise GroupAxiomError(f"index 0 is not a two-sided identity: fails at g={g}")
        for a in range(n):
            if len(set(table[a])) != n:
                raise GroupAxiomError(f"table is not a Latin square: row {a} repeats an entry")
            if len({table[b][a] for b in range(n)}) != n:
                raise GroupAxiomError(f"table is not a Latin square: column {a} repeats an entry")
        for a, b, c in itertools.product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise GroupAxiomError(f"associativity fails for the triple ({a}, {b}, {c})")
        self.table = table
        self.order = n
        self.inverses = tuple(table[a].index(0) for a in range(n))
        self._hash = hash(table)
        self._spec = _spec

    # construction -----------------------------------------------------

    @classmethod
    def cyclic(cls, n: int) -> FiniteGroup:
        if n < 1:
            raise GroupAxiomError(f"cyclic group order must be >= 1, got {n}")
        return cls([[(a + b) % n for b in range(n)] for a in range(n)],
                   _spec={"type": "cyclic", "order": n})

    @classmethod
    def direct_product(cls, first: FiniteGroup, second: FiniteGroup) -> FiniteGroup:
        """``first x second`` with the pair ``(a, b)`` stored at index ``a*|second| + b``."""
        m = second.order
        size = first.order * m
        table = [[0] * size for _ in range(size)]
        for x in range(size):
            a1, b1 = divmod(x, m)
            for y in range(size):
                a2, b2 = divmod(y, m)
                table[x][y] = first.table[a1][a2] * m + second.table[b1][b2]
        return cls(table, _spec={"type": "product", "factors": [first.to_spec(), second.to_spec()]})

    def to_spec(self) -> dict:
        if self._spec is not None:
            return self._spec
        return {"type": "table", "table": [list(row) for row in self.table]}

    # elements ---------------------------------------------------------

    @property
    def identity(self) -> GroupElement:
        return GroupElement(0, self)

    def element(self, g: GroupElement | int) -> GroupElement:
        """Coerce an index or element into an element of this group."""
        if isinstance(g, GroupElement):
            if g.group != self:
                raise DomainMismatchError(f"element {g.index} belongs to a different group")
            return g
        if isinstance(g, bool) or not isinstance(g, int):
            raise InputError(f"group elements are integer indices, got {g!r}")
        if not 0 <= g < self.order:
            raise InputError(f"element index {g} outside 0..{self.order - 1}")
        return GroupElement(g, self)

    def index(self, g: GroupElement | int) -> int:
        return self.element(g).index

    def __iter__(self) -> Iterator[GroupElement]:
        return (GroupElement(i, self) for i in range(self.order))

    def __len__(self) -> int:
        return self.order

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, g: int, k: int) -> int:
        """Index of ``g k g^-1``."""
        return self.table[self.table[g][k]][self.inverses[g]]

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a]
                   for a in range(self.order) for b in range(a))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.table == other.table

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self._spec and self._spec.get("type") == "cyclic":
            return f"FiniteGroup.cyclic({self.order})"
        return f"FiniteGroup(order={self.order})"


@dataclass(frozen=True)
class GroupElement:
    index: int
    group: FiniteGroup

    def __post_init__(self):
        if not 0 <= self.index < self.group.order:
            raise InputError(f"element index {self.index} outside 0..{self.group.order - 1}")

    def __mul__(self, other):
        if isinstance(other, GroupElement):
            if other.group != self.group:
                raise DomainMismatchError("cannot multiply elements of different groups")
            return GroupElement(self.group.table[self.index][other.index], self.group)
        return NotImplemented

    def inverse(self) -> GroupElement:
        return GroupElement(self.group.inverses[self.index], self.group)

    def is_identity(self) -> bool:
        return self.index == 0

    def __repr__(self):
        return f"<{self.index}>"


def make_group(spec) -> FiniteGroup:
    """Build a group from its JSON description.

    Accepted forms::

        {"type": "cyclic", "order": n}
        {"type": "table", "table": [[...], ...]}
        {"type": "product", "factors": [spec, spec, ...]}
    """
    if isinstance(spec, FiniteGroup):
        return spec
    if not isinstance(spec, dict) or "type" not in spec:
        raise InputError(f"group spec must be an object with a 'type' key, got {spec!r}")
    kind = spec["type"]
    if kind == "cyclic":
        n = spec.get("order")
        if isinstance(n, bool) or not isinstance(n, int):
            raise InputError("cyclic group spec needs an integer 'order'")
        return FiniteGroup.cyclic(n)
    if kind == "table":
        table = spec.get("table")
        if not isinstance(table, (list, tuple)) or not all(isinstance(r, (list, tuple)) for r in table):
            raise InputError("table group spec needs 'table' as a list of lists")
        return FiniteGroup(table)
    if kind == "product":
        factors = spec.get("factors")
        if not isinstance(factors, list) or not factors:
            raise InputError("product group spec needs a non-empty 'factors' list")
        group = make_group(factors[0])
        for f in factors[1:]:
            group = FiniteGroup.direct_product(group, make_group(f))
        return group
    raise InputError(f"unknown group type {kind!r}")


def regular_permutation_matrix(group: FiniteGroup, g: GroupElement | int):
    """The ``G x G`` matrix with a 1 at ``(h, k)`` exactly when ``k = h g``.

    ``g -> P_g`` is a homomorphism: ``P_g P_h = P_{gh}``.
    """
    from .matrices import IntMatrix

    g = group.index(g)
    n = group.order
    entries = [[0] * n for _ in range(n)]
    for h in range(n):
        entries[h][group.table[h][g]] = 1
    labels = list(range(n))
    return IntMatrix(entries, labels, labels)


# subgroups -------------------------------------------------------------------

def _as_index_set(group: FiniteGroup, elements: Iterable) -> frozenset[int]:
    return frozenset(group.index(x) for x in elements)


def generate_subgroup(group: FiniteGroup, generators: Iterable) -> tuple[int, ...]:
    """Smallest subgroup containing ``generators``, as a sorted index tuple."""
    gens = _as_index_set(group, generators)
    found = {0}
    frontier = [0]
    while frontier:
        a = frontier.pop()
        for s in gens:
            for b in (group.table[a][s], group.table[a][group.inverses[s]]):
                if b not in found:
                    found.add(b)
                    frontier.append(b)
    return tuple(sorted(found))


def is_subgroup(group: FiniteGroup, subset: Iterable) -> bool:
    h = _as_index_set(group, subset)
    if 0 not in h:
        return False
    return all(group.table[a][group.inverses[b]] in h for a in h for b in h)


def _require_subgroup(group: FiniteGroup, subset: Iterable) -> frozenset[int]:
    h = _as_index_set(group, subset)
    if not is_subgroup(group, h):
        raise InputError(f"{sorted(h)} is not a subgroup")
    return h


def conjugate_subgroup(group: FiniteGroup, g, subset: Iterable) -> tuple[int, ...]:
    """``g H g^-1`` as a sorted index tuple."""
    g = group.index(g)
    return tuple(sorted(group.conj(g, k) for k in _as_index_set(group, subset)))


def is_normal(group: FiniteGroup, subgroup: Iterable) -> bool:
    h = _require_subgroup(group, subgroup)
    return all(group.conj(g, k) in h for g in range(group.order) for k in h)


def are_conjugate_subgroups(group: FiniteGroup, first: Iterable, second: Iterable) -> GroupElement | None:
    """Return the least ``g`` with ``g H1 g^-1 = H2``, or ``None``."""
    h1 = _require_subgroup(group, first)
    h2 = _require_subgroup(group, second)
    if len(h1) != len(h2):
        return None
    for g in range(group.order):
        if all(group.conj(g, k) in h2 for k in h1):
            return GroupElement(g, group)
    return None
