"""Exact labeled matrices over Z and over Z[G].

Rows and columns carry labels (any hashable token: ints, strings, tuples).
Labels travel through every operation, so Kronecker products produce pair
labels and products require matching inner labels. Equality is
label-sensitive; :func:`equal_up_to_relabeling` compares through an explicit
bijection.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable, Mapping, Sequence

from .errors import DomainMismatchError, InputError, InvariantViolation, ShapeMismatchError
from .groupring import GroupRingElement
from .groups import FiniteGroup, GroupElement

Label = Hashable


def _freeze_label(x):
    if isinstance(x, list):
        return tuple(_freeze_label(y) for y in x)
    return x


def _thaw_label(x):
    if isinstance(x, tuple):
        return [_thaw_label(y) for y in x]
    return x


class _LabeledMatrix:
    __slots__ = ("rows", "cols", "entries", "_rpos", "_cpos")

    def __init__(self, entries, rows=None, cols=None):
        entries = tuple(tuple(self._coerce_entry(x) for x in row) for row in entries)
        nrows = len(entries)
        ncols = len(entries[0]) if entries else (len(cols) if cols is not None else 0)
        if any(len(row) != ncols for row in entries):
            raise ShapeMismatchError("ragged entry grid")
        rows = tuple(range(nrows)) if rows is None else tuple(_freeze_label(r) for r in rows)
        if cols is None and nrows == ncols:
            cols = rows
        cols = tuple(range(ncols)) if cols is None else tuple(_freeze_label(c) for c in cols)
        if len(rows) != nrows or len(cols) != ncols:
            raise ShapeMismatchError(
                f"label lists ({len(rows)} rows, {len(cols)} cols) do not match a {nrows}x{ncols} grid")
        if len(set(rows)) != nrows or len(set(cols)) != ncols:
            raise InputError("matrix labels must be unique")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._rpos = None
        self._cpos = None

    # subclass hooks ------------------------------------------------------

    def _coerce_entry(self, x):
        raise NotImplementedError

    def _zero(self):
        raise NotImplementedError

    def _one(self):
        raise NotImplementedError

    def _new(self, entries, rows, cols):
        raise NotImplementedError

    # basic queries -------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def _require_square(self, what="operation"):
        if self.rows != self.cols:
            raise ShapeMismatchError(f"{what} needs a square matrix with equal row and column labels")

    def row_position(self, label) -> int:
        if self._rpos is None:
            self._rpos = {r: i for i, r in enumerate(self.rows)}
        try:
            return self._rpos[_freeze_label(label)]
        except KeyError:
            raise InputError(f"unknown row label {label!r}") from None

    def col_position(self, label) -> int:
        if self._cpos is None:
            self._cpos = {c: i for i, c in enumerate(self.cols)}
        try:
            return self._cpos[_freeze_label(label)]
        except KeyError:
            raise InputError(f"unknown column label {label!r}") from None

    def __getitem__(self, key):
        r, c = key
        return self.entries[self.row_position(r)][self.col_position(c)]

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    # arithmetic ----------------------------------------------------------

    def _same_shape(self, other):
        if type(other) is not type(self):
            raise DomainMismatchError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeMismatchError("matrices have different labels")

    def __add__(self, other):
        self._same_shape(other)
        return self._new([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
                         self.rows, self.cols)

    def __sub__(self, other):
        self._same_shape(other)
        return self._new([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
                         self.rows, self.cols)

    def __neg__(self):
        return self._new([[-a for a in row] for row in self.entries], self.rows, self.cols)

    def _check_inner(self, other):
        if self.cols != other.rows:
            raise ShapeMismatchError(
                f"inner labels differ: {len(self.cols)} columns {list(self.cols)[:6]} vs "
                f"{len(other.rows)} rows {list(other.rows)[:6]}")

    def power(self, k: int):
        """``self ** k`` by repeated squaring; ``k = 0`` gives the identity."""
        self._require_square("power")
        if k < 0:
            raise InputError("negative matrix powers are not supported")
        result = self.identity_like()
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def __pow__(self, k):
        return self.power(k)

    def identity_like(self):
        zero, one = self._zero(), self._one()
        n = len(self.rows)
        return self._new([[one if i == j else zero for j in range(n)] for i in range(n)], self.rows, self.rows)

    def transpose(self):
        return self._new([list(col) for col in zip(*self.entries)] if self.entries else [],
                         self.cols, self.rows)

    def trace(self):
        self._require_square("trace")
        total = self._zero()
        for i in range(len(self.rows)):
            total = total + self.entries[i][i]
        return total

    def relabeled(self, rows=None, cols=None):
        """Same grid, new labels (positional)."""
        return self._new(self.entries, self.rows if rows is None else rows, self.cols if cols is None else cols)

    def map_labels(self, fn: Callable[[Label], Label]):
        """Rename labels of a square matrix through ``fn`` (simultaneously on rows and columns)."""
        return self._new(self.entries, [fn(r) for r in self.rows], [fn(c) for c in self.cols])

    def reordered(self, rows: Sequence, cols: Sequence | None = None):
        """Permute rows and columns into the given label orders."""
        cols = rows if cols is None else cols
        rp = [self.row_position(r) for r in rows]
        cp = [self.col_position(c) for c in cols]
        if sorted(rp) != list(range(len(self.rows))) or sorted(cp) != list(range(len(self.cols))):
            raise InputError("reordering must list every label exactly once")
        return self._new([[self.entries[i][j] for j in cp] for i in rp], rows, cols)

    def support(self) -> list[list[bool]]:
        return [[bool(x) for x in row] for row in self.entries]

    def first_difference(self, other):
        """First ``(row_label, col_label, self_entry, other_entry)`` where the grids differ, or None."""
        for i, (r1, r2) in enumerate(zip(self.entries, other.entries)):
            for j, (a, b) in enumerate(zip(r1, r2)):
                if a != b:
                    return self.rows[i], self.cols[j], a, b
        return None


class IntMatrix(_LabeledMatrix):
    """Matrix with arbitrary-precision integer entries."""

    __slots__ = ()

    def _coerce_entry(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise InputError(f"integer matrix entries must be integers, got {x!r}")
        return x

    def _zero(self):
        return 0

    def _one(self):
        return 1

    def _new(self, entries, rows, cols):
        return IntMatrix(entries, rows, cols)

    @classmethod
    def identity(cls, labels) -> IntMatrix:
        labels = list(labels) if not isinstance(labels, int) else list(range(labels))
        n = len(labels)
        return cls([[int(i == j) for j in range(n)] for i in range(n)], labels, labels)

    @classmethod
    def ones(cls, rows, cols) -> IntMatrix:
        return cls([[1] * len(cols) for _ in rows], rows, cols)

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for row in self.entries for x in row)

    def __matmul__(self, other):
        if isinstance(other, GroupRingMatrix):
            return GroupRingMatrix.embed(self, other.group) @ other
        if not isinstance(other, IntMatrix):
            return NotImplemented
        self._check_inner(other)
        cols = list(zip(*other.entries)) if other.entries else [()] * len(other.cols)
        entries = [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.entries]
        return IntMatrix(entries, self.rows, other.cols)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return IntMatrix([[a * other for a in row] for row in self.entries], self.rows, self.cols)
        if isinstance(other, (GroupRingElement, GroupElement)):
            return GroupRingMatrix.embed(self, _group_of(other)) * other
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self * other
        if isinstance(other, (GroupRingElement, GroupElement)):
            return other * GroupRingMatrix.embed(self, _group_of(other))
        return NotImplemented

    def exact_div(self, n: int) -> IntMatrix:
        """Entrywise division that must be exact."""
        out = []
        for row in self.entries:
            new = []
            for x in row:
                q, r = divmod(x, n)
                if r:
                    raise InvariantViolation(f"entry {x} is not divisible by {n}")
                new.append(q)
            out.append(new)
        return IntMatrix(out, self.rows, self.cols)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.entries]}, rows={list(self.rows)}, cols={list(self.cols)})"

    def to_json(self) -> dict:
        return {"rows": [_thaw_label(r) for r in self.rows],
                "cols": [_thaw_label(c) for c in self.cols],
                "entries": [list(row) for row in self.entries]}

    @classmethod
    def from_json(cls, data) -> IntMatrix:
        if isinstance(data, list):
            data = {"entries": data}
        if not isinstance(data, Mapping) or "entries" not in data:
            raise InputError("matrix JSON needs an 'entries' grid")
        entries = data["entries"]
        if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
            raise InputError("'entries' must be a list of lists")
        rows = data.get("rows")
        cols = data.get("cols", rows if len(entries) == len(entries[0] if entries else []) else None)
        return cls(entries, rows, cols)


def _group_of(x) -> FiniteGroup:
    return x.group


class GroupRingMatrix(_LabeledMatrix):
    """Matrix with entries in Z[G] for a fixed finite group."""

    __slots__ = ("group",)

    def __init__(self, group: FiniteGroup, entries, rows=None, cols=None):
        self.group = group
        super().__init__(entries, rows, cols)

    def _coerce_entry(self, x):
        if isinstance(x, GroupRingElement):
            if x.group != self.group:
                raise DomainMismatchError("matrix entry lives over a different group")
            return x
        if isinstance(x, GroupElement):
            return GroupRingElement.basis(self.group, self.group.element(x))
        if isinstance(x, int) and not isinstance(x, bool):
            return GroupRingElement.scalar(self.group, x)
        if isinstance(x, Mapping):
            return GroupRingElement.from_dict(self.group, x)
        raise InputError(f"cannot read {x!r} as a group ring element")

    def _zero(self):
        return GroupRingElement.zero(self.group)

    def _one(self):
        return GroupRingElement.scalar(self.group, 1)

    def _new(self, entries, rows, cols):
        return GroupRingMatrix(self.group, entries, rows, cols)

    def _same_shape(self, other):
        super()._same_shape(other)
        if other.group != self.group:
            raise DomainMismatchError("matrices over different groups")

    def __eq__(self, other):
        if not isinstance(other, GroupRingMatrix):
            return NotImplemented
        return self.group == other.group and super().__eq__(other)

    __hash__ = _LabeledMatrix.__hash__

    @classmethod
    def embed(cls, matrix: IntMatrix, group: FiniteGroup, g: GroupElement | int = 0) -> GroupRingMatrix:
        """The integer matrix with every entry placed on the group element ``g``."""
        g = group.index(g)
        return cls(group, [[GroupRingElement.basis(group, g, x) for x in row] for row in matrix.entries],
                   matrix.rows, matrix.cols)

    @classmethod
    def from_projections(cls, group: FiniteGroup, parts: Mapping, rows=None, cols=None) -> GroupRingMatrix:
        """Assemble ``sum_g parts[g] * g`` from integer matrices."""
        first = next(iter(parts.values()))
        nr, nc = first.shape
        coeffs = [[[0] * group.order for _ in range(nc)] for _ in range(nr)]
        for g, mat in parts.items():
            gi = group.index(g)
            for i, row in enumerate(mat.entries):
                for j, x in enumerate(row):
                    coeffs[i][j][gi] += x
        return cls(group, [[GroupRingElement(group, c) for c in row] for row in coeffs],
                   first.rows if rows is None else rows, first.cols if cols is None else cols)

    @classmethod
    def identity(cls, group: FiniteGroup, labels) -> GroupRingMatrix:
        return cls.embed(IntMatrix.identity(labels), group)

    def project(self, h: GroupElement | int) -> IntMatrix:
        """Entrywise coefficient of ``h``."""
        h = self.group.index(h)
        return IntMatrix([[x.coeffs[h] for x in row] for row in self.entries], self.rows, self.cols)

    def is_nonnegative(self) -> bool:
        return all(x.is_nonnegative() for row in self.entries for x in row)

    def entries_within(self, subset) -> bool:
        allowed = set(subset)
        return all(set(x.support()) <= allowed for row in self.entries for x in row)

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            other = GroupRingMatrix.embed(other, self.group)
        if not isinstance(other, GroupRingMatrix):
            return NotImplemented
        if other.group != self.group:
            raise DomainMismatchError("matrices over different groups")
        self._check_inner(other)
        group = self.group
        table = group.table
        order = group.order
        # sparse (index, coeff) lists per entry
        right = [[[(b, d) for b, d in enumerate(x.coeffs) if d] for x in row] for row in other.entries]
        ncols = len(other.cols)
        out = []
        for row in self.entries:
            left = [[(a, c) for a, c in enumerate(x.coeffs) if c] for x in row]
            new_row = []
            for j in range(ncols):
                acc = [0] * order
                for l, xs in enumerate(left):
                    if not xs:
                        continue
                    ys = right[l][j]
                    if not ys:
                        continue
                    for a, c in xs:
                        trow = table[a]
                        for b, d in ys:
                            acc[trow[b]] += c * d
                new_row.append(GroupRingElement(group, acc))
            out.append(new_row)
        return GroupRingMatrix(group, out, self.rows, other.cols)

    def __rmatmul__(self, other):
        if isinstance(other, IntMatrix):
            return GroupRingMatrix.embed(other, self.group) @ self
        return NotImplemented

    def __mul__(self, other):
        """Right scalar multiplication: every entry times ``other``."""
        if isinstance(other, int) and not isinstance(other, bool):
            return self._new([[x * other for x in row] for row in self.entries], self.rows, self.cols)
        if isinstance(other, (GroupRingElement, GroupElement)):
            return self._new([[x * other for x in row] for row in self.entries], self.rows, self.cols)
        return NotImplemented

    def __rmul__(self, other):
        """Left scalar multiplication: ``other`` times every entry."""
        if isinstance(other, int) and not isinstance(other, bool):
            return self * other
        if isinstance(other, (GroupRingElement, GroupElement)):
            return self._new([[other * x for x in row] for row in self.entries], self.rows, self.cols)
        return NotImplemented

    def __repr__(self):
        return f"GroupRingMatrix({self.group!r}, {[list(r) for r in self.entries]})"

    def to_json(self) -> dict:
        return {"rows": [_thaw_label(r) for r in self.rows],
                "cols": [_thaw_label(c) for c in self.cols],
                "entries": [[x.to_dict() for x in row] for row in self.entries]}

    @classmethod
    def from_json(cls, group: FiniteGroup, data) -> GroupRingMatrix:
        if isinstance(data, list):
            data = {"entries": data}
        if not isinstance(data, Mapping) or "entries" not in data:
            raise InputError("matrix JSON needs an 'entries' grid")
        entries = data["entries"]
        if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
            raise InputError("'entries' must be a list of lists")
        rows = data.get("rows")
        cols = data.get("cols", rows if len(entries) == len(entries[0] if entries else []) else None)
        return cls(group, entries, rows, cols)


def mat_mul(a, b):
    return a @ b


def mat_pow(a, k: int):
    return a.power(k)


def kronecker(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Kronecker product with pair labels in lexicographic order."""
    entries = [[x * y for x in ra for y in rb] for ra in a.entries for rb in b.entries]
    rows = [(r, s) for r in a.rows for s in b.rows]
    cols = [(c, d) for c in a.cols for d in b.cols]
    return IntMatrix(entries, rows, cols)


def trace(a):
    return a.trace()


def equal_up_to_relabeling(a, b, bijection: Mapping) -> bool:
    """True when ``a[r, c] == b[bijection[r], bijection[c]]`` for all labels of the square ``a``."""
    a._require_square("relabeling comparison")
    b._require_square("relabeling comparison")
    if type(a) is not type(b) or len(a.rows) != len(b.rows):
        return False
    try:
        images = [_freeze_label(bijection[r]) for r in a.rows]
    except KeyError:
        return False
    if len(set(images)) != len(images) or set(images) != set(b.rows):
        return False
    return a.relabeled(images, images) == b.reordered(images)


def determinant(a: IntMatrix) -> int:
    """Fraction-free (Bareiss) elimination; every division is exact."""
    a._require_square("determinant")
    m = [list(row) for row in a.entries]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                q, r = divmod(num, prev)
                if r:
                    raise InvariantViolation("Bareiss division was not exact")
                m[i][j] = q
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


# reciprocal characteristic polynomial ----------------------------------------

@dataclass(frozen=True)
class ReciprocalCharPoly:
    """Integer polynomial ``det(I - tA) = sum c_i t^i`` with ``c_0 = 1``.

    Trailing zero coefficients are stripped so that equality is equality of
    polynomials. For an edge shift this is ``1/zeta``.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if not coeffs or coeffs[0] != 1:
            raise InvariantViolation(f"reciprocal characteristic polynomial must start with 1, got {coeffs}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t):
        return sum(c * t ** i for i, c in enumerate(self.coeffs))

    def charpoly(self, size: int) -> tuple[int, ...]:
        """Coefficients (constant first) of ``det(tI - A)`` for an ``size x size`` matrix."""
        padded = list(self.coeffs) + [0] * (size + 1 - len(self.coeffs))
        return tuple(reversed(padded))

    def trace_series(self, order: int) -> list[int]:
        """``[tr(A^1), ..., tr(A^order)]`` recovered through Newton's identities."""
        c = list(self.coeffs) + [0] * max(0, order + 1 - len(self.coeffs))
        p = [0] * (order + 1)
        for k in range(1, order + 1):
            p[k] = -k * c[k] - sum(c[i] * p[k - i] for i in range(1, k))
        return p[1:]

    def inverse_series(self, order: int) -> list[int]:
        """Power series of ``1/det(I - tA)`` (the zeta function) through ``t^order``."""
        c = self.coeffs
        out = [1] + [0] * order
        for k in range(1, order + 1):
            out[k] = -sum(c[i] * out[k - i] for i in range(1, min(k, len(c) - 1) + 1))
        return out

    def divides(self, other: ReciprocalCharPoly) -> bool:
        """Whether ``self`` divides ``other`` in Z[t]."""
        quotient = poly_divmod(other.coeffs, self.coeffs)
        if quotient is None:
            return False
        q, r = quotient
        return not any(r) and all(x.denominator == 1 for x in q)


def poly_divmod(num: Sequence[int], den: Sequence[int]):
    """Division in Q[t] (constant term first). Returns ``(quotient, remainder)``."""
    den = list(den)
    while den and den[-1] == 0:
        den.pop()
    if not den:
        return None
    rem = [Fraction(x) for x in num]
    dq = len(den) - 1
    if len(rem) - 1 < dq:
        return [Fraction(0)], rem
    quot = [Fraction(0)] * (len(rem) - dq)
    lead = Fraction(den[-1])
    for k in range(len(rem) - 1 - dq, -1, -1):
        coef = rem[k + dq] / lead
        quot[k] = coef
        if coef:
            for i, d in enumerate(den):
                rem[k + i] -= coef * d
    return quot, rem[:dq] if dq else []


def reciprocal_charpoly(a: IntMatrix) -> ReciprocalCharPoly:
    """``det(I - tA)`` by the Faddeev-LeVerrier recursion in exact integers.

    The recursion divides by ``k`` at step ``k``; for integer matrices the
    division is exact and is asserted as such.
    """
    a._require_square("characteristic polynomial")
    n = len(a.rows)
    coeffs = [1]
    m = IntMatrix([[0] * n for _ in range(n)], a.rows, a.cols)
    ident = a.identity_like()
    for k in range(1, n + 1):
        m = a @ m + ident * coeffs[k - 1]
        tr = (a @ m).trace()
        q, r = divmod(-tr, k)
        if r:
            raise InvariantViolation("Faddeev-LeVerrier division was not exact")
        coeffs.append(q)
    return ReciprocalCharPoly(tuple(coeffs))


# structure -------------------------------------------------------------------

@dataclass(frozen=True)
class StructureFlags:
    essential: bool
    irreducible: bool
    primitive: bool
    period: int | None = None


def _support_graph(a) -> list[list[int]]:
    return [[j for j, x in enumerate(row) if x] for row in a.entries]


def _reach(adj: list[list[int]], start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def _bool_mul(x, y):
    n = len(x)
    return [[any(x[i][k] and y[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def _bool_pow_positive(support, k) -> bool:
    """Whether every entry of ``support ** k`` (boolean) is true."""
    result = None
    base = support
    while k:
        if k & 1:
            result = base if result is None else _bool_mul(result, base)
        k >>= 1
        if k:
            base = _bool_mul(base, base)
    return all(all(row) for row in result)


def structure_flags(a) -> StructureFlags:
    """Essential / irreducible / primitive flags from the support (nonzero entries) of ``a``.

    Irreducibility is strong connectivity of the support digraph with at least
    one cycle; primitivity is irreducibility plus period 1, where the period is
    the gcd of cycle lengths computed from BFS levels. Primitivity is
    cross-checked against Wielandt's exponent bound.
    """
    a._require_square("structure flags")
    n = len(a.rows)
    adj = _support_graph(a)
    if n == 0:
        return StructureFlags(True, False, False, None)
    essential = all(adj[i] for i in range(n)) and all(
        any(a.entries[i][j] for i in range(n)) for j in range(n))
    radj = [[] for _ in range(n)]
    for i, outs in enumerate(adj):
        for j in outs:
            radj[j].append(i)
    irreducible = (len(_reach(adj, 0)) == n and len(_reach(radj, 0)) == n
                   and any(adj[i] for i in range(n)))
    if not irreducible:
        return StructureFlags(essential, False, False, None)
    level = {0: 0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in level:
                level[w] = level[v] + 1
                queue.append(w)
    period = 0
    for v in range(n):
        for w in adj[v]:
            period = math.gcd(period, level[v] + 1 - level[w])
    primitive = period == 1
    if _bool_pow_positive(a.support(), (n - 1) ** 2 + 1) != primitive:
        raise InvariantViolation("primitivity from cycle gcd disagrees with the Wielandt bound")
    return StructureFlags(essential, True, primitive, period)


def find_permutation_similarity(a: IntMatrix, b: IntMatrix) -> dict | None:
    """A bijection ``f`` of labels with ``a[r, c] == b[f(r), f(c)]``, by exhaustive search."""
    import itertools

    a._require_square("similarity")
    b._require_square("similarity")
    if len(a.rows) != len(b.rows):
        return None
    for perm in itertools.permutations(b.rows):
        bij = dict(zip(a.rows, perm))
        if equal_up_to_relabeling(a, b, bij):
            return bij
    return None
