"""Exact arithmetic in the integral group ring Z[G].

An element is a coefficient vector indexed by group element index. The
non-negative cone Z+[G] is not a separate type; use
:meth:`GroupRingElement.is_nonnegative`.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .errors import DomainMismatchError, InputError
from .groups import FiniteGroup, GroupElement


class GroupRingElement:
    __slots__ = ("group", "coeffs")

    def __init__(self, group: FiniteGroup, coeffs: Sequence[int]):
        coeffs = tuple(coeffs)
        if len(coeffs) != group.order:
            raise InputError(f"expected {group.order} coefficients, got {len(coeffs)}")
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise InputError(f"group ring coefficients must be integers, got {c!r}")
        self.group = group
        self.coeffs = coeffs

    # constructors ------------------------------------------------------

    @classmethod
    def zero(cls, group: FiniteGroup) -> GroupRingElement:
        return cls(group, (0,) * group.order)

    @classmethod
    def scalar(cls, group: FiniteGroup, n: int) -> GroupRingElement:
        """``n * 1_G``."""
        return cls(group, (n,) + (0,) * (group.order - 1))

    @classmethod
    def basis(cls, group: FiniteGroup, g: GroupElement | int, n: int = 1) -> GroupRingElement:
        coeffs = [0] * group.order
        coeffs[group.index(g)] = n
        return cls(group, coeffs)

    @classmethod
    def from_dict(cls, group: FiniteGroup, data: Mapping) -> GroupRingElement:
        coeffs = [0] * group.order
        for key, value in data.items():
            try:
                idx = int(key)
            except (TypeError, ValueError):
                raise InputError(f"group ring keys must be element indices, got {key!r}") from None
            coeffs[group.index(idx)] += value
        return cls(group, coeffs)

    def to_dict(self) -> dict[str, int]:
        return {str(i): c for i, c in enumerate(self.coeffs) if c}

    # queries -----------------------------------------------------------

    def __getitem__(self, g: GroupElement | int) -> int:
        return self.coeffs[self.group.index(g)]

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def augmentation(self) -> int:
        return sum(self.coeffs)

    def is_u_multiple(self) -> bool:
        """True when all coefficients agree, i.e. the element lies in u_G * Z."""
        return all(c == self.coeffs[0] for c in self.coeffs)

    # arithmetic --------------------------------------------------------

    def _check(self, other: GroupRingElement):
        if other.group != self.group:
            raise DomainMismatchError("group ring elements over different groups")

    def _coerce(self, other):
        if isinstance(other, GroupRingElement):
            self._check(other)
            return other
        if isinstance(other, GroupElement):
            return GroupRingElement.basis(self.group, self.group.element(other))
        if isinstance(other, int) and not isinstance(other, bool):
            return GroupRingElement.scalar(self.group, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GroupRingElement(self.group, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement(self.group, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GroupRingElement(self.group, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return GroupRingElement(self.group, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ring_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return GroupRingElement(self.group, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ring_mul(other, self)

    def __eq__(self, other):
        if isinstance(other, GroupRingElement):
            return self.group == other.group and self.coeffs == other.coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self.coeffs == GroupRingElement.scalar(self.group, other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*<{i}>" if c != 1 else f"<{i}>")
        return " + ".join(terms)


def ring_mul(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    """Convolution: the coefficient of ``k`` is the sum of ``x_g y_h`` over ``gh = k``."""
    x._check(y)
    table = x.group.table
    out = [0] * x.group.order
    ys = [(b, c) for b, c in enumerate(y.coeffs) if c]
    for a, c in enumerate(x.coeffs):
        if c:
            row = table[a]
            for b, d in ys:
                out[row[b]] += c * d
    return GroupRingElement(x.group, out)


def project_coefficient(x: GroupRingElement, h: GroupElement | int) -> int:
    return x.coeffs[x.group.index(h)]


def element_augmentation(x: GroupRingElement) -> int:
    return x.augmentation()


def u_element(group: FiniteGroup) -> GroupRingElement:
    """The sum of all group elements."""
    return GroupRingElement(group, (1,) * group.order)


def conjugate_element(g: GroupElement | int, x: GroupRingElement) -> GroupRingElement:
    """``g x g^-1``: the coefficient of ``k`` is that of ``g^-1 k g`` in ``x``."""
    group = x.group
    g = group.index(g)
    out = [0] * group.order
    for k, c in enumerate(x.coeffs):
        if c:
            out[group.conj(g, k)] += c
    return GroupRingElement(group, out)
