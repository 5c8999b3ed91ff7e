"""Periodic-point counts of edge shifts and the Kim-Roush test for Z/pZ.

``census`` works from traces of powers; ``brute_force_census`` enumerates
closed edge walks and is kept as an independent oracle for it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BudgetExceeded, HypothesisError, InputError, InvariantViolation
from .matrices import IntMatrix, structure_flags

DEFAULT_BUDGET = 2_000_000


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def mobius(n: int) -> int:
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class PeriodicCensus:
    """Counts for periods ``1..horizon`` (index 0 is period 1).

    ``per_counts[n-1]`` counts points with ``sigma^n x = x``,
    ``least_period_points[n-1]`` those of least period ``n`` and
    ``least_period_orbits[n-1]`` the orbits they form.
    """

    horizon: int
    per_counts: tuple[int, ...]
    least_period_points: tuple[int, ...]
    least_period_orbits: tuple[int, ...]

    def __post_init__(self):
        for n in range(1, self.horizon + 1):
            o = self.least_period_points[n - 1]
            if o < 0 or o % n or self.least_period_orbits[n - 1] * n != o:
                raise InvariantViolation(f"least-period count o_{n} = {o} is inconsistent")
            if sum(self.least_period_points[d - 1] for d in divisors(n)) != self.per_counts[n - 1]:
                raise InvariantViolation(f"least-period counts do not sum to tr(A^{n})")

    def o(self, n: int) -> int:
        return self.least_period_points[n - 1]

    def orbits(self, n: int) -> int:
        return self.least_period_orbits[n - 1]

    def to_json(self) -> dict:
        return {"horizon": self.horizon,
                "rows": [{"n": n, "trace": self.per_counts[n - 1],
                          "least_period_points": self.least_period_points[n - 1],
                          "least_period_orbits": self.least_period_orbits[n - 1]}
                         for n in range(1, self.horizon + 1)]}

    def to_csv(self) -> str:
        lines = ["n,trace,least_period_points,least_period_orbits"]
        for n in range(1, self.horizon + 1):
            lines.append(f"{n},{self.per_counts[n - 1]},{self.least_period_points[n - 1]},"
                         f"{self.least_period_orbits[n - 1]}")
        return "\n".join(lines) + "\n"


def _census_from_traces(traces: list[int]) -> PeriodicCensus:
    horizon = len(traces)
    points = []
    for n in range(1, horizon + 1):
        points.append(sum(mobius(n // d) * traces[d - 1] for d in divisors(n)))
    orbits = []
    for n, o in enumerate(points, start=1):
        if o < 0 or o % n:
            raise InvariantViolation(f"o_{n} = {o} is negative or not divisible by {n}")
        orbits.append(o // n)
    return PeriodicCensus(horizon, tuple(traces), tuple(points), tuple(orbits))


def _require_edge_shift(a: IntMatrix):
    a._require_square("census")
    if not a.is_nonnegative():
        raise InputError("adjacency matrix has a negative entry")
    if not structure_flags(a).essential:
        raise InputError("matrix is not essential (zero row or column); the edge shift is not defined by it")


def census(a: IntMatrix, horizon: int) -> PeriodicCensus:
    """Counts from ``tr(A^n)`` and Moebius inversion."""
    _require_edge_shift(a)
    if horizon < 1:
        raise InputError("horizon must be at least 1")
    traces = []
    power = a
    for n in range(1, horizon + 1):
        traces.append(power.trace())
        if n < horizon:
            power = power @ a
    return _census_from_traces(traces)


def _least_period(word: tuple) -> int:
    n = len(word)
    for d in divisors(n):
        if word[d:] + word[:d] == word:
            return d
    return n


def brute_force_census(a: IntMatrix, horizon: int, budget: int = DEFAULT_BUDGET) -> PeriodicCensus:
    """Counts from explicit enumeration of closed walks of edges.

    A point with ``sigma^n x = x`` is a closed walk of ``n`` edges (with a
    marked start); its least period is the least rotation fixing the edge
    word. ``budget`` caps the number of walk extensions explored.
    """
    _require_edge_shift(a)
    if horizon < 1:
        raise InputError("horizon must be at least 1")
    m = a.entries
    size = len(m)
    # edges out of each vertex, as (edge id, target)
    out_edges = [[] for _ in range(size)]
    eid = 0
    for i in range(size):
        for j in range(size):
            for _ in range(m[i][j]):
                out_edges[i].append((eid, j))
                eid += 1

    traces = [0] * horizon
    points = [0] * horizon
    steps = 0
    for start in range(size):
        stack = [(start, ())]
        while stack:
            v, word = stack.pop()
            for e, w in out_edges[v]:
                steps += 1
                if steps > budget:
                    raise BudgetExceeded(f"enumeration exceeded the budget of {budget} steps")
                new = word + (e,)
                n = len(new)
                if w == start:
                    traces[n - 1] += 1
                    if _least_period(new) == n:
                        points[n - 1] += 1
                if n < horizon:
                    stack.append((w, new))
    orbits = []
    for n, o in enumerate(points, start=1):
        if o % n:
            raise InvariantViolation(f"enumerated o_{n} = {o} not divisible by {n}")
        orbits.append(o // n)
    return PeriodicCensus(horizon, tuple(traces), tuple(points), tuple(orbits))


# Kim-Roush -------------------------------------------------------------------

ORBITS = "orbits"
POINTS = "points"


@dataclass(frozen=True)
class KimRoushStep:
    n: int
    value: Fraction
    upper: int
    ok: bool

    def to_json(self) -> dict:
        return {"n": self.n, "sum": str(self.value), "is_integer": self.value.denominator == 1,
                "upper": self.upper, "ok": self.ok}


@dataclass(frozen=True)
class KimRoushVerdict:
    """Result of checking the condition for all ``n <= horizon`` divisible by ``p``."""

    passed: bool
    mode: str
    p: int
    horizon: int
    steps: tuple[KimRoushStep, ...]
    census: PeriodicCensus = field(repr=False)

    @property
    def first_failure(self) -> KimRoushStep | None:
        return next((s for s in self.steps if not s.ok), None)

    def to_json(self) -> dict:
        fail = self.first_failure
        return {"passed": self.passed, "scope": f"checked up to n = {self.horizon}", "mode": self.mode,
                "p": self.p, "first_failure": fail.to_json() if fail else None,
                "steps": [s.to_json() for s in self.steps],
                "least_period_points": list(self.census.least_period_points),
                "least_period_orbits": list(self.census.least_period_orbits)}


def kim_roush_condition(a: IntMatrix, p: int, horizon: int, mode: str = ORBITS) -> KimRoushVerdict:
    """Check the arithmetic condition for an inert Z/pZ extension, up to ``horizon``.

    For each ``n`` divisible by ``p`` with ``p^m`` the largest power dividing it,

        S_n = sum_{k=1..m} (p-1)/p^k * x_{n/p^k}.

    In ``"orbits"`` mode ``x`` counts orbits of least period and ``S_n`` must
    be an integer in ``{0, ..., x_n}``. In ``"points"`` mode ``x`` counts points
    of least period and ``S_n`` only has to lie in the real interval
    ``[0, x_n]``. Passing is a necessary condition up to the horizon, not a
    proof that an extension exists.
    """
    if mode not in (ORBITS, POINTS):
        raise InputError(f"mode must be {ORBITS!r} or {POINTS!r}, got {mode!r}")
    if not is_prime(p):
        raise InputError(f"p = {p} is not prime")
    if not structure_flags(a).primitive:
        raise HypothesisError("the matrix must be primitive")
    c = census(a, horizon)
    counts = c.least_period_orbits if mode == ORBITS else c.least_period_points
    steps = []
    for n in range(p, horizon + 1, p):
        total = Fraction(0)
        q, k = n, 0
        while q % p == 0:
            q //= p
            k += 1
            total += Fraction(p - 1, p ** k) * counts[n // p ** k - 1]
        upper = counts[n - 1]
        if mode == ORBITS:
            ok = total.denominator == 1 and 0 <= total <= upper
        else:
            ok = 0 <= total <= upper
        steps.append(KimRoushStep(n, total, upper, ok))
    return KimRoushVerdict(all(s.ok for s in steps), mode, p, horizon, tuple(steps), c)
