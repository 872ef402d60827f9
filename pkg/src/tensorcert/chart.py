"""A polynomial coordinate chart for the generalized tangent bundle.

Scalars are exact-rational polynomials in the chart coordinates u_1..u_n;
sections are vector-field + one-form pairs; endomorphisms are 2n x 2n scalar
matrices acting on stacked (vector, form) components.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .poly import Polynomial, PolyRing
from .xyz import Signature

_chart_ring_cache: dict[int, PolyRing] = {}


def chart_ring(dim: int) -> PolyRing:
    ring = _chart_ring_cache.get(dim)
    if ring is None:
        ring = PolyRing(tuple(f"u{i}" for i in range(1, dim + 1)))
        _chart_ring_cache[dim] = ring
    return ring


@dataclass(frozen=True)
class Chart:
    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("chart dimension must be >= 1")

    @property
    def ring(self) -> PolyRing:
        return chart_ring(self.dim)

    def coordinate(self, i: int) -> Polynomial:
        return self.ring.var(f"u{i}")

    def scalar(self, value) -> Polynomial:
        return self.ring.const(value)

    def zero_section(self) -> "GeneralizedSection":
        zero = self.ring.zero
        return GeneralizedSection(self, (zero,) * self.dim, (zero,) * self.dim)

    def basis_vector(self, i: int) -> "GeneralizedSection":
        """The coordinate vector field in slot i (1-based)."""
        parts = [self.ring.zero] * self.dim
        parts[i - 1] = self.ring.one
        return GeneralizedSection(self, tuple(parts), (self.ring.zero,) * self.dim)

    def basis_form(self, i: int) -> "GeneralizedSection":
        """The coordinate one-form du_i."""
        parts = [self.ring.zero] * self.dim
        parts[i - 1] = self.ring.one
        return GeneralizedSection(self, (self.ring.zero,) * self.dim, tuple(parts))

    def basis_sections(self) -> list["GeneralizedSection"]:
        return [self.basis_vector(i) for i in range(1, self.dim + 1)] + [
            self.basis_form(i) for i in range(1, self.dim + 1)
        ]


class ChartMismatchError(ValueError):
    """Operands live over different charts."""


def _check_chart(a, b) -> None:
    if a.chart != b.chart:
        raise ChartMismatchError(f"{a.chart} vs {b.chart}")


@dataclass(frozen=True)
class GeneralizedSection:
    """A section X + alpha of TM + T*M with polynomial components."""

    chart: Chart
    vector: tuple[Polynomial, ...]
    form: tuple[Polynomial, ...]

    def __post_init__(self):
        n = self.chart.dim
        if len(self.vector) != n or len(self.form) != n:
            raise ValueError("component count does not match the chart dimension")

    def components(self) -> tuple[Polynomial, ...]:
        return self.vector + self.form

    def __add__(self, other: "GeneralizedSection") -> "GeneralizedSection":
        _check_chart(self, other)
        return GeneralizedSection(
            self.chart,
            tuple(a + b for a, b in zip(self.vector, other.vector)),
            tuple(a + b for a, b in zip(self.form, other.form)),
        )

    def __sub__(self, other: "GeneralizedSection") -> "GeneralizedSection":
        return self + (-other)

    def __neg__(self) -> "GeneralizedSection":
        return self.scale(self.chart.ring.const(-1))

    def scale(self, f) -> "GeneralizedSection":
        """Module action of a scalar (polynomial or rational)."""
        if not isinstance(f, Polynomial):
            f = self.chart.ring.const(f)
        return GeneralizedSection(
            self.chart,
            tuple(f * a for a in self.vector),
            tuple(f * a for a in self.form),
        )

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.components())


class Endomorphism:
    """A 2n x 2n scalar matrix acting on (vector, form) stacked columns."""

    __slots__ = ("chart", "rows")

    def __init__(self, chart: Chart, rows: Sequence[Sequence[Polynomial]]):
        size = 2 * chart.dim
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != size or any(len(r) != size for r in rows):
            raise ValueError(f"matrix must be {size}x{size}")
        self.chart = chart
        self.rows = rows

    @classmethod
    def from_blocks(cls, chart: Chart, a, b, c, d) -> "Endomorphism":
        """Blocks act as [[A, B], [C, D]] on (vector; form)."""
        n = chart.dim
        rows = []
        for i in range(n):
            rows.append(tuple(a[i]) + tuple(b[i]))
        for i in range(n):
            rows.append(tuple(c[i]) + tuple(d[i]))
        return cls(chart, rows)

    @classmethod
    def zero(cls, chart: Chart) -> "Endomorphism":
        z = chart.ring.zero
        size = 2 * chart.dim
        return cls(chart, [[z] * size for _ in range(size)])

    @classmethod
    def identity(cls, chart: Chart) -> "Endomorphism":
        z, o = chart.ring.zero, chart.ring.one
        size = 2 * chart.dim
        return cls(chart, [[o if i == j else z for j in range(size)] for i in range(size)])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Endomorphism)
            and self.chart == other.chart
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.chart, self.rows))

    def apply(self, section: GeneralizedSection) -> GeneralizedSection:
        _check_chart(self, section)
        comps = section.components()
        out = []
        for row in self.rows:
            acc = self.chart.ring.zero
            for entry, comp in zip(row, comps):
                if not entry.is_zero() and not comp.is_zero():
                    acc = acc + entry * comp
            out.append(acc)
        n = self.chart.dim
        return GeneralizedSection(self.chart, tuple(out[:n]), tuple(out[n:]))

    def compose(self, other: "Endomorphism") -> "Endomorphism":
        """Matrix product; (self.compose(other))(s) == self(other(s))."""
        _check_chart(self, other)
        size = 2 * self.chart.dim
        zero = self.chart.ring.zero
        cols = list(zip(*other.rows))
        rows = [
            tuple(sum((a * b for a, b in zip(row, col) if not a.is_zero()), zero) for col in cols)
            for row in self.rows
        ]
        return Endomorphism(self.chart, rows)

    def __add__(self, other: "Endomorphism") -> "Endomorphism":
        _check_chart(self, other)
        return Endomorphism(
            self.chart,
            [tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)],
        )

    def scale(self, value) -> "Endomorphism":
        if not isinstance(value, Polynomial):
            value = self.chart.ring.const(value)
        return Endomorphism(self.chart, [tuple(value * e for e in r) for r in self.rows])

    def __neg__(self) -> "Endomorphism":
        return self.scale(-1)

    def adjoint(self) -> "Endomorphism":
        """The adjoint for the tautological pairing: block-swap transpose."""
        n = self.chart.dim
        size = 2 * n

        def swap(i: int) -> int:
            return (i + n) % size

        rows = [
            tuple(self.rows[swap(c)][swap(r)] for c in range(size)) for r in range(size)
        ]
        return Endomorphism(self.chart, rows)

    def power(self, k: int) -> "Endomorphism":
        if k < 0:
            raise ValueError("negative endomorphism power")
        result = Endomorphism.identity(self.chart)
        for _ in range(k):
            result = result.compose(self)
        return result


class FamilyValidationError(ValueError):
    """A symmetry-type or commutation constraint failed at construction."""


class CommutingFamily:
    """An N-tuple of pairwise-commuting endomorphisms of checked signature."""

    __slots__ = ("members", "signature", "chart", "_power_cache")

    def __init__(self, members: Sequence[Endomorphism], signature: Signature):
        members = tuple(members)
        if len(members) != signature.n:
            raise FamilyValidationError("member count differs from signature length")
        charts = {m.chart for m in members}
        if len(charts) != 1:
            raise FamilyValidationError("members live over different charts")
        for pos, phi in enumerate(members, start=1):
            expected = phi.scale(signature[pos])
            if phi.adjoint() != expected:
                kind = "symmetric" if signature[pos] == 1 else "skew-symmetric"
                raise FamilyValidationError(f"member {pos} is not {kind} for the pairing")
        for p in range(len(members)):
            for q in range(p + 1, len(members)):
                if members[p].compose(members[q]) != members[q].compose(members[p]):
                    raise FamilyValidationError(
                        f"members {p + 1} and {q + 1} do not commute"
                    )
        self.members = members
        self.signature = signature
        self.chart = members[0].chart
        self._power_cache: dict[tuple[int, ...], Endomorphism] = {}

    @property
    def n(self) -> int:
        return len(self.members)

    def member(self, i: int) -> Endomorphism:
        return self.members[i - 1]

    def power_endo(self, exponents: Iterable[int]) -> Endomorphism:
        """phi^I = prod phi_i^(I_i), cached per family."""
        key = tuple(exponents)
        cached = self._power_cache.get(key)
        if cached is None:
            cached = Endomorphism.identity(self.chart)
            for i, e in enumerate(key):
                if e:
                    cached = cached.compose(self.members[i].power(e))
            self._power_cache[key] = cached
        return cached

    def subpair(self, i: int, j: int) -> "CommutingFamily":
        """The ordered pair (phi_i, phi_j) as a size-2 family."""
        return CommutingFamily(
            (self.member(i), self.member(j)),
            Signature((self.signature[i], self.signature[j])),
        )


def validate_family(members: Sequence[Endomorphism], signature: Signature) -> CommutingFamily:
    """Construct a family, raising on the first violated constraint."""
    return CommutingFamily(members, signature)
