"""Vector parking functions for a weakly increasing capacity vector u.

A sequence a of n spot preferences is a u-parking function when its i-th
order statistic is strictly below u[i] for every i; the classical family is
u = (1, 2, ..., n).  This module covers recognition, the capacity-based
parking process, primeness, the prime (shuffle-sum) decomposition, and the
closed-form counts for arithmetic-progression boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import exact
from .core import Point, Seq, as_seq, order_statistics, path_of_increasing, rank_of_value, stable_sort_indices
from .errors import InconsistentDecomposition, LengthMismatch, NotParkingFunction


def validate_capacity(u: Sequence[int]) -> Seq:
    """Check that u is a weakly increasing vector of positive ints, n >= 1."""
    out = tuple(int(e) for e in u)
    if not out:
        raise ValueError("capacity vector must be non-empty")
    if out[0] < 1:
        raise ValueError(f"capacity entries must be >= 1, got {out}")
    if any(out[i] > out[i + 1] for i in range(len(out) - 1)):
        raise ValueError(f"capacity vector must be weakly increasing, got {out}")
    return out


def difference_vector(u: Sequence[int]) -> Seq:
    """First-difference form (u0, u1-u0, ..., u_{n-1}-u_{n-2}) of a boundary."""
    uu = validate_capacity(u)
    return (uu[0],) + tuple(uu[i] - uu[i - 1] for i in range(1, len(uu)))


def _checked(a: Sequence[int], u: Sequence[int]) -> tuple[Seq, Seq]:
    aa, uu = as_seq(a), validate_capacity(u)
    if len(aa) != len(uu):
        raise LengthMismatch(f"|a| = {len(aa)} but |u| = {len(uu)}")
    return aa, uu


def is_vector_pf(a: Sequence[int], u: Sequence[int]) -> bool:
    """True iff every order statistic of a is strictly below the boundary."""
    aa, uu = _checked(a, u)
    return all(x < bound for x, bound in zip(order_statistics(aa), uu))


def is_prime_vector_pf(a: Sequence[int], u: Sequence[int]) -> bool:
    """True iff a is a u-parking function meeting the strict count inequalities.

    Strictness is required for i = 0..n-2 only, so every length-1 parking
    function is prime.
    """
    aa, uu = _checked(a, u)
    if not is_vector_pf(aa, uu):
        return False
    sa = order_statistics(aa)
    return all(rank_of_value(sa, uu[i]) > i + 1 for i in range(len(uu) - 1))


def prime_reduction(u: Sequence[int]) -> Seq:
    """Boundary u' = (u0, u0, u1, ..., u_{n-2}): plain u'-membership equals u-primeness."""
    uu = validate_capacity(u)
    return (uu[0],) + uu[:-1]


@dataclass(frozen=True)
class ParkingOutcome:
    """Result of the sequential capacity parking process."""

    assignment: Optional[Seq] = None
    failed_car: Optional[int] = None

    @property
    def success(self) -> bool:
        return self.assignment is not None


def simulate_capacity_parking(a: Sequence[int], u: Sequence[int]) -> ParkingOutcome:
    """Run the parking process where spot j holds as many cars as j+1 occurs in u.

    Car i drives to spot a[i] and takes the first spot at or beyond it with
    remaining capacity; the outcome records the assignment, or the first car
    that exits the lot.
    """
    aa, uu = _checked(a, u)
    capacity = [0] * uu[-1]
    for entry in uu:
        capacity[entry - 1] += 1
    assignment = []
    for car, preferred in enumerate(aa):
        spot = preferred
        while spot < len(capacity) and capacity[spot] == 0:
            spot += 1
        if spot >= len(capacity):
            return ParkingOutcome(failed_car=car)
        capacity[spot] -= 1
        assignment.append(spot)
    return ParkingOutcome(assignment=tuple(assignment))


# ---------------------------------------------------------------------------
# Prime decomposition
# ---------------------------------------------------------------------------


def split_points(a: Sequence[int], u: Sequence[int]) -> tuple[Point, ...]:
    """Points of {(0,0), (u_0,1), ..., (u_{n-1},n)} lying on the path of a.

    These are the cut points of the prime decomposition; a parking function
    is prime exactly when only the two endpoints appear.
    """
    aa, uu = _checked(a, u)
    if not is_vector_pf(aa, uu):
        raise NotParkingFunction(f"{aa} is not a parking function for {uu}")
    markers = {Point(0, 0)} | {Point(uu[i], i + 1) for i in range(len(uu))}
    path = path_of_increasing(order_statistics(aa), uu[-1])
    return tuple(sorted(markers & set(path.vertices())))


@dataclass(frozen=True)
class VectorComponent:
    """One prime component: its own sequence, boundary, and original positions."""

    a: Seq
    u: Seq
    positions: frozenset[int]


@dataclass(frozen=True)
class VectorPrimeDecomposition:
    """Ordered prime components plus the cumulative x-offsets that invert the sum."""

    components: tuple[VectorComponent, ...]
    offsets: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "components": [
                {
                    "a": list(c.a),
                    "u": list(c.u),
                    "B": sorted(c.positions),
                    "offset": off,
                }
                for c, off in zip(self.components, self.offsets)
            ]
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "VectorPrimeDecomposition":
        comps = []
        offs = []
        for entry in data["components"]:
            comps.append(
                VectorComponent(as_seq(entry["a"]), validate_capacity(entry["u"]), frozenset(entry["B"]))
            )
            offs.append(int(entry["offset"]))
        return cls(tuple(comps), tuple(offs))


def decompose(a: Sequence[int], u: Sequence[int]) -> VectorPrimeDecomposition:
    """Cut a u-parking function into its prime components at the split points.

    Component j keeps the original positions of its entries (the label set
    B_j, read bottom-to-top along the path) and is rebased by the x-offset of
    its left cut point, so the shuffle sum can be inverted exactly.
    """
    aa, uu = _checked(a, u)
    cuts = split_points(aa, uu)
    ranks = stable_sort_indices(aa)
    components = []
    offsets = []
    for (x0, y0), (_, y1) in zip(cuts, cuts[1:]):
        positions = ranks[y0:y1]
        comp_a = tuple(aa[i] - x0 for i in sorted(positions))
        comp_u = tuple(uu[i] - x0 for i in range(y0, y1))
        components.append(VectorComponent(comp_a, comp_u, frozenset(positions)))
        offsets.append(x0)
    return VectorPrimeDecomposition(tuple(components), tuple(offsets))


def compose(d: VectorPrimeDecomposition) -> tuple[Seq, Seq]:
    """Rebuild (a, u) from a decomposition; inverse of :func:`decompose`."""
    if len(d.components) != len(d.offsets) or not d.components:
        raise InconsistentDecomposition("component and offset lists disagree")
    n = sum(len(c.a) for c in d.components)
    seen: set[int] = set()
    expected_offset = 0
    a: list[int | None] = [None] * n
    u: list[int] = []
    for comp, offset in zip(d.components, d.offsets):
        if len(comp.a) != len(comp.u) or len(comp.a) != len(comp.positions):
            raise InconsistentDecomposition("component sizes disagree")
        if offset != expected_offset:
            raise InconsistentDecomposition(f"offset {offset} != cumulative shift {expected_offset}")
        if not is_prime_vector_pf(comp.a, comp.u):
            raise InconsistentDecomposition(f"component {comp.a} is not prime for {comp.u}")
        if not comp.positions.isdisjoint(seen):
            raise InconsistentDecomposition("position sets overlap")
        seen |= comp.positions
        for value, idx in zip(comp.a, sorted(comp.positions)):
            if not 0 <= idx < n:
                raise InconsistentDecomposition(f"position {idx} out of range")
            a[idx] = value + offset
        u.extend(entry + offset for entry in comp.u)
        expected_offset = offset + comp.u[-1]
    if seen != set(range(n)):
        raise InconsistentDecomposition("positions do not partition 0..n-1")
    return tuple(a), tuple(u)  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# Counting formulas for boundaries u_i = s + b*i
# ---------------------------------------------------------------------------


def _check_arith(s: int, b: int, n: int, min_n: int) -> None:
    if s < 1:
        raise ValueError("the arithmetic boundary needs s >= 1")
    if b < 0 or n < min_n:
        raise ValueError(f"need b >= 0 and n >= {min_n}")


def count_pf_arith(s: int, b: int, n: int) -> int:
    """Number of parking functions for the boundary u_i = s + b*i: s(s+bn)^(n-1)."""
    _check_arith(s, b, n, 0)
    return exact.as_integer(Fraction(s) * exact.power(s + b * n, n - 1))


def count_ipf_arith(s: int, b: int, n: int) -> int:
    """Number of increasing parking functions for u_i = s + b*i."""
    _check_arith(s, b, n, 0)
    m = s + n * (b + 1)
    return exact.as_integer(Fraction(s, m) * exact.binomial(m, n))


def count_ippf_arith(s: int, b: int, n: int) -> int:
    """Number of increasing prime parking functions for u_i = s + b*i.

    Evaluated over exact rationals; intermediate terms may be negative when
    s < b, but the total is asserted integral.
    """
    _check_arith(s, b, n, 1)
    k = (b + 1) * (n - 1)
    total = Fraction(s - b, n) * exact.binomial(s + k, n - 1) + Fraction(b, n) * exact.binomial(k, n - 1)
    return exact.as_integer(total)


def count_ppf_arith(s: int, b: int, n: int) -> int:
    """Number of prime parking functions for u_i = s + b*i, with 0^0 = 1."""
    _check_arith(s, b, n, 1)
    return (s - b) * (s + (n - 1) * b) ** (n - 1) + b**n * (n - 1) ** (n - 1)
