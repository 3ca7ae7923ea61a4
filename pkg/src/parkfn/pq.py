"""(p, q)-parking functions: pairs (a, b) whose two lattice paths nest.

The vertical path of b must stay weakly above the reflected horizontal path
of a.  Membership is decided through the equivalent counting inequalities;
the geometric test is kept alongside as an independent route.  Conventions
for p = 0 or q = 0 follow the all-zero degenerate pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exact
from .core import (
    LatticePath,
    Point,
    Seq,
    as_seq,
    common_points,
    order_statistics,
    path_of_increasing,
    rank_of_value,
    stable_sort_indices,
    transpose,
    weakly_above,
)
from .errors import InconsistentDecomposition, NoZeroEntry, NotParkingFunction, NotPrime
from .twodim import WeightMatrix


@dataclass(frozen=True)
class PQPair:
    """A pair (a, b) of preference sequences with shape (p, q) = (|a|, |b|)."""

    a: Seq
    b: Seq

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_seq(self.a))
        object.__setattr__(self, "b", as_seq(self.b))

    @property
    def p(self) -> int:
        return len(self.a)

    @property
    def q(self) -> int:
        return len(self.b)

    def vertical_path(self) -> LatticePath:
        """Path in L(p, q) whose j-th N step has x-coordinate b_(j)."""
        return path_of_increasing(order_statistics(self.b), self.p)

    def reflected_horizontal_path(self) -> LatticePath:
        """Path in L(p, q) whose i-th E step has y-coordinate a_(i)."""
        return transpose(path_of_increasing(order_statistics(self.a), self.q))

    def to_json_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "a": list(self.a), "b": list(self.b)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "PQPair":
        pair = cls(tuple(data["a"]), tuple(data["b"]))
        if "p" in data and int(data["p"]) != pair.p:
            raise ValueError(f"declared p = {data['p']} but |a| = {pair.p}")
        if "q" in data and int(data["q"]) != pair.q:
            raise ValueError(f"declared q = {data['q']} but |b| = {pair.q}")
        return pair


def is_pq_pf(pair: PQPair) -> bool:
    """Membership via the two families of counting inequalities.

    For every i, at least b_(i) entries of a are <= i and at least a_(i)
    entries of b are <= i.  Handles p = 0 or q = 0 uniformly: the all-zero
    pair is the single member.
    """
    sa, sb = order_statistics(pair.a), order_statistics(pair.b)
    if any(rank_of_value(sa, i + 1) < sb[i] for i in range(pair.q)):
        return False
    if any(rank_of_value(sb, i + 1) < sa[i] for i in range(pair.p)):
        return False
    return True


def is_pq_pf_by_paths(pair: PQPair) -> bool:
    """Geometric membership route: the b-path stays weakly above the a-path."""
    return weakly_above(pair.vertical_path(), pair.reflected_horizontal_path())


def is_pq_prime(pair: PQPair) -> bool:
    """Primeness: a parking function whose inner inequalities hold strictly.

    Degenerate shapes follow the convention that the only prime pairs with
    an empty side are (empty, (0)) and ((0), empty).
    """
    if pair.p == 0:
        return pair.b == (0,)
    if pair.q == 0:
        return pair.a == (0,)
    if not is_pq_pf(pair):
        return False
    # Both sides must contain a 0.  For p + q >= 3 the strict inequalities
    # below already force this; at shape (1, 1) they are vacuous and the zero
    # requirement is what separates the one indecomposable pair from the two
    # pairs that split into a horizontal and a vertical atom.
    if 0 not in pair.a or 0 not in pair.b:
        return False
    sa, sb = order_statistics(pair.a), order_statistics(pair.b)
    if any(rank_of_value(sa, i) <= sb[i] for i in range(1, pair.q)):
        return False
    if any(rank_of_value(sb, i) <= sa[i] for i in range(1, pair.p)):
        return False
    return True


def remove_zero_reduction(pair: PQPair) -> PQPair:
    """Drop the first 0 of a and of b; any zero choice works, so normalize.

    Defined for prime pairs with p, q >= 1; the result is a (p-1, q-1)
    parking function.
    """
    if pair.p < 1 or pair.q < 1:
        raise NotPrime("the reduction needs p, q >= 1")
    if not is_pq_prime(pair):
        raise NotPrime(f"{(pair.a, pair.b)} is not a prime pair")
    if 0 not in pair.a or 0 not in pair.b:
        raise NoZeroEntry("no zero entry to remove")
    ia, ib = pair.a.index(0), pair.b.index(0)
    return PQPair(pair.a[:ia] + pair.a[ia + 1 :], pair.b[:ib] + pair.b[ib + 1 :])


# ---------------------------------------------------------------------------
# Prime decomposition of pairs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PQComponent:
    """One prime component with the original index sets of both sides."""

    a: Seq
    b: Seq
    a_positions: frozenset[int]
    b_positions: frozenset[int]


@dataclass(frozen=True)
class PQPrimeDecomposition:
    """Ordered prime components and the chain of cut points (0,0), ..., (p,q)."""

    components: tuple[PQComponent, ...]
    cut_points: tuple[Point, ...]

    def to_json_dict(self) -> dict:
        return {
            "components": [
                {
                    "a": list(c.a),
                    "b": list(c.b),
                    "A": sorted(c.a_positions),
                    "B": sorted(c.b_positions),
                    "offset": [x0, y0],
                }
                for c, (x0, y0) in zip(self.components, self.cut_points)
            ]
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "PQPrimeDecomposition":
        comps = []
        cuts = [Point(0, 0)]
        for entry in data["components"]:
            comp = PQComponent(
                as_seq(entry["a"]),
                as_seq(entry["b"]),
                frozenset(entry["A"]),
                frozenset(entry["B"]),
            )
            if tuple(entry["offset"]) != tuple(cuts[-1]):
                raise InconsistentDecomposition(f"offset {entry['offset']} does not chain")
            comps.append(comp)
            cuts.append(Point(cuts[-1].x + len(comp.a), cuts[-1].y + len(comp.b)))
        return cls(tuple(comps), tuple(cuts))


def decompose_pq(pair: PQPair) -> PQPrimeDecomposition:
    """Cut a pair at the common points of its two paths.

    Between consecutive cut points, each side keeps the original indices of
    the entries whose ranks fall in the segment (A and B label sets) and is
    rebased by the segment's lower-left corner; a purely vertical segment
    yields an empty a-side, a purely horizontal one an empty b-side.
    """
    if not is_pq_pf(pair):
        raise NotParkingFunction(f"{(pair.a, pair.b)} is not a (p,q)-parking function")
    cuts = common_points(pair.reflected_horizontal_path(), pair.vertical_path())
    ranks_a = stable_sort_indices(pair.a)
    ranks_b = stable_sort_indices(pair.b)
    components = []
    for (x0, y0), (x1, y1) in zip(cuts, cuts[1:]):
        a_pos = ranks_a[x0:x1]
        b_pos = ranks_b[y0:y1]
        comp_a = tuple(pair.a[i] - y0 for i in sorted(a_pos))
        comp_b = tuple(pair.b[j] - x0 for j in sorted(b_pos))
        components.append(PQComponent(comp_a, comp_b, frozenset(a_pos), frozenset(b_pos)))
    return PQPrimeDecomposition(tuple(components), cuts)


def compose_pq(d: PQPrimeDecomposition) -> PQPair:
    """Rebuild the pair from a decomposition; inverse of :func:`decompose_pq`.

    A decomposition with no components is valid and yields the empty pair.
    """
    if len(d.cut_points) != len(d.components) + 1 or d.cut_points[0] != (0, 0):
        raise InconsistentDecomposition("cut points must chain from (0,0), one per component")
    p = sum(len(c.a) for c in d.components)
    q = sum(len(c.b) for c in d.components)
    if d.cut_points[-1] != (p, q):
        raise InconsistentDecomposition(f"cut points must end at ({p},{q})")
    a: list[int | None] = [None] * p
    b: list[int | None] = [None] * q
    seen_a: set[int] = set()
    seen_b: set[int] = set()
    x0 = y0 = 0
    for comp, cut in zip(d.components, d.cut_points):
        if len(comp.a) != len(comp.a_positions) or len(comp.b) != len(comp.b_positions):
            raise InconsistentDecomposition("component sizes disagree with position sets")
        if cut != (x0, y0):
            raise InconsistentDecomposition(f"cut point {cut} does not chain to ({x0},{y0})")
        if not is_pq_prime(PQPair(comp.a, comp.b)):
            raise InconsistentDecomposition(f"component {(comp.a, comp.b)} is not prime")
        if not (comp.a_positions.isdisjoint(seen_a) and comp.b_positions.isdisjoint(seen_b)):
            raise InconsistentDecomposition("position sets overlap")
        seen_a |= comp.a_positions
        seen_b |= comp.b_positions
        for value, idx in zip(comp.a, sorted(comp.a_positions)):
            if not 0 <= idx < p:
                raise InconsistentDecomposition(f"a-position {idx} out of range")
            a[idx] = value + y0
        for value, idx in zip(comp.b, sorted(comp.b_positions)):
            if not 0 <= idx < q:
                raise InconsistentDecomposition(f"b-position {idx} out of range")
            b[idx] = value + x0
        x0 += len(comp.a)
        y0 += len(comp.b)
    if seen_a != set(range(p)) or seen_b != set(range(q)):
        raise InconsistentDecomposition("positions do not partition the index sets")
    return PQPair(tuple(a), tuple(b))  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# Weight-grid views
# ---------------------------------------------------------------------------


def u0_matrix(p: int, q: int) -> WeightMatrix:
    """Grid with node (k, l) weighing (l+1, k+1); its members are the (p,q) pairs."""
    rows = tuple(tuple((l + 1, k + 1) for k in range(p + 1)) for l in range(q + 1))
    return WeightMatrix(p, q, rows)


def u0_prime_matrix(p: int, q: int) -> WeightMatrix:
    """Grid with node (k, l) weighing (l, k) off the axes and (1, 1) on them.

    Its members are exactly the prime (p,q) pairs when p, q >= 1.
    """
    rows = tuple(
        tuple((l, k) if k >= 1 and l >= 1 else (1, 1) for k in range(p + 1)) for l in range(q + 1)
    )
    return WeightMatrix(p, q, rows)


# ---------------------------------------------------------------------------
# Counting formulas
# ---------------------------------------------------------------------------


def _check_pq(p: int, q: int) -> None:
    if p < 0 or q < 0:
        raise ValueError("p and q must be non-negative")


def count_pq_pf(p: int, q: int) -> int:
    """(p+q+1)(p+1)^(q-1)(q+1)^(p-1); rational powers cover p = 0 or q = 0."""
    _check_pq(p, q)
    return exact.as_integer(Fraction(p + q + 1) * exact.power(p + 1, q - 1) * exact.power(q + 1, p - 1))


def count_pq_ipf(p: int, q: int) -> int:
    """Narayana count of increasing pairs: C(n+1,p) C(n+1,q) / (n+1), n = p+q."""
    _check_pq(p, q)
    n = p + q
    return exact.as_integer(Fraction(exact.binomial(n + 1, p) * exact.binomial(n + 1, q), n + 1))


def count_pq_ippf(p: int, q: int) -> int:
    """Number of increasing prime pairs; degenerate shapes count their lone member."""
    _check_pq(p, q)
    if p == 0 or q == 0:
        return 1 if (p, q) in ((0, 1), (1, 0)) else 0
    n = p + q - 1
    return exact.as_integer(Fraction(exact.binomial(n, p - 1) * exact.binomial(n, q - 1), n))


def count_pq_ppf(p: int, q: int) -> int:
    """Closed-form count of prime pairs, with 0^0 = 1 at p = 1 or q = 1."""
    _check_pq(p, q)
    if p == 0 or q == 0:
        return 1 if (p, q) in ((0, 1), (1, 0)) else 0
    return (
        p**q * (q - 1) ** (p - 1)
        + q**p * (p - 1) ** (q - 1)
        - (p + q - 1) * (p - 1) ** (q - 1) * (q - 1) ** (p - 1)
    )


def count_pq_ppf_sum(p: int, q: int) -> int:
    """Prime-pair count as a double sum over the zero multiplicities (i, j).

    Terms with i = p or j = q carry an exponent of -1 whose base can be 0;
    in those terms the coefficient factors exactly as (p-1)(q-1), so the
    negative power cancels symbolically before evaluation:

        i = p, j < q:  C(q,j) (p-1)^(q-j)
        i < p, j = q:  C(p,i) (q-1)^(p-i)
        i = p, j = q:  1
    """
    if p < 1 or q < 1:
        raise ValueError("the summation form needs p, q >= 1")
    total = 0
    for i in range(1, p + 1):
        for j in range(1, q + 1):
            if i == p and j == q:
                total += 1
            elif i == p:
                total += exact.binomial(q, j) * (p - 1) ** (q - j)
            elif j == q:
                total += exact.binomial(p, i) * (q - 1) ** (p - i)
            else:
                coeff = 1 + q * i + p * j - p - q - i * j
                total += (
                    exact.binomial(p, i)
                    * exact.binomial(q, j)
                    * coeff
                    * (q - 1) ** (p - i - 1)
                    * (p - 1) ** (q - j - 1)
                )
    return total
