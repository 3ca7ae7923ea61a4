"""Sequences, lattice paths, edge labelings, and path-comparison primitives.

A lattice path is a word over {N, E} read from (0, 0); the step word is the
single source of truth and vertex lists are derived on demand.  All values
are immutable, so everything here is safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import DimensionMismatch, NotIncreasing, OutOfRange

Seq = tuple[int, ...]


class Point(NamedTuple):
    x: int
    y: int


def as_seq(entries: Iterable[int]) -> Seq:
    """Normalize to a tuple of non-negative ints."""
    out = tuple(int(e) for e in entries)
    if any(e < 0 for e in out):
        raise ValueError(f"sequence entries must be non-negative, got {out}")
    return out


def order_statistics(s: Sequence[int]) -> Seq:
    """Weakly increasing rearrangement of ``s`` (its order statistics)."""
    return tuple(sorted(s))


def stable_sort_indices(s: Sequence[int]) -> tuple[int, ...]:
    """Original indices of ``s`` sorted by value, ties kept in index order.

    Entry ``r`` is the index whose value is the r-th order statistic; this is
    the normative tie-breaking for every labeling and decomposition here.
    """
    return tuple(sorted(range(len(s)), key=lambda i: (s[i], i)))


def rank_of_value(sorted_s: Sequence[int], bound: int) -> int:
    """Number of entries of a sorted sequence that are < ``bound``."""
    lo, hi = 0, len(sorted_s)
    while lo < hi:
        mid = (lo + hi) // 2
        if sorted_s[mid] < bound:
            lo = mid + 1
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class LatticePath:
    """Monotone lattice path from (0,0), encoded as a step word over {N, E}."""

    steps: str

    def __post_init__(self) -> None:
        if any(ch not in "NE" for ch in self.steps):
            raise ValueError(f"path word must use only N and E, got {self.steps!r}")

    @property
    def width(self) -> int:
        return self.steps.count("E")

    @property
    def height(self) -> int:
        return self.steps.count("N")

    def __str__(self) -> str:
        return self.steps

    def vertices(self) -> tuple[Point, ...]:
        pts = [Point(0, 0)]
        x = y = 0
        for ch in self.steps:
            if ch == "E":
                x += 1
            else:
                y += 1
            pts.append(Point(x, y))
        return tuple(pts)

    def vertical_step_xs(self) -> Seq:
        """x-coordinate of each N step, bottom-to-top."""
        out = []
        x = 0
        for ch in self.steps:
            if ch == "E":
                x += 1
            else:
                out.append(x)
        return tuple(out)

    def horizontal_step_ys(self) -> Seq:
        """y-coordinate of each E step, left-to-right."""
        out = []
        y = 0
        for ch in self.steps:
            if ch == "N":
                y += 1
            else:
                out.append(y)
        return tuple(out)


def path_of_increasing(s: Sequence[int], width: int) -> LatticePath:
    """The unique path in L(width, len(s)) whose i-th N step has x-coordinate s[i]."""
    entries = as_seq(s)
    if any(entries[i] > entries[i + 1] for i in range(len(entries) - 1)):
        raise NotIncreasing(f"{entries} is not weakly increasing")
    if entries and entries[-1] > width:
        raise OutOfRange(f"entry {entries[-1]} exceeds width {width}")
    word = []
    x = 0
    for e in entries:
        word.append("E" * (e - x))
        word.append("N")
        x = e
    word.append("E" * (width - x))
    return LatticePath("".join(word))


def transpose(p: LatticePath) -> LatticePath:
    """Reflection across the line y = x: swaps N and E stepwise."""
    return LatticePath(p.steps.translate(str.maketrans("NE", "EN")))


def weakly_above(upper: LatticePath, lower: LatticePath) -> bool:
    """True iff ``upper`` never dips below ``lower`` (same endpoints required).

    Equivalent formulation: after k east steps of each path, ``upper`` has
    taken at least as many north steps as ``lower``, for every k.
    """
    if (upper.width, upper.height) != (lower.width, lower.height):
        raise DimensionMismatch(
            f"paths end at ({upper.width},{upper.height}) vs ({lower.width},{lower.height})"
        )
    return all(
        hu >= hl
        for hu, hl in zip(_north_counts_before_easts(upper), _north_counts_before_easts(lower))
    )


def _north_counts_before_easts(p: LatticePath) -> list[int]:
    counts = []
    n = 0
    for ch in p.steps:
        if ch == "N":
            n += 1
        else:
            counts.append(n)
    return counts


def common_points(p: LatticePath, q: LatticePath) -> tuple[Point, ...]:
    """Sorted lattice points lying on both paths; always includes both endpoints."""
    if (p.width, p.height) != (q.width, q.height):
        raise DimensionMismatch(
            f"paths end at ({p.width},{p.height}) vs ({q.width},{q.height})"
        )
    shared = set(p.vertices()) & set(q.vertices())
    return tuple(sorted(shared))


@dataclass(frozen=True)
class LabeledPath:
    """A lattice path with labeled N steps (and optionally labeled E steps).

    Vertical labels are listed bottom-to-top, one per N step, and must form a
    permutation of 0..height-1 that increases within each column.  Horizontal
    labels, when present, are listed left-to-right and increase within each
    row.  This pins down the bijection between sequences and labeled paths.
    """

    path: LatticePath
    vertical_labels: Seq
    horizontal_labels: Optional[Seq] = None

    def __post_init__(self) -> None:
        _check_labels(self.vertical_labels, self.path.vertical_step_xs(), "vertical")
        if self.horizontal_labels is not None:
            _check_labels(self.horizontal_labels, self.path.horizontal_step_ys(), "horizontal")

    def vertical_preferences(self) -> Seq:
        """Read back the sequence a with a[label] = column of that N step."""
        xs = self.path.vertical_step_xs()
        prefs = [0] * len(xs)
        for x, label in zip(xs, self.vertical_labels):
            prefs[label] = x
        return tuple(prefs)


def _check_labels(labels: Seq, coords: Seq, kind: str) -> None:
    if sorted(labels) != list(range(len(coords))):
        raise ValueError(f"{kind} labels {labels} are not a permutation of 0..{len(coords) - 1}")
    for i in range(len(coords) - 1):
        if coords[i] == coords[i + 1] and labels[i] >= labels[i + 1]:
            raise ValueError(f"{kind} labels must increase along equal coordinates")


def label_vertical(a: Sequence[int], width: int) -> LabeledPath:
    """Labeled path of the sequence ``a``: N step labeled j sits at x = a[j]."""
    entries = as_seq(a)
    if entries and max(entries) > width:
        raise OutOfRange(f"entry {max(entries)} exceeds width {width}")
    path = path_of_increasing(order_statistics(entries), width)
    return LabeledPath(path, stable_sort_indices(entries))
