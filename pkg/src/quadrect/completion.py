"""Completing a rectilinear polygon to its bounding rectangle.

Any region with coordinates in the field can be extended, by adjoining
axis-aligned rectangles whose corners all lie on the grid induced by the
region's own vertices, so that the union is exactly the bounding rectangle.
The complement cells are merged row by row into maximal horizontal strips,
which keeps the output deterministic; nothing tries to minimize the number
of added rectangles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .geometry import (
    Point,
    Polygon,
    Rect,
    point_in_region_crossing,
)

_HALF = Fraction(1, 2)

__all__ = ["Completion", "complete_to_rectangle", "verify_complement"]


@dataclass(frozen=True)
class Completion:
    bounding: Rect
    added: tuple[Rect, ...]


def complete_to_rectangle(region: Polygon) -> Completion:
    """Bounding rectangle plus the row-merged rectangulation of its complement.

    Hole interiors count as complement: the bounding rectangle must be exactly
    partitioned into the region and the added rectangles.  Every emitted
    coordinate is drawn from the region's own vertex coordinates, and the
    added list is ordered row-major by lower-left corner.
    """
    xs = sorted({p.x for loop in region.loops for p in loop})
    ys = sorted({p.y for loop in region.loops for p in loop})
    bounding = Rect(Point(xs[0], ys[0]), xs[-1] - xs[0], ys[-1] - ys[0])
    added: list[Rect] = []
    for j in range(len(ys) - 1):
        my = (ys[j] + ys[j + 1]) * _HALF
        run_start: int | None = None
        for i in range(len(xs) - 1):
            mx = (xs[i] + xs[i + 1]) * _HALF
            outside = not point_in_region_crossing(region, Point(mx, my))
            if outside and run_start is None:
                run_start = i
            if (not outside or i == len(xs) - 2) and run_start is not None:
                stop = i + 1 if outside else i
                added.append(
                    Rect(
                        Point(xs[run_start], ys[j]),
                        xs[stop] - xs[run_start],
                        ys[j + 1] - ys[j],
                    )
                )
                run_start = None
    return Completion(bounding, tuple(added))


def verify_complement(region: Polygon, bounding: Rect, added: Sequence[Rect]) -> bool:
    """True iff every induced grid cell of the bounding rectangle lies in
    exactly one of the region and the added rectangles (and nothing pokes
    outside the bounding rectangle)."""
    xs = {p.x for loop in region.loops for p in loop}
    ys = {p.y for loop in region.loops for p in loop}
    xs.update((bounding.x, bounding.x2))
    ys.update((bounding.y, bounding.y2))
    for r in added:
        xs.update((r.x, r.x2))
        ys.update((r.y, r.y2))
    sx = sorted(xs)
    sy = sorted(ys)
    for j in range(len(sy) - 1):
        my = (sy[j] + sy[j + 1]) * _HALF
        for i in range(len(sx) - 1):
            mx = (sx[i] + sx[i + 1]) * _HALF
            pt = Point(mx, my)
            in_bounding = (
                bounding.x < pt.x < bounding.x2 and bounding.y < pt.y < bounding.y2
            )
            in_region = point_in_region_crossing(region, pt)
            cover = sum(
                1
                for r in added
                if r.x < pt.x < r.x2 and r.y < pt.y < r.y2
            )
            want = 1 if in_bounding else 0
            if int(in_region) + cover != want:
                return False
    return True
