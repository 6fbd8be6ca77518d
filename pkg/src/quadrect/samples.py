"""Reference shapes and seeded random instance generators.

Everything takes an explicit ``random.Random`` so corpus generation is
reproducible.  The rectilinear polygon generator works on a small cell grid:
grow a connected cell set, patch corner-touch configurations, trace the
boundary (region kept on the left, so the outer loop comes out with positive
signed area and holes negative), then map grid lines to random strictly
increasing field coordinates.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .exactfield import FieldParam, Quad
from .geometry import Dissection, Point, Polygon, Rect
from .invariants import Basis, BasisVector

__all__ = [
    "point_of",
    "rect_of",
    "l_shape",
    "similar_pair_hexagon",
    "random_rat",
    "random_quad",
    "random_positive_quad",
    "random_good_rect",
    "random_guillotine",
    "random_vector_guillotine",
    "random_rectilinear_polygon",
]

Cell = tuple[int, int]


def point_of(field: FieldParam, x, y) -> Point:
    return Point(field.quad(x), field.quad(y))


def rect_of(field: FieldParam, x, y, w, h) -> Rect:
    return Rect(point_of(field, x, y), field.quad(w), field.quad(h))


def l_shape(field: FieldParam) -> Polygon:
    coords = [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]
    return Polygon((tuple(point_of(field, x, y) for x, y in coords),))


def similar_pair_hexagon(field: FieldParam) -> Dissection:
    """L-shaped hexagon over Q[sqrt(2)] that splits into two rectangles that
    are similar (both of ratio 1 + sqrt2) but not congruent.

    Side lengths from the reflex corner: 1, 1+sqrt2, 1+sqrt2, 2+sqrt2,
    sqrt2, 1.  Useful as the boundary case where the polygon decision's
    equal-tiles hypothesis fails while a similar-tiles dissection exists.
    """
    if field.p != Fraction(2):
        raise ValueError("this shape lives in Q[sqrt(2)]")
    w_outer = field.quad(1, 1)      # 1 + sqrt2
    h_outer = field.quad(2, 1)      # 2 + sqrt2
    w_notch = field.quad(0, 1)      # sqrt2
    h_notch = field.quad(1, 1)      # 1 + sqrt2
    z = field.zero
    region = Polygon((
        (
            Point(z, z),
            Point(w_outer, z),
            Point(w_outer, h_notch),
            Point(w_notch, h_notch),
            Point(w_notch, h_outer),
            Point(z, h_outer),
        ),
    ))
    tiles = (
        Rect(Point(z, z), w_notch, h_outer),
        Rect(Point(w_notch, z), w_outer - w_notch, h_notch),
    )
    return Dissection(region, tiles)


def random_rat(rng: random.Random, span: int = 3, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def random_quad(rng: random.Random, field: FieldParam, span: int = 3) -> Quad:
    return field.quad(random_rat(rng, span), random_rat(rng, span))


def random_positive_quad(rng: random.Random, field: FieldParam, span: int = 3) -> Quad:
    while True:
        q = random_quad(rng, field, span)
        if q.sign() > 0:
            return q


def random_good_rect(rng: random.Random, field: FieldParam) -> Rect:
    origin = Point(random_quad(rng, field), random_quad(rng, field))
    return Rect(
        origin,
        random_positive_quad(rng, field),
        random_positive_quad(rng, field),
    )


def _random_split_fraction(rng: random.Random, field: FieldParam) -> Quad:
    den = rng.randint(2, 6)
    t = field.quad(Fraction(rng.randint(1, den - 1), den))
    if rng.random() < 0.4:
        candidate = t + field.quad(0, Fraction(rng.randint(-1, 1), 8))
        one = field.one
        if candidate.sign() > 0 and (one - candidate).sign() > 0:
            return candidate
    return t


def random_guillotine(
    rng: random.Random,
    rect: Rect,
    max_depth: int = 5,
    stop: float = 0.3,
) -> Dissection:
    """Random recursive full-cut dissection of a rectangle; cut positions stay
    inside the field, so all tiles are good rectangles."""
    field = rect.field
    tiles: list[Rect] = []

    def cut(x: Quad, y: Quad, w: Quad, h: Quad, depth: int) -> None:
        if depth == 0 or rng.random() < stop:
            tiles.append(Rect(Point(x, y), w, h))
            return
        t = _random_split_fraction(rng, field)
        if rng.random() < 0.5:
            w1 = w * t
            cut(x, y, w1, h, depth - 1)
            cut(x + w1, y, w - w1, h, depth - 1)
        else:
            h1 = h * t
            cut(x, y, w, h1, depth - 1)
            cut(x, y + h1, w, h - h1, depth - 1)

    cut(rect.x, rect.y, rect.width, rect.height, max_depth)
    return Dissection(rect.to_polygon(), tuple(tiles))


def random_vector_guillotine(
    rng: random.Random,
    basis: Basis,
    field: FieldParam,
    max_depth: int = 4,
) -> tuple[tuple[BasisVector, BasisVector], list[tuple[BasisVector, BasisVector]]]:
    """Guillotine split carried out on symbolic side vectors over a basis:
    side-by-side pieces share the height vector and their widths sum, stacked
    pieces share the width vector.  Returns (parent sides, child sides)."""

    def rand_vec() -> BasisVector:
        return BasisVector(
            basis, tuple(random_quad(rng, field, span=2) for _ in range(basis.k))
        )

    children: list[tuple[BasisVector, BasisVector]] = []

    def split(wv: BasisVector, hv: BasisVector, depth: int) -> None:
        if depth == 0 or rng.random() < 0.3:
            children.append((wv, hv))
            return
        if rng.random() < 0.5:
            h1 = rand_vec()
            split(wv, h1, depth - 1)
            split(wv, hv - h1, depth - 1)
        else:
            w1 = rand_vec()
            split(w1, hv, depth - 1)
            split(wv - w1, hv, depth - 1)

    parent = (rand_vec(), rand_vec())
    split(parent[0], parent[1], max_depth)
    return parent, children


# -- random rectilinear polygons ---------------------------------------------


def _grow_cells(rng: random.Random, w: int, h: int, target: int) -> set[Cell]:
    start = (rng.randrange(w), rng.randrange(h))
    cells = {start}
    while len(cells) < target:
        frontier = set()
        for i, j in cells:
            for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                c = (i + di, j + dj)
                if c not in cells and 0 <= c[0] < w and 0 <= c[1] < h:
                    frontier.add(c)
        if not frontier:
            break
        cells.add(rng.choice(sorted(frontier)))
    return cells


def _patch_corner_touches(cells: set[Cell], w: int, h: int) -> None:
    changed = True
    while changed:
        changed = False
        for i in range(w - 1):
            for j in range(h - 1):
                sw = (i, j) in cells
                se = (i + 1, j) in cells
                nw = (i, j + 1) in cells
                ne = (i + 1, j + 1) in cells
                if sw and ne and not se and not nw:
                    cells.add((i + 1, j))
                    changed = True
                elif se and nw and not sw and not ne:
                    cells.add((i, j))
                    changed = True


def _fill_enclosed(cells: set[Cell], w: int, h: int) -> bool:
    complement = {
        (i, j) for i in range(w) for j in range(h) if (i, j) not in cells
    }
    reachable: set[Cell] = set()
    stack = [
        c
        for c in complement
        if c[0] in (0, w - 1) or c[1] in (0, h - 1)
    ]
    while stack:
        c = stack.pop()
        if c in reachable:
            continue
        reachable.add(c)
        for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            n = (c[0] + di, c[1] + dj)
            if n in complement and n not in reachable:
                stack.append(n)
    enclosed = complement - reachable
    cells.update(enclosed)
    return bool(enclosed)


def _trace_loops(cells: set[Cell]) -> list[list[Cell]]:
    """Boundary loops with the region on the left of the walking direction."""
    nxt: dict[Cell, Cell] = {}

    def add(a: Cell, b: Cell) -> None:
        if a in nxt:
            raise AssertionError("pinch vertex survived patching")
        nxt[a] = b

    for i, j in sorted(cells):
        if (i, j - 1) not in cells:
            add((i, j), (i + 1, j))
        if (i, j + 1) not in cells:
            add((i + 1, j + 1), (i, j + 1))
        if (i - 1, j) not in cells:
            add((i, j + 1), (i, j))
        if (i + 1, j) not in cells:
            add((i + 1, j), (i + 1, j + 1))

    loops: list[list[Cell]] = []
    seen: set[Cell] = set()
    for start in sorted(nxt):
        if start in seen:
            continue
        loop = [start]
        seen.add(start)
        cur = nxt[start]
        while cur != start:
            loop.append(cur)
            seen.add(cur)
            cur = nxt[cur]
        simplified: list[Cell] = []
        n = len(loop)
        for idx, v in enumerate(loop):
            a, c = loop[idx - 1], loop[(idx + 1) % n]
            if (a[0] == v[0] == c[0]) or (a[1] == v[1] == c[1]):
                continue
            simplified.append(v)
        loops.append(simplified)
    return loops


def _random_axis(rng: random.Random, field: FieldParam, count: int) -> list[Quad]:
    vals = [field.quad(Fraction(rng.randint(-6, 6), rng.randint(1, 3)))]
    for _ in range(count - 1):
        a = Fraction(rng.randint(0, 3), rng.randint(1, 3))
        b = Fraction(rng.randint(0, 2), rng.randint(2, 4)) if rng.random() < 0.5 else Fraction(0)
        if a == 0 and b == 0:
            a = Fraction(1)
        vals.append(vals[-1] + field.quad(a, b))
    return vals


def random_rectilinear_polygon(
    rng: random.Random,
    field: FieldParam,
    max_vertices: int = 20,
    allow_holes: bool = True,
    force_hole: bool = False,
) -> Polygon:
    """Random axis-aligned polygon with field coordinates, optionally holed."""
    while True:
        if force_hole:
            w = rng.randint(3, 4)
            h = rng.randint(3, 4)
            cells = {(i, j) for i in range(w) for j in range(h)}
            cells.discard((rng.randint(1, w - 2), rng.randint(1, h - 2)))
        else:
            w = rng.randint(2, 4)
            h = rng.randint(2, 4)
            cells = _grow_cells(rng, w, h, rng.randint(3, w * h))
        _patch_corner_touches(cells, w, h)
        if not allow_holes and not force_hole:
            while _fill_enclosed(cells, w, h):
                _patch_corner_touches(cells, w, h)
        loops = _trace_loops(cells)
        if sum(len(loop) for loop in loops) > max_vertices:
            continue
        if force_hole and len(loops) < 2:
            continue
        xs = _random_axis(rng, field, w + 1)
        ys = _random_axis(rng, field, h + 1)
        return Polygon(
            tuple(
                tuple(Point(xs[i], ys[j]) for i, j in loop) for loop in loops
            )
        )
