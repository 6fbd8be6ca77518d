"""Verifying claimed dissections cell by cell.

The verifier collects every coordinate of the region and the tiles, forms
the induced grid, and checks that each interior cell is covered exactly once
and each exterior cell not at all.  Failures come with witness cells.
"""

from fractions import Fraction

from quadrect import (
    Dissection,
    FieldParam,
    pinwheel_dissection,
    polygon_area,
    tiles_equal,
    verify_tiling,
)
from quadrect.samples import rect_of

field = FieldParam(2)

# The square with a centered square hole (sides 3 and 1) cut into four
# equal 2 x 1 rectangles arranged like a pinwheel:
pin = pinwheel_dissection(field.quad(3), field.quad(1))
report = verify_tiling(pin)
print(f"pinwheel valid: {report.valid}")
print(f"grid: {report.grid.nx} x {report.grid.ny} cells, "
      f"{report.grid.inside_count} inside")
print(f"region area: {polygon_area(pin.region)}")
print(f"common tile dimensions: {tiles_equal(pin)}")

# Break it: drop one tile, and the verifier names the gap cells.
broken = Dissection(pin.region, pin.tiles[:3])
report = verify_tiling(broken)
print(f"\nafter dropping a tile, valid: {report.valid}")
for issue in report.issues:
    print(f"  {issue.kind} at cell ({issue.i}, {issue.j}), "
          f"midpoint ({issue.midpoint.x}, {issue.midpoint.y})")

# Overlaps are caught the same way:
square = rect_of(field, 0, 0, 1, 1)
doubled = Dissection(square.to_polygon(), (square, square))
report = verify_tiling(doubled)
print(f"\ndoubled tile, valid: {report.valid}, "
      f"first issue: {report.issues[0].kind} (cover {report.issues[0].cover})")

# Cuts at irrational positions are business as usual:
from quadrect import Point, Rect

w1 = field.quad(Fraction(1, 2), Fraction(1, 4))   # 1/2 + sqrt2/4
strips = Dissection(
    rect_of(field, 0, 0, 1, 1).to_polygon(),
    (
        Rect(Point(field.zero, field.zero), w1, field.one),
        Rect(Point(w1, field.zero), field.one - w1, field.one),
    ),
)
print(f"\nirrational split of the unit square, valid: {verify_tiling(strips).valid}")
