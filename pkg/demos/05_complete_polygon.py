"""Completing polygons to bounding rectangles.

Any region with field coordinates extends to its bounding rectangle by
adjoining rectangles drawn on the region's own coordinate grid; hole
interiors are part of the complement.  This is the bookkeeping step that
lets rectangle invariants speak about non-rectangular regions.
"""

import random

from quadrect import (
    FieldParam,
    complete_to_rectangle,
    polygon_area,
    square_with_hole_polygon,
    verify_complement,
)
from quadrect.samples import l_shape, random_rectilinear_polygon

field = FieldParam(2)


def describe(label, region):
    comp = complete_to_rectangle(region)
    ok = verify_complement(region, comp.bounding, comp.added)
    print(f"{label}:")
    print(f"  bounding {comp.bounding.width} x {comp.bounding.height} "
          f"at ({comp.bounding.x}, {comp.bounding.y})")
    for r in comp.added:
        print(f"  + {r.width} x {r.height} at ({r.x}, {r.y})")
    added_area = field.zero
    for r in comp.added:
        added_area = added_area + r.area
    print(f"  partition verified: {ok}")
    print(f"  region ({polygon_area(region)}) + added ({added_area}) "
          f"= bounding ({comp.bounding.area})")


describe("L-shape", l_shape(field))
describe("square with hole (u=3, v=1)",
         square_with_hole_polygon(field.quad(3), field.quad(1)))

rng = random.Random(5)
for k in range(3):
    region = random_rectilinear_polygon(rng, field, force_hole=(k == 2))
    describe(f"random polygon #{k + 1} "
             f"({sum(len(l) for l in region.loops)} vertices, "
             f"{len(region.loops) - 1} holes)", region)
