"""Searching for explicit witness dissections, then drawing one.

The constructor composes ratios bottom-up: side-by-side pieces add ratios,
stacked pieces add them harmonically.  Whatever it finds is realized into
exact rectangle coordinates and re-verified; a miss proves nothing, but the
decision procedure can certify genuine impossibility independently.
"""

from pathlib import Path

from quadrect import (
    FieldParam,
    Point,
    Rect,
    construct_dissection,
    decide_rect_ratio,
    leaf_count,
    reachable_ratios,
    realize_tree,
    rect_ratio,
    tree_ratio,
    verify_tiling,
)
from quadrect.render import render_svg

field = FieldParam(2)
silver = field.quad(1, 1)
target = field.sqrt_p          # sqrt2 from tiles similar to 1+sqrt2

tree = construct_dissection(target, silver, max_leaves=8)
print(f"target {target} from tiles of ratio {silver}:")
print(f"  found a witness with {leaf_count(tree)} tiles, "
      f"tree ratio {tree_ratio(tree, silver)}")

realized = realize_tree(tree, Rect(Point(field.zero, field.zero), target, field.one), silver)
print(f"  realization verifies: {verify_tiling(realized).valid}")
for t in realized.tiles:
    print(f"    tile {t.width} x {t.height} at ({t.x}, {t.y}) "
          f"ratio {rect_ratio(t)}")
print(f"  decision agrees: {decide_rect_ratio(target, silver).tileable}")

# A miss stays honest: rational targets are provably out of reach for
# silver-ratio tiles, and the search simply reports None.
print(f"\ntarget 1: search result {construct_dissection(field.one, silver, 8)}, "
      f"decision {decide_rect_ratio(field.one, silver).tileable}")

# How fast does the reachable set grow?
for budget in (2, 4, 6, 8):
    reach = reachable_ratios(silver, budget)
    print(f"ratio classes reachable with <= {budget} tiles: {len(reach)}")

out = Path(__file__).resolve().parent / "out"
out.mkdir(exist_ok=True)
svg_path = out / "sqrt2_from_silver.svg"
svg_path.write_text(render_svg(realized, precision=12), encoding="utf-8")
print(f"\nwrote {svg_path}")
