"""Wall-crossing moves and cusp-stratum certificates along atlas edges.

Run with: python demos/03_wall_crossing.py
"""

from realcubic import (
    build_atlas,
    cusp_stratum,
    find_a2_pair,
    parse_lattice_expr,
    refute_a2_mod2,
)
from realcubic.walls import MoveKind

atlas = build_atlas("K4")

# Each edge crosses a wall; the move type (L or R) is detected from the
# parity of pairings with the new vanishing class.
sample_l = next(e for e in atlas.edges if e.move is MoveKind.L)
sample_r = next(e for e in atlas.edges if e.move is MoveKind.R)
print(f"edge {sample_l.source} -> {sample_l.target}: move {sample_l.move}")
print(f"edge {sample_r.source} -> {sample_r.target}: move {sample_r.move}")

# An R-wall carries a cusp stratum iff the relevant eigenlattice contains
# an A2 pair whose difference is a 6-root satisfying a mod-3 condition.
for edge in atlas.edges:
    if edge.move is not MoveKind.R:
        continue
    if str(edge.target) not in ("C1,1", "C5,4", "C10,1", "C2,1_I"):
        continue
    verdict = cusp_stratum((atlas.vertex(edge.source),
                            atlas.vertex(edge.target)))
    print(f"{edge.source} -> {edge.target}: "
          f"cusp stratum {verdict.kind}  ({verdict.detail})")

# Positive certificates: an explicit pair of square-2 vectors.
cert = find_a2_pair(parse_lattice_expr("<2>+U"))
print(f"A2 pair in <2>+U: v1 = {cert.v1}, v2 = {cert.v2}")

# Negative certificates: in L/2L, no pair of square-2 classes can pair
# oddly, so no A2 embeds.
for text in ["U", "U+E8(2)"]:
    ref = refute_a2_mod2(parse_lattice_expr(text))
    print(f"{text}: A2 embedding refuted mod 2: {ref is not None}")
