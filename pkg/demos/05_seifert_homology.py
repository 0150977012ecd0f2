"""Kirby-calculus homology bookkeeping and the spiral-curve scenario.

Run with: python demos/05_seifert_homology.py
"""

from realcubic import (
    abelianization,
    blow_up,
    h1_from_linking,
    slide,
    spiral_scenario,
)
from realcubic.surgery import SEIFERT_PI1, presentation_from_linking

# H1 of a surgered 3-manifold is the cokernel of its linking matrix.
seifert = [[1, -1, -1], [-1, 3, -1], [-1, -1, 5]]
print(f"H1 from linking matrix {seifert}: {h1_from_linking(seifert)}")

# The same answer from the fundamental-group presentation.
print(f"abelianized pi1: {abelianization(SEIFERT_PI1)}")
print(f"presentation from linking: "
      f"{abelianization(presentation_from_linking(seifert))}")

# Kirby moves preserve H1: blow up a -1-framed unknot and slide over it.
m = blow_up(seifert, -1)
m = slide(m, 0, len(m) - 1, 1)
print(f"after blow-up and slide: {h1_from_linking(m)}  (unchanged)")

# The spiral-curve scenario: two lifted framings, two blow-ups and four
# handle slides separate the components; H1 is checked at every step.
report = spiral_scenario()
for line in report.lines():
    print(line)
