"""Graphic sequences: test, realize, and the effect of one 2-switch.

    python demos/graphicality.py
"""

from itertools import combinations

from potentia import count_realizations, is_graphic, realize, two_switch

for seq in [(3, 3, 2, 2, 2), (4, 4, 1, 1), (5, 3, 3, 3, 2, 2), (6, 6, 6, 1, 1, 1, 1)]:
    print(f"{seq!s:28} graphic={is_graphic(seq)}")

# Havel-Hakimi style realization, then count every labeled realization
seq = (3, 3, 2, 2, 2)
g = realize(seq)
print("\nrealization of", seq, "->", g.sorted_edges())
print("labeled realizations:", count_realizations(seq))

# a 2-switch keeps every degree; find one on a 2-regular realization
g = realize((2,) * 6)
print("\nrealization of 2^6 ->", g.sorted_edges())
for (u, v), (x, y) in combinations(g.sorted_edges(), 2):
    if len({u, v, x, y}) == 4 and not g.has_edge(u, y) and not g.has_edge(x, v):
        h = two_switch(g, u, v, x, y)
        print(f"switch {u}{v},{x}{y} -> {u}{y},{x}{v}:", h.sorted_edges())
        assert h.degrees() == g.degrees()
        break
