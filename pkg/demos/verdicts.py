"""Deciding potential H-graphicity and certifying the negative answers.

The constructive routes are tried first; the exhaustive oracle is the
last resort and only runs for small n.
"""

from potentia import complete_graph, is_potentially_H, named_graph, thm15_certificate, thm41_certificate

cases = [
    ((5, 5, 4, 4, 3, 3, 2, 2), complete_graph(4)),
    ((9, 3, 3, 3, 3, 3, 1, 1, 1, 1), complete_graph(4)),
    ((4, 4, 3, 3, 2, 2, 2), named_graph("C5")),
    ((3, 3, 2, 2, 1, 1), complete_graph(4)),
]
for seq, H in cases:
    v = is_potentially_H(seq, H)
    print(f"{seq!s:34} {v.status:20} route={v.route}")

# not degree sufficient: a majorizing extremal sequence
c = thm15_certificate((3, 3, 2, 2, 1, 1), complete_graph(4))
print("\ninsufficient:", c.mode, "target", c.target, "valid", c.validate())

# degree sufficient but still negative: closeness within the budgets
c = thm41_certificate((9, 3, 3, 3, 3, 3, 1, 1, 1, 1), complete_graph(4))
print("sufficient:  ", c.status, "edit", c.closeness.total_edit, "budgets", c.budgets)
