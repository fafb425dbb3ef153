"""Exact potential numbers by exhaustive search, next to the lower bound
given by the extremal sequence.

    POTENTIA_ORACLE_CAP=8 python demos/sigma_table.py
"""

from potentia import as_pattern, exact_sigma, named_graph, sigma

print("H    n  exact  lower")
for name in ("K2", "K3", "P3", "K4"):
    P = as_pattern(named_graph(name))
    for n in range(max(P.k, 4), 8):
        print(f"{name:4} {n}  {exact_sigma(P, n):5}  {sigma(P.pi_tilde(n)) + 2:5}")
