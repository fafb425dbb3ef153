"""Pattern invariants and the extremal sequences they produce."""

from potentia import as_pattern, is_graphic, named_graph, oracle_potentially_H, sigma

for name in ("K3", "K4", "P4", "C4", "C5", "paw"):
    P = as_pattern(named_graph(name))
    print(f"{name:4} k={P.k} alpha={P.alpha} nabla={P.nabla} i*={P.i_star} ell*={P.ell_star} f={P.f}")
    n = 8
    s = P.pi_tilde(n)
    # extremal: graphic, yet no realization contains the pattern
    print(f"     pi_tilde(n={n}) = {s}  sum={sigma(s)}  graphic={is_graphic(s)}  "
          f"potentially={oracle_potentially_H(s, P)}")
