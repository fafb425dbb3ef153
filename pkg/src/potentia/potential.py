"""Pattern analytics and the constructive potential-H-graphicity pipeline.

For a fixed pattern ``H`` of order ``k`` this module computes the
independence number, the profile ``nabla_i(H)`` (least maximum degree of an
induced ``i``-vertex subgraph), the index ``i*``, ``ell* = i* - nabla_{i*}``
and ``f(H) = 6k^2 + ell*^2 k + nabla_{i*}``, together with the extremal
sequences ``pi_tilde_i(H, n)``.

:func:`is_potentially_H` tries a series of constructions, each of which
returns a checked :class:`~potentia.realize.EmbeddingWitness`, and falls
back to exhaustive search at small ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Mapping, Sequence

from .graphs import LabeledGraph, complete_graph
from .layoff import LayoffError, LayoffHypothesisError, run_layoff
from .oracle import find_potential_realization, oracle_cap
from .realize import (
    EmbeddingHypothesisError,
    EmbeddingWitness,
    ExchangeFailure,
    NotGraphicError,
    embed_by_exchange,
    embed_by_switching,
    embed_on_prescribed,
    max_split_objective_realization,
    realize,
    realize_degrees,
    complete_set_to_clique,
)
from .seqcore import DegreeSequence, is_graphic

__all__ = [
    "PatternGraph",
    "PotentialVerdict",
    "WantSequence",
    "ALPHA_CAP",
    "NABLA_CAP",
    "as_pattern",
    "alpha",
    "nabla",
    "i_star",
    "pi_tilde",
    "sigma",
    "degree_sufficient",
    "split_degrees",
    "li_yin_potentially_Kk",
    "want_sequence",
    "assemble_want_realization",
    "is_potentially_H",
]

ALPHA_CAP = 16
NABLA_CAP = 12

POTENTIALLY_H = "potentially_H"
NOT_POTENTIALLY_H = "not_potentially_H"
UNKNOWN = "unknown"


# ---------------------------------------------------------------------------
# pattern analytics
# ---------------------------------------------------------------------------


def _max_independent(masks: Sequence[int]) -> int:
    """Bitmask of a maximum independent set, lexicographically least on ties."""
    k = len(masks)
    best = 0

    def rec(cand: int, chosen: int) -> None:
        nonlocal best
        if cand.bit_count() + chosen.bit_count() <= best.bit_count():
            return
        if not cand:
            size, bsize = chosen.bit_count(), best.bit_count()
            if size > bsize or (size == bsize and _lex_less(chosen, best)):
                best = chosen
            return
        v = (cand & -cand).bit_length() - 1
        # take v first so the lexicographically least set is found first
        rec(cand & ~masks[v] & ~(1 << v), chosen | 1 << v)
        rec(cand & ~(1 << v), chosen)

    rec((1 << k) - 1, 0)
    return best


def _lex_less(a: int, b: int) -> bool:
    return sorted(_bits(a)) < sorted(_bits(b))


def _bits(m: int) -> list[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


def _graph(H) -> LabeledGraph:
    return getattr(H, "graph", H)


def alpha(H) -> int:
    """Independence number (exact search, order at most ``ALPHA_CAP``)."""
    if isinstance(H, PatternGraph):
        return H.alpha
    g = _graph(H)
    if g.n > ALPHA_CAP:
        raise ValueError(f"pattern order {g.n} exceeds independence-number cap {ALPHA_CAP}")
    return _max_independent(g.masks).bit_count()


def _nabla_with_set(g: LabeledGraph, i: int) -> tuple[int, tuple[int, ...]]:
    masks = g.masks
    best, best_set = None, None
    for subset in combinations(range(g.n), i):
        sm = 0
        for v in subset:
            sm |= 1 << v
        delta = max((masks[v] & sm).bit_count() for v in subset)
        if best is None or delta < best:
            best, best_set = delta, subset
            if delta == 0:
                break
    assert best is not None and best_set is not None
    return best, tuple(v + 1 for v in best_set)


def nabla(H, i: int) -> int:
    """Least ``Delta(F)`` over induced subgraphs ``F`` of ``H`` on ``i`` vertices.

    Defined for ``alpha(H) + 1 <= i <= k``.
    """
    if isinstance(H, PatternGraph):
        if i not in H.nabla:
            raise ValueError(f"i = {i} outside {H.alpha + 1}..{H.k}")
        return H.nabla[i]
    g = _graph(H)
    a = alpha(g)
    if not a + 1 <= i <= g.n:
        raise ValueError(f"i = {i} outside {a + 1}..{g.n}")
    return _nabla_with_set(g, i)[0]


@dataclass(frozen=True)
class PatternGraph:
    """A fixed pattern ``H`` with its analytics precomputed.

    ``nabla`` maps ``i`` in ``alpha+1..k`` to ``nabla_i(H)`` and ``F_sets[i]``
    is the lexicographically least vertex set whose induced subgraph attains
    it. ``independent_set`` is the lexicographically least maximum one.
    """

    graph: LabeledGraph
    k: int
    degseq: tuple[int, ...]
    alpha: int
    nabla: Mapping[int, int]
    F_sets: Mapping[int, tuple[int, ...]]
    independent_set: tuple[int, ...]
    i_star: int
    ell_star: int
    f: int

    @classmethod
    def from_graph(cls, g: LabeledGraph) -> "PatternGraph":
        return _analyze(g)

    def pi_tilde(self, n: int, i: int | None = None) -> DegreeSequence:
        return pi_tilde(self, n, i)

    def F(self, i: int) -> LabeledGraph:
        """The induced subgraph on ``F_sets[i]``, relabeled ``1..i``."""
        return self.graph.induced(self.F_sets[i])

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "alpha": self.alpha,
            "degseq": list(self.degseq),
            "nabla": {str(i): v for i, v in sorted(self.nabla.items())},
            "i_star": self.i_star,
            "ell_star": self.ell_star,
            "f": self.f,
        }


@lru_cache(maxsize=256)
def _analyze(g: LabeledGraph) -> PatternGraph:
    if not g.edges:
        raise ValueError("pattern needs at least one edge")
    if g.n > NABLA_CAP:
        raise ValueError(f"pattern order {g.n} exceeds profile cap {NABLA_CAP}")
    k = g.n
    ind_mask = _max_independent(g.masks)
    a = ind_mask.bit_count()
    nab, fsets = {}, {}
    for i in range(a + 1, k + 1):
        nab[i], fsets[i] = _nabla_with_set(g, i)
    assert nab[k] == g.max_degree()
    i_s = min(nab, key=lambda i: (2 * i - nab[i], i))
    ell = i_s - nab[i_s]
    assert 1 <= ell <= a, "ell* must lie in 1..alpha"
    h = g.degree_sequence()
    for i, v in nab.items():
        assert h[k - i] <= k - i + v, "degree profile bound fails"
    return PatternGraph(
        graph=g,
        k=k,
        degseq=h,
        alpha=a,
        nabla=nab,
        F_sets=fsets,
        independent_set=tuple(v + 1 for v in _bits(ind_mask)),
        i_star=i_s,
        ell_star=ell,
        f=6 * k * k + ell * ell * k + nab[i_s],
    )


def as_pattern(H) -> PatternGraph:
    if isinstance(H, PatternGraph):
        return H
    return _analyze(H)


def i_star(H) -> tuple[int, int, int]:
    """``(i*, ell*, f(H))``."""
    P = as_pattern(H)
    return P.i_star, P.ell_star, P.f


def pi_tilde(H, n: int, i: int | None = None) -> DegreeSequence:
    """``((n-1)^{k-i}, (k-i+nabla_i-1)^{n-k+i})``, graphic after the parity fix.

    The last term drops by one when ``n-k+i`` and ``nabla_i - 1`` are both
    odd. ``i`` defaults to ``i*``.
    """
    P = as_pattern(H)
    i = P.i_star if i is None else i
    if i not in P.nabla:
        raise ValueError(f"i = {i} outside {P.alpha + 1}..{P.k}")
    k, nb = P.k, P.nabla[i]
    if n < k:
        raise ValueError(f"n = {n} is smaller than the pattern order {k}")
    low = k - i + nb - 1
    if low > n - 1:
        raise ValueError(f"n = {n} too small: term {low} exceeds n - 1")
    terms = [n - 1] * (k - i) + [low] * (n - k + i)
    if (n - k + i) % 2 == 1 and (nb - 1) % 2 == 1:
        terms[-1] -= 1
    seq = DegreeSequence(terms)
    assert is_graphic(seq), f"pi_tilde {tuple(seq)} is not graphic"
    return seq


def sigma(seq: Sequence[int]) -> int:
    return sum(seq)


def degree_sufficient(seq: Sequence[int], H) -> tuple[bool, int | None]:
    """``(True, None)`` when ``d_i >= h_i`` for ``i <= k``.

    Otherwise ``j`` is the largest integer with ``d_{k-j+1} < h_{k-j+1}``;
    missing terms count as 0.
    """
    h = as_pattern(H).degseq if isinstance(H, PatternGraph) else _graph(H).degree_sequence()
    k = len(h)
    d = list(seq[:k]) + [0] * max(0, k - len(seq))
    for p in range(1, k + 1):
        if d[p - 1] < h[p - 1]:
            return False, k - p + 1
    return True, None


def split_degrees(r: int, k: int) -> tuple[int, ...]:
    """Degree sequence of the complete split graph ``K_r v K_{k-r}-bar``."""
    return (k - 1,) * r + (r,) * (k - r)


def li_yin_potentially_Kk(seq: Sequence[int], k: int) -> bool:
    """Sufficient test: ``d_k >= k-1`` and either ``d_i >= 2(k-1)-i`` for
    ``i <= k-2`` or ``d_{2k} >= k-2``."""
    return _li_yin_part(seq, k) is not None


def _li_yin_part(seq: Sequence[int], k: int) -> str | None:
    n = len(seq)
    if k < 1 or n < k or seq[k - 1] < k - 1:
        return None
    if all(seq[i - 1] >= 2 * (k - 1) - i for i in range(1, k - 1)):
        return "a"
    if n >= 2 * k and seq[2 * k - 1] >= k - 2:
        return "b"
    return None


# ---------------------------------------------------------------------------
# want sequences
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WantSequence:
    """Want sequence of ``seq`` for ``K_r v K_{k-r}-bar`` from realization ``g``.

    ``base`` and ``values`` are positional: entry ``t`` belongs to vertex
    ``v_{r+1+t}``. ``W[i-1]`` and ``keep[i-1]`` are the external neighbors
    of ``v_i`` (``i <= r``) that are given up and kept, respectively.
    """

    seq: tuple[int, ...]
    r: int
    k: int
    graph: LabeledGraph
    base: tuple[int, ...]
    values: tuple[int, ...]
    W: tuple[tuple[int, ...], ...]
    keep: tuple[tuple[int, ...], ...]

    def w(self, j: int) -> int:
        return self.base[j - self.r - 1]

    def value(self, j: int) -> int:
        return self.values[j - self.r - 1]

    @property
    def zero_count(self) -> int:
        return sum(1 for x in self.values if x == 0)

    @property
    def nonnegative(self) -> bool:
        return all(x >= 0 for x in self.values)

    def max_bound(self) -> int:
        """``max(w_{r+1}, w_{k+1} + r)`` read positionally."""
        n = len(self.seq)
        cands = [self.w(self.r + 1)]
        if self.k + 1 <= n:
            cands.append(self.w(self.k + 1) + self.r)
        return max(cands)

    def max_bound_by_zone(self) -> int:
        """``max`` of the unchanged-or-reduced zone and the raised zone plus ``r``."""
        n = len(self.seq)
        cands = [self.w(j) for j in range(self.r + 1, self.k + 1)]
        cands += [self.w(y) + self.r for y in range(self.k + 1, n + 1)]
        return max(cands)

    def sorted_values(self) -> tuple[int, ...]:
        return tuple(sorted(self.values, reverse=True))

    def is_graphic(self) -> bool:
        return self.nonnegative and is_graphic(self.sorted_values())


def want_sequence(
    seq: Sequence[int], r: int, k: int, g: LabeledGraph | None = None
) -> WantSequence:
    """Build the want sequence; ``g`` defaults to an objective-maximizing realization."""
    seq = DegreeSequence(seq)
    n = len(seq)
    if not 0 < r < k <= n:
        raise ValueError(f"need 0 < r < k <= n, got r={r}, k={k}, n={n}")
    ok, _ = degree_sufficient(seq, _split_pattern(r, k))
    if not ok:
        raise ValueError(f"sequence is not degree sufficient for K_{r} v K_{k - r}-bar")
    if g is None:
        g = max_split_objective_realization(seq, r, k).graph
    if g.degrees() != tuple(seq):
        raise ValueError("g does not realize the sequence")

    base = [sum(1 for u in g.neighbors(j) if u > r) for j in range(r + 1, n + 1)]
    values = base[:]
    W, keep = [], []
    for i in range(1, r + 1):
        in_S = sum(1 for u in g.neighbors(i) if u <= k)
        ext = sorted(u for u in g.neighbors(i) if u > k)
        need = k - 1 - in_S
        assert need <= len(ext), "degree sufficiency guarantees enough external neighbors"
        W.append(tuple(ext[:need]))
        keep.append(tuple(ext[need:]))
        for y in ext[:need]:
            values[y - r - 1] += 1
    for j in range(r + 1, k + 1):
        to_clique = sum(1 for u in g.neighbors(j) if u <= r)
        values[j - r - 1] -= r - to_clique
    return WantSequence(tuple(seq), r, k, g, tuple(base), tuple(values), tuple(W), tuple(keep))


def assemble_want_realization(want: WantSequence, h: LabeledGraph | None = None) -> LabeledGraph:
    """Realization of ``seq`` with ``K_r v K_{k-r}-bar`` on ``v_1..v_k``.

    ``h`` realizes the want sequence on ``v_{r+1}..v_n`` (labels as in the
    full graph); one is built when omitted.
    """
    n, r, k = len(want.seq), want.r, want.k
    if h is None:
        if not want.is_graphic():
            raise NotGraphicError("want sequence is not graphic")
        h = realize_degrees({j: want.value(j) for j in range(r + 1, n + 1)}, n)
    edges = set(h.edges)
    for u, v in edges:
        assert u > r and v > r, "want realization touches the clique"
    for i in range(1, r + 1):
        for j in range(i + 1, k + 1):
            edges.add((i, j))
        for y in want.keep[i - 1]:
            edges.add((i, y))
    g = LabeledGraph(n, frozenset(edges))
    if g.degrees() != want.seq:
        raise AssertionError("assembled graph has the wrong degrees")
    return g


@lru_cache(maxsize=128)
def _split_pattern(r: int, k: int) -> LabeledGraph:
    edges = {(i, j) for i in range(1, r + 1) for j in range(i + 1, k + 1)}
    return LabeledGraph(k, frozenset(edges))


# ---------------------------------------------------------------------------
# the pipeline
# ---------------------------------------------------------------------------


@dataclass
class PotentialVerdict:
    status: str
    route: str | None = None
    witness: EmbeddingWitness | None = None
    attempts: list[tuple[str, str]] = field(default_factory=list)

    @property
    def positive(self) -> bool:
        return self.status == POTENTIALLY_H

    def to_dict(self) -> dict:
        out = {
            "status": self.status,
            "route": self.route,
            "attempts": [{"route": a, "outcome": b} for a, b in self.attempts],
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        return out


def _split_map(P: PatternGraph, clique: Sequence[int], indep: Sequence[int]) -> dict[int, int]:
    """Map ``H`` into a complete split graph with the given clique and independent set."""
    assert len(indep) <= P.alpha and len(clique) + len(indep) == P.k
    I = list(P.independent_set[: len(indep)])
    rest = [u for u in P.graph.vertices if u not in I]
    vmap = {u: v for u, v in zip(I, indep)}
    vmap.update({u: v for u, v in zip(rest, clique)})
    return vmap


def _checked(seq, P: PatternGraph, host: LabeledGraph, vmap, route: str) -> EmbeddingWitness:
    w = EmbeddingWitness(host, P.graph, dict(vmap), route=route)
    if not w.verify(seq):
        raise AssertionError(f"route {route} produced an invalid witness")
    return w


def _route_li_yin(seq, P: PatternGraph):
    part = _li_yin_part(seq, P.k)
    if part is None:
        return None, "conditions fail"
    k = P.k
    Kk = complete_graph(k)
    g = embed_by_switching(realize(seq), Kk, {i: i for i in range(1, k + 1)})
    if g is None:
        return None, f"part ({part}) holds but switching did not place K_{k}"
    vmap = {u: u for u in P.graph.vertices}
    return _checked(seq, P, g, vmap, f"li_yin_{part}"), "ok"


def _want_host(seq, r: int, k: int) -> LabeledGraph | None:
    if not degree_sufficient(seq, _split_pattern(r, k))[0]:
        return None
    want = want_sequence(seq, r, k)
    if not want.is_graphic():
        return None
    return assemble_want_realization(want)


def _route_want_split(seq, P: PatternGraph):
    k = P.k
    for r in range(max(1, k - P.alpha), k):
        g = _want_host(seq, r, k)
        if g is None:
            continue
        vmap = _split_map(P, range(1, r + 1), range(r + 1, k + 1))
        return _checked(seq, P, g, vmap, "want_split"), f"r = {r}"
    return None, "no graphic want sequence"


def _route_split_plus_F(seq, P: PatternGraph):
    k, n = P.k, len(seq)
    t = sum(1 for d in seq if d >= k - 1)
    if not 1 <= t < k - P.alpha:
        return None, f"t = {t} outside 1..{k - P.alpha - 1}"
    g = _want_host(seq, t, k)
    if g is None:
        return None, "want sequence unavailable or not graphic"
    X = P.F_sets[k - t]
    F = P.graph.induced(X)
    rest = g.induced(range(t + 1, n + 1))
    # F goes onto v_{t+1}..v_k, highest degree first
    slots = sorted(range(1, k - t + 1), key=lambda v: (-rest.degree(v), v))
    fmap = {u: v for u, v in zip(sorted(F.vertices, key=lambda u: (-F.degree(u), u)), slots)}
    try:
        rest2, _ = embed_by_exchange(rest, F, fmap)
    except ExchangeFailure:
        rest2 = embed_by_switching(rest, F, fmap)
        if rest2 is None:
            return None, "could not place F on the independent side"
    edges = {e for e in g.edges if e[0] <= t}
    edges |= {(u + t, v + t) for u, v in rest2.edges}
    host = LabeledGraph(n, frozenset(edges))
    vmap = {x: fmap[i + 1] + t for i, x in enumerate(X)}
    others = [u for u in P.graph.vertices if u not in X]
    vmap.update({u: i for i, u in enumerate(others, start=1)})
    return _checked(seq, P, host, vmap, "split_plus_F"), f"t = {t}"


def _route_biclique_clique(seq, P: PatternGraph):
    k, ell = P.k, P.ell_star
    try:
        trace, w = run_layoff(seq, k, ell)
    except LayoffHypothesisError as exc:
        return None, f"layoff hypotheses fail: {exc}"
    except LayoffError as exc:
        return None, f"layoff failed: {exc}"
    A = list(range(1, k - ell + 1))
    B = trace.good_vertices[:ell]
    try:
        g = complete_set_to_clique(w.host, A, protected=B)
    except ExchangeFailure as exc:
        return None, f"clique completion failed: {exc}"
    vmap = _split_map(P, A, B)
    return _checked(seq, P, g, vmap, "biclique_clique"), "ok"


def _route_prescribed(seq, P: PatternGraph):
    try:
        w = embed_on_prescribed(seq, P.graph, list(range(1, P.k + 1)))
    except (EmbeddingHypothesisError, ExchangeFailure) as exc:
        return None, str(exc)
    return _checked(seq, P, w.host, w.vertex_map, "prescribed_embed"), "ok"


_ROUTES = (
    ("li_yin", _route_li_yin),
    ("want_split", _route_want_split),
    ("split_plus_F", _route_split_plus_F),
    ("biclique_clique", _route_biclique_clique),
    ("prescribed_embed", _route_prescribed),
)


def is_potentially_H(
    seq: Sequence[int], H, *, cap: int | None = None, jobs: int = 1, use_oracle: bool = True
) -> PotentialVerdict:
    """Decide whether some realization of ``seq`` contains ``H``.

    Constructive routes run cheapest first and every success carries a
    verified witness. Negative answers only come from exhaustive search,
    which is used when ``n`` is within the oracle cap.
    """
    seq = DegreeSequence(seq)
    if not is_graphic(seq):
        raise NotGraphicError(f"{tuple(seq)} is not graphic")
    P = as_pattern(H)
    verdict = PotentialVerdict(UNKNOWN)
    if len(seq) >= P.k:
        for name, route in _ROUTES:
            w, note = route(seq, P)
            verdict.attempts.append((name, note))
            if w is not None:
                verdict.status, verdict.route, verdict.witness = POTENTIALLY_H, w.route, w
                return verdict
    cap = oracle_cap() if cap is None else cap
    if use_oracle and len(seq) <= cap:
        found = find_potential_realization(seq, P.graph, cap=cap, jobs=jobs)
        verdict.route = "oracle"
        if found is None:
            verdict.status = NOT_POTENTIALLY_H
            verdict.attempts.append(("oracle", "no realization contains H"))
        else:
            g, vmap = found
            verdict.status = POTENTIALLY_H
            verdict.witness = _checked(seq, P, g, vmap, "oracle")
            verdict.attempts.append(("oracle", "found"))
    return verdict
