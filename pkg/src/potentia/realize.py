"""Constructing and transforming realizations.

Everything here returns new :class:`LabeledGraph` values; inputs are never
modified. Vertex ``i`` of a realization carries the ``i``-th term of the
sequence it realizes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Mapping, NamedTuple, Sequence

from .graphs import LabeledGraph
from .seqcore import DegreeSequence, is_graphic

__all__ = [
    "NotGraphicError",
    "SwitchError",
    "EmbeddingHypothesisError",
    "ExchangeFailure",
    "EmbeddingWitness",
    "KWResidual",
    "ObjectiveRealization",
    "kleitman_wang_layoff",
    "realize",
    "realize_degrees",
    "two_switch",
    "embed_on_prescribed",
    "embed_by_exchange",
    "embed_by_switching",
    "split_objective",
    "max_split_objective_realization",
    "complete_set_to_clique",
]

DEFAULT_EXHAUSTIVE_CAP = 8


class NotGraphicError(ValueError):
    pass


class SwitchError(ValueError):
    pass


class EmbeddingHypothesisError(ValueError):
    """A hypothesis needed to embed onto prescribed vertices fails."""


class ExchangeFailure(RuntimeError):
    """No improving exchange exists where the argument says one must."""


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class EmbeddingWitness:
    """A host graph together with a copy of a pattern inside it."""

    host: LabeledGraph
    pattern: LabeledGraph
    vertex_map: Mapping[int, int]
    route: str = ""

    def verify(self, seq: Sequence[int] | None = None) -> bool:
        """Check injectivity, edge containment and (optionally) host degrees."""
        vm = dict(self.vertex_map)
        if set(vm) != set(self.pattern.vertices):
            return False
        if len(set(vm.values())) != len(vm):
            return False
        if not all(1 <= v <= self.host.n for v in vm.values()):
            return False
        if not all(self.host.has_edge(vm[u], vm[v]) for u, v in self.pattern.edges):
            return False
        if seq is not None and self.host.degrees() != tuple(seq):
            return False
        return True

    def to_dict(self) -> dict:
        return {
            "sequence": list(self.host.degrees()),
            "edges": [list(e) for e in self.host.sorted_edges()],
            "pattern_edges": [list(e) for e in self.pattern.sorted_edges()],
            "pattern_map": {str(u): v for u, v in sorted(self.vertex_map.items())},
            "route": self.route,
        }


# ---------------------------------------------------------------------------
# Kleitman–Wang
# ---------------------------------------------------------------------------


class KWResidual(NamedTuple):
    raw: tuple[int, ...]
    residual: tuple[int, ...]


def kleitman_wang_layoff(seq: Sequence[int], i: int) -> KWResidual:
    """Lay off the term at 1-based position ``i``.

    ``raw`` follows the two-case formula term by term; ``residual`` is the
    same multiset sorted nonincreasing.
    """
    d = tuple(seq)
    n = len(d)
    if not 1 <= i <= n:
        raise ValueError(f"position {i} outside 1..{n}")
    di = d[i - 1]
    if di < i:
        raw = (
            tuple(x - 1 for x in d[:di])
            + d[di : i - 1]
            + d[i:]
        )
    else:
        raw = (
            tuple(x - 1 for x in d[: i - 1])
            + tuple(x - 1 for x in d[i : di + 1])
            + d[di + 1 :]
        )
    return KWResidual(raw, tuple(sorted(raw, reverse=True)))


def realize_degrees(degrees: Mapping[int, int], n: int) -> LabeledGraph:
    """Realize a vertex -> degree assignment on vertices ``1..n``.

    Vertices missing from ``degrees`` get degree 0. Repeatedly lays off the
    last vertex in (degree desc, label asc) order and joins it to the first
    vertices in that order.
    """
    res = {v: 0 for v in range(1, n + 1)}
    for v, d in degrees.items():
        res[v] = d
    if not is_graphic(sorted(res.values(), reverse=True)):
        raise NotGraphicError(f"degree assignment {dict(sorted(degrees.items()))} is not graphic")
    active = [v for v in res if res[v] > 0]
    edges = set()
    while active:
        active.sort(key=lambda v: (-res[v], v))
        v = active.pop()
        need = res[v]
        res[v] = 0
        if need > len(active):
            raise NotGraphicError("ran out of neighbors")
        for w in active[:need]:
            res[w] -= 1
            edges.add(_norm(v, w))
        active = [w for w in active if res[w] > 0]
    return LabeledGraph(n, frozenset(edges))


def realize(seq: Sequence[int]) -> LabeledGraph:
    """Deterministic realization of a graphic sequence (vertex ``i`` gets ``d_i``)."""
    seq = DegreeSequence(seq) if not isinstance(seq, DegreeSequence) else seq
    if not is_graphic(seq):
        raise NotGraphicError(f"{tuple(seq)} is not graphic")
    return realize_degrees({i + 1: d for i, d in enumerate(seq)}, len(seq))


# ---------------------------------------------------------------------------
# 2-switch
# ---------------------------------------------------------------------------


def two_switch(g: LabeledGraph, x1: int, y1: int, x2: int, y2: int) -> LabeledGraph:
    """Replace edges ``x1y1, x2y2`` by ``x1x2, y1y2``."""
    if len({x1, y1, x2, y2}) != 4:
        raise SwitchError(f"vertices {x1}, {y1}, {x2}, {y2} are not distinct")
    for u, v, want in ((x1, y1, True), (x2, y2, True), (x1, x2, False), (y1, y2, False)):
        if g.has_edge(u, v) != want:
            kind = "an edge" if want else "a non-edge"
            raise SwitchError(f"pair {u}{v} must be {kind}")
    return g.edit(add=[(x1, x2), (y1, y2)], remove=[(x1, y1), (x2, y2)])


# ---------------------------------------------------------------------------
# prescribed-vertex embedding
# ---------------------------------------------------------------------------


def _pattern_order(H: LabeledGraph) -> list[int]:
    """Pattern vertices in nonincreasing degree order, label order on ties."""
    return sorted(H.vertices, key=lambda u: (-H.degree(u), u))


def _target_edges(H: LabeledGraph, vertex_map: Mapping[int, int]) -> set[tuple[int, int]]:
    return {_norm(vertex_map[u], vertex_map[v]) for u, v in H.edges}


def _three_edge_exchange(
    g: LabeledGraph, target: set[tuple[int, int]], vi: int, vj: int, S: set[int]
) -> LabeledGraph | None:
    """Trade ``vi ai, vj aj, wx`` for ``vi vj, ai w, aj x``.

    ``ai``/``aj`` are neighbors reached by non-target edges and ``w`` is the
    lowest-labeled vertex outside ``S`` with a neighbor, at distance >= 3
    from both. Returns None when no such configuration exists.
    """
    ai_opts = sorted(a for a in g.neighbors(vi) if _norm(vi, a) not in target)
    aj_opts = sorted(a for a in g.neighbors(vj) if _norm(vj, a) not in target)
    for ai in ai_opts:
        near_i = {v for v, d in g.distances_from(ai).items() if d <= 2}
        for aj in aj_opts:
            near_j = {v for v, d in g.distances_from(aj).items() if d <= 2}
            for w in g.vertices:
                if w in S or w in near_i or w in near_j or not g.neighbors(w):
                    continue
                x = min(g.neighbors(w))
                return g.edit(
                    add=[(vi, vj), (ai, w), (aj, x)],
                    remove=[(vi, ai), (vj, aj), (w, x)],
                )
    return None


def _two_switch_gain(
    g: LabeledGraph, target: set[tuple[int, int]], u: int, v: int
) -> LabeledGraph | None:
    """A 2-switch adding the missing target edge ``uv`` without losing another."""
    for x in sorted(g.neighbors(u)):
        if x == v or _norm(u, x) in target:
            continue
        for y in sorted(g.neighbors(v)):
            if y in (u, x) or _norm(v, y) in target or g.has_edge(x, y):
                continue
            return two_switch(g, u, x, v, y)
    return None


def embed_by_exchange(
    g: LabeledGraph, H: LabeledGraph, vertex_map: Mapping[int, int]
) -> tuple[LabeledGraph, int]:
    """Pull the mapped copy of ``H`` into ``g`` with three-edge exchanges.

    Each exchange adds one missing pattern edge and removes none, so at most
    ``|E(H)|`` exchanges happen. Returns the graph and the exchange count;
    raises :class:`ExchangeFailure` if an exchange cannot be found.
    """
    target = _target_edges(H, vertex_map)
    S = set(vertex_map.values())
    steps = 0
    while True:
        missing = sorted(e for e in target if not g.has_edge(*e))
        if not missing:
            return g, steps
        before = len(target) - len(missing)
        vi, vj = missing[0]
        nxt = _three_edge_exchange(g, target, vi, vj, S)
        if nxt is None:
            raise ExchangeFailure(f"no exchange available for missing pattern edge {vi}{vj}")
        g = nxt
        steps += 1
        after = sum(1 for e in target if g.has_edge(*e))
        assert after > before, "exchange did not increase the pattern overlap"
        assert steps <= len(H.edges), "exchange loop exceeded |E(H)| iterations"


def embed_by_switching(
    g: LabeledGraph, H: LabeledGraph, vertex_map: Mapping[int, int]
) -> LabeledGraph | None:
    """Best-effort variant of :func:`embed_by_exchange` for any host.

    Tries a plain 2-switch first, then the three-edge exchange, for each
    missing pattern edge. Returns None when stuck instead of raising.
    """
    target = _target_edges(H, vertex_map)
    S = set(vertex_map.values())
    while True:
        missing = sorted(e for e in target if not g.has_edge(*e))
        if not missing:
            return g
        nxt = None
        for u, v in missing:
            nxt = _two_switch_gain(g, target, u, v) or _two_switch_gain(g, target, v, u)
            if nxt is None:
                nxt = _three_edge_exchange(g, target, u, v, S)
            if nxt is not None:
                break
        if nxt is None:
            return None
        g = nxt


def embed_on_prescribed(seq: Sequence[int], pattern, indices: Sequence[int]) -> EmbeddingWitness:
    """Realize ``seq`` with a copy of ``pattern`` on the given positions.

    ``indices[j]`` hosts the ``j``-th pattern vertex in nonincreasing degree
    order. Requires ``d_{indices[j]} >= h_j`` and at least ``2 M^2 + k``
    positive terms, where ``M = d_1``.
    """
    H: LabeledGraph = getattr(pattern, "graph", pattern)
    seq = DegreeSequence(seq)
    k, n = H.n, len(seq)
    if len(indices) != k or len(set(indices)) != k:
        raise EmbeddingHypothesisError(f"need {k} distinct positions, got {list(indices)}")
    if not all(1 <= i <= n for i in indices):
        raise EmbeddingHypothesisError(f"positions {list(indices)} outside 1..{n}")
    order = _pattern_order(H)
    for j, (u, i) in enumerate(zip(order, indices), start=1):
        if seq.d(i) < H.degree(u):
            raise EmbeddingHypothesisError(
                f"degree hypothesis fails: d_{i} = {seq.d(i)} < h_{j} = {H.degree(u)}"
            )
    M = seq[0] if n else 0
    if seq.positive_count < 2 * M * M + k:
        raise EmbeddingHypothesisError(
            f"length hypothesis fails: {seq.positive_count} positive terms < 2M^2 + k = {2 * M * M + k}"
        )
    if not is_graphic(seq):
        raise NotGraphicError(f"{tuple(seq)} is not graphic")
    vertex_map = {u: i for u, i in zip(order, indices)}
    g, _ = embed_by_exchange(realize(seq), H, vertex_map)
    return EmbeddingWitness(g, H, vertex_map, route="prescribed_embed")


# ---------------------------------------------------------------------------
# want-sequence objective
# ---------------------------------------------------------------------------


def split_objective(g: LabeledGraph, r: int, k: int) -> int:
    """Edges inside ``v_1..v_r`` plus edges from there to ``v_{r+1}..v_k``."""
    total = 0
    for u, v in g.edges:
        if u <= r and v <= k:
            total += 1
    return total


@dataclass(frozen=True)
class ObjectiveRealization:
    graph: LabeledGraph
    objective: int
    heuristic: bool


def _count_vectors(sizes: list[int], total: int) -> Iterable[tuple[int, ...]]:
    if not sizes:
        if total == 0:
            yield ()
        return
    head, rest = sizes[0], sizes[1:]
    for c in range(min(head, total), -1, -1):
        for tail in _count_vectors(rest, total - c):
            yield (c,) + tail


def _exact_split(seq: Sequence[int], r: int, k: int) -> ObjectiveRealization:
    n = len(seq)
    ceiling = r * (r - 1) // 2 + r * (k - r)
    best: list = [-1, None, None]

    def zone(j: int) -> int:
        return 0 if j < r else (1 if j < k else 2)

    def rec(i: int, res: list[int], edges: list[tuple[int, int]], obj: int) -> None:
        if best[0] == ceiling:
            return
        if i == r:
            if obj > best[0]:
                best[0], best[1], best[2] = obj, list(edges), res[:]
            return
        # optimistic: every later first-r vertex fills up with inner neighbors
        slack = sum(min(res[t], (r - t - 1) + (k - r)) for t in range(i + 1, r))
        if obj + min(res[i], (r - i - 1) + (k - r)) + slack <= best[0]:
            return
        groups: dict[tuple[int, int], list[int]] = {}
        for j in range(i + 1, n):
            if res[j] > 0:
                groups.setdefault((zone(j), -res[j]), []).append(j)
        keys = sorted(groups)
        sizes = [len(groups[key]) for key in keys]
        for counts in _count_vectors(sizes, res[i]):
            combo = [v for key, c in zip(keys, counts) for v in groups[key][:c]]
            new = res[:]
            new[i] = 0
            for j in combo:
                new[j] -= 1
            if not is_graphic(sorted(new[i + 1 :], reverse=True)):
                continue
            gain = sum(1 for j in combo if j < k)
            rec(i + 1, new, edges + [(i + 1, j + 1) for j in combo], obj + gain)

    rec(0, list(seq), [], 0)
    if best[1] is None:
        raise NotGraphicError(f"{tuple(seq)} is not graphic")
    rest = realize_degrees({j + 1: best[2][j] for j in range(r, n)}, n)
    g = LabeledGraph(n, frozenset(best[1]) | rest.edges)
    return ObjectiveRealization(g, split_objective(g, r, k), heuristic=False)


def _hill_climb_split(seq: Sequence[int], r: int, k: int) -> ObjectiveRealization:
    g = realize(seq)
    obj = split_objective(g, r, k)

    def score(e: tuple[int, int]) -> int:
        u, v = e
        return 1 if (u <= r and v <= k) or (v <= r and u <= k) else 0

    while True:
        best_delta, best_switch = 0, None
        edges = g.sorted_edges()
        for (a, b), (c, d) in combinations(edges, 2):
            if len({a, b, c, d}) < 4:
                continue
            lost = score((a, b)) + score((c, d))
            for p, q in (((a, c), (b, d)), ((a, d), (b, c))):
                if g.has_edge(*p) or g.has_edge(*q):
                    continue
                delta = score(_norm(*p)) + score(_norm(*q)) - lost
                if delta > best_delta:
                    best_delta, best_switch = delta, ((a, b), (c, d), p, q)
        if best_switch is None:
            return ObjectiveRealization(g, obj, heuristic=True)
        e1, e2, p, q = best_switch
        g = g.edit(add=[p, q], remove=[e1, e2])
        obj += best_delta


def max_split_objective_realization(
    seq: Sequence[int], r: int, k: int, *, exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP
) -> ObjectiveRealization:
    """Realization maximizing :func:`split_objective`.

    Exact for ``n <= exhaustive_cap`` (branching over the neighborhoods of
    ``v_1..v_r`` up to interchangeable vertices); otherwise steepest-ascent
    2-switching from :func:`realize`, flagged ``heuristic``.
    """
    seq = DegreeSequence(seq)
    if not 0 < r < k <= len(seq):
        raise ValueError(f"need 0 < r < k <= n, got r={r}, k={k}, n={len(seq)}")
    if not is_graphic(seq):
        raise NotGraphicError(f"{tuple(seq)} is not graphic")
    if len(seq) <= exhaustive_cap:
        return _exact_split(seq, r, k)
    return _hill_climb_split(seq, r, k)


# ---------------------------------------------------------------------------
# clique completion
# ---------------------------------------------------------------------------


def complete_set_to_clique(
    g: LabeledGraph,
    S: Iterable[int],
    *,
    protected: Iterable[int] = (),
    min_outside_neighbors: int | None = None,
) -> LabeledGraph:
    """Make ``S`` a clique by 2-switches through vertices outside ``S ∪ protected``.

    For each nonadjacent ``u, v`` in ``S`` pick ``x ~ u`` and ``y ~ v`` outside,
    ``x != y`` and ``xy`` a non-edge (lowest labels first), and switch
    ``ux, vy`` for ``uv, xy``. ``min_outside_neighbors`` optionally checks the
    starting hypothesis on outside neighbors.
    """
    S = sorted(set(S))
    blocked = set(S) | set(protected)
    outside = [v for v in g.vertices if v not in blocked]
    if min_outside_neighbors is not None:
        for v in S:
            have = len(g.neighbors(v) - blocked)
            if have < min_outside_neighbors:
                raise ValueError(
                    f"vertex {v} has {have} outside neighbors < {min_outside_neighbors}"
                )
    for u, v in combinations(S, 2):
        if g.has_edge(u, v):
            continue
        done = False
        for x, y in product(outside, outside):
            if x == y or not g.has_edge(u, x) or not g.has_edge(v, y) or g.has_edge(x, y):
                continue
            g = two_switch(g, u, x, v, y)
            done = True
            break
        if not done:
            raise ExchangeFailure(f"no exchange pair for nonadjacent {u}, {v}")
    return g
