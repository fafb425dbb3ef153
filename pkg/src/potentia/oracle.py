"""Exhaustive ground truth at desk scale.

Realizations are enumerated vertex by vertex: the whole neighborhood of the
lowest unfinished vertex is chosen among later vertices, after which the
remaining vertices form an independent subproblem. With Erdős–Gallai
pruning on that subproblem every branch ends in a realization, so the cost
is proportional to the output.

Internally graphs are lists of 0-based adjacency bitmasks; the public
functions hand out :class:`~potentia.graphs.LabeledGraph` objects.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .graphs import LabeledGraph
from .seqcore import is_graphic

__all__ = [
    "OracleCapError",
    "oracle_cap",
    "enumerate_realizations",
    "count_realizations",
    "brute_force_realizable",
    "contains_subgraph",
    "find_subgraph",
    "oracle_potentially_H",
    "find_potential_realization",
    "graphic_sequences",
    "exact_sigma",
    "sigma_scan",
    "SigmaScan",
]

DEFAULT_ORACLE_CAP = 10
DEFAULT_SIGMA_CAP = 8


class OracleCapError(ValueError):
    """Instance too large for exhaustive search."""


def oracle_cap() -> int:
    """Vertex cap for enumeration; ``POTENTIA_ORACLE_CAP`` overrides it."""
    raw = os.environ.get("POTENTIA_ORACLE_CAP")
    return int(raw) if raw else DEFAULT_ORACLE_CAP


def _check_cap(n: int, cap: int | None) -> None:
    cap = oracle_cap() if cap is None else cap
    if n > cap:
        raise OracleCapError(f"n = {n} exceeds oracle cap {cap}")


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def _residual_ok(res: list[int], start: int, prune: str) -> bool:
    rest = res[start:]
    if prune == "eg":
        return is_graphic(sorted(rest, reverse=True))
    # local feasibility only; no graphicality theory involved
    m = len(rest)
    return sum(rest) % 2 == 0 and all(0 <= x <= m - 1 for x in rest)


def _choices(res: list[int], i: int) -> list[tuple[int, ...]]:
    n = len(res)
    cands = [j for j in range(i + 1, n) if res[j] > 0]
    # highest remaining demand first, natural order on ties
    cands.sort(key=lambda j: (-res[j], j))
    need = res[i]
    if need > len(cands):
        return []
    return list(combinations(cands, need))


def _walk(res: list[int], masks: list[int], i: int, prune: str) -> Iterator[tuple[int, ...]]:
    n = len(res)
    while i < n and res[i] == 0:
        i += 1
    if i == n:
        yield tuple(masks)
        return
    for combo in _choices(res, i):
        new = res[:]
        new[i] = 0
        for j in combo:
            new[j] -= 1
        if not _residual_ok(new, i + 1, prune):
            continue
        saved = masks[:]
        for j in combo:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        yield from _walk(new, masks, i + 1, prune)
        masks[:] = saved


def _branch(args) -> list[tuple[int, ...]]:
    degrees, combo, prune = args
    n = len(degrees)
    res = list(degrees)
    masks = [0] * n
    i = next((v for v in range(n) if res[v] > 0), n)
    res[i] = 0
    for j in combo:
        res[j] -= 1
        masks[i] |= 1 << j
        masks[j] |= 1 << i
    if not _residual_ok(res, i + 1, prune):
        return []
    return list(_walk(res, masks, i + 1, prune))


def _enumerate_masks(
    degrees: Sequence[int], *, prune: str = "eg", jobs: int = 1
) -> Iterator[tuple[int, ...]]:
    degrees = list(degrees)
    n = len(degrees)
    if any(d < 0 for d in degrees) or sum(degrees) % 2:
        return
    if jobs <= 1 or not any(degrees):
        yield from _walk(degrees, [0] * n, 0, prune)
        return
    first = next(v for v in range(n) if degrees[v] > 0)
    branches = [(tuple(degrees), combo, prune) for combo in _choices(degrees, first)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for chunk in pool.map(_branch, branches):
            yield from chunk


def enumerate_realizations(
    seq: Sequence[int], *, cap: int | None = None, jobs: int = 1
) -> Iterator[LabeledGraph]:
    """Every labeled simple graph with ``degree(v_i) = d_i``, each exactly once.

    The order is canonical and does not depend on ``jobs``.
    """
    _check_cap(len(seq), cap)
    for masks in _enumerate_masks(seq, jobs=jobs):
        yield LabeledGraph.from_masks(list(masks))


def count_realizations(seq: Sequence[int], *, cap: int | None = None, jobs: int = 1) -> int:
    _check_cap(len(seq), cap)
    return sum(1 for _ in _enumerate_masks(seq, jobs=jobs))


def brute_force_realizable(seq: Sequence[int]) -> bool:
    """Search for a realization using only local feasibility pruning.

    Deliberately independent of the Erdős–Gallai test so the two can be
    checked against each other.
    """
    for _ in _enumerate_masks(seq, prune="local"):
        return True
    return False


# ---------------------------------------------------------------------------
# subgraph containment
# ---------------------------------------------------------------------------


def _search_order(pat: Sequence[int]) -> list[int]:
    k = len(pat)
    deg = [m.bit_count() for m in pat]
    order: list[int] = []
    placed = 0
    remaining = set(range(k))
    while remaining:
        u = max(remaining, key=lambda v: ((pat[v] & placed).bit_count(), deg[v], -v))
        order.append(u)
        placed |= 1 << u
        remaining.discard(u)
    return order


def _find_masks(host: Sequence[int], pat: Sequence[int]) -> list[int] | None:
    n, k = len(host), len(pat)
    if k > n:
        return None
    hdeg = [m.bit_count() for m in host]
    pdeg = [m.bit_count() for m in pat]
    order = _search_order(pat)
    pos = {u: t for t, u in enumerate(order)}
    earlier = [[w for w in range(k) if pat[u] >> w & 1 and pos[w] < t] for t, u in enumerate(order)]
    full = (1 << n) - 1
    mapping = [-1] * k

    def bt(t: int, used: int) -> bool:
        if t == k:
            return True
        u = order[t]
        cand = full & ~used
        for w in earlier[t]:
            cand &= host[mapping[w]]
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            if hdeg[v] < pdeg[u]:
                continue
            mapping[u] = v
            if bt(t + 1, used | low):
                return True
        mapping[u] = -1
        return False

    return mapping[:] if bt(0, 0) else None


def _pattern_graph(H) -> LabeledGraph:
    # PatternGraph wraps a LabeledGraph; accept either
    return getattr(H, "graph", H)


def find_subgraph(g: LabeledGraph, H) -> dict[int, int] | None:
    """Injective map ``V(H) -> V(g)`` carrying every H-edge to a g-edge, or None."""
    H = _pattern_graph(H)
    found = _find_masks(g.masks, H.masks)
    if found is None:
        return None
    return {u + 1: v + 1 for u, v in enumerate(found)}


def contains_subgraph(g: LabeledGraph, H) -> bool:
    """Subgraph (not induced) containment."""
    return find_subgraph(g, H) is not None


# ---------------------------------------------------------------------------
# potential H-graphicity
# ---------------------------------------------------------------------------


def _degree_sufficient(seq: Sequence[int], H: LabeledGraph) -> bool:
    s = sorted(seq, reverse=True)
    h = H.degree_sequence()
    return len(s) >= len(h) and all(x >= y for x, y in zip(s, h))


def find_potential_realization(
    seq: Sequence[int], H, *, cap: int | None = None, jobs: int = 1
) -> tuple[LabeledGraph, dict[int, int]] | None:
    """First enumerated realization of ``seq`` containing ``H`` (with the map)."""
    H = _pattern_graph(H)
    _check_cap(len(seq), cap)
    if not _degree_sufficient(seq, H):
        # every realization lacks vertices of high enough degree
        return None
    pat = H.masks
    for masks in _enumerate_masks(seq, jobs=jobs):
        found = _find_masks(masks, pat)
        if found is not None:
            g = LabeledGraph.from_masks(list(masks))
            return g, {u + 1: v + 1 for u, v in enumerate(found)}
    return None


def oracle_potentially_H(seq: Sequence[int], H, *, cap: int | None = None, jobs: int = 1) -> bool:
    """True iff some realization of ``seq`` contains ``H`` as a subgraph."""
    return find_potential_realization(seq, H, cap=cap, jobs=jobs) is not None


# ---------------------------------------------------------------------------
# exact potential number
# ---------------------------------------------------------------------------


def graphic_sequences(n: int, *, min_term: int = 0, max_term: int | None = None) -> Iterator[tuple[int, ...]]:
    """All nonincreasing graphic sequences of length ``n`` in lexicographic order."""
    top = n - 1 if max_term is None else min(max_term, n - 1)
    if n == 0:
        yield ()
        return

    def rec(prefix: list[int], hi: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            if is_graphic(prefix):
                yield tuple(prefix)
            return
        for v in range(hi, min_term - 1, -1):
            prefix.append(v)
            yield from rec(prefix, v)
            prefix.pop()

    yield from rec([], top)


@dataclass
class SigmaScan:
    """Outcome of an exhaustive potential-number computation."""

    n: int
    value: int
    min_term: int
    checked: int = 0
    failures: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def max_failure_sum(self) -> int:
        return max((sum(s) for s in self.failures), default=0)


def sigma_scan(
    H, n: int, *, min_term: int = 0, cap: int | None = None, jobs: int = 1
) -> SigmaScan:
    """Classify every graphic sequence of length ``n``; see :func:`exact_sigma`."""
    cap = DEFAULT_SIGMA_CAP if cap is None else cap
    if n > cap:
        raise OracleCapError(f"n = {n} exceeds sigma cap {cap}")
    H = _pattern_graph(H)
    scan = SigmaScan(n=n, value=0, min_term=min_term)
    for seq in graphic_sequences(n, min_term=min_term):
        scan.checked += 1
        if not oracle_potentially_H(seq, H, cap=max(cap, n), jobs=jobs):
            scan.failures.append(seq)
    scan.value = scan.max_failure_sum + 2
    # every sequence at or above the returned value must be potentially H-graphic
    assert all(sum(s) < scan.value for s in scan.failures)
    assert scan.value % 2 == 0
    return scan


def exact_sigma(H, n: int, *, min_term: int = 0, cap: int | None = None, jobs: int = 1) -> int:
    """Least even ``s`` such that every n-term graphic sequence with sum >= s
    is potentially H-graphic.

    ``min_term=1`` restricts the universe to sequences without zero terms.
    """
    return sigma_scan(H, n, min_term=min_term, cap=cap, jobs=jobs).value
