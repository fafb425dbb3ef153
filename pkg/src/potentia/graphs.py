"""Small immutable labeled simple graphs.

Vertices are ``1..n``; in a realization of ``(d_1, ..., d_n)`` vertex ``i``
carries the ``i``-th term. Edges are stored as sorted pairs ``(u, v)`` with
``u < v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

__all__ = ["LabeledGraph", "GraphFormatError", "parse_edge_list", "complete_graph",
           "cycle_graph", "path_graph", "named_graph"]


class GraphFormatError(ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LabeledGraph:
    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u}, {v}) outside 1..{self.n}")
            norm.add(_norm(u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "LabeledGraph":
        return cls(n, frozenset(edges))

    @classmethod
    def from_masks(cls, masks: list[int]) -> "LabeledGraph":
        """Build from 0-based adjacency bitmasks (``masks[u] >> v & 1``)."""
        n = len(masks)
        edges = set()
        for u in range(n):
            m = masks[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    edges.add((u + 1, v + 1))
                m >>= 1
                v += 1
        return cls(n, frozenset(edges))

    @cached_property
    def _adj(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """0-based adjacency bitmasks."""
        out = [0] * self.n
        for u, v in self.edges:
            out[u - 1] |= 1 << (v - 1)
            out[v - 1] |= 1 << (u - 1)
        return tuple(out)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        """Degrees of vertices ``1..n`` in label order."""
        return tuple(len(self._adj[v]) for v in self.vertices)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees(), reverse=True))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edit(self, add: Iterable[tuple[int, int]] = (), remove: Iterable[tuple[int, int]] = ()) -> "LabeledGraph":
        edges = set(self.edges)
        for e in remove:
            e = _norm(*e)
            if e not in edges:
                raise ValueError(f"cannot remove missing edge {e}")
            edges.discard(e)
        for e in add:
            e = _norm(*e)
            if e in edges:
                raise ValueError(f"cannot add existing edge {e}")
            edges.add(e)
        return LabeledGraph(self.n, frozenset(edges))

    def induced(self, vertices: Iterable[int]) -> "LabeledGraph":
        """Induced subgraph, relabeled ``1..len(vertices)`` in the given order."""
        vs = list(vertices)
        pos = {v: i + 1 for i, v in enumerate(vs)}
        return LabeledGraph(
            len(vs),
            frozenset((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos),
        )

    def relabel(self, mapping: Mapping[int, int], n: int | None = None) -> "LabeledGraph":
        return LabeledGraph(
            self.n if n is None else n,
            frozenset(_norm(mapping[u], mapping[v]) for u, v in self.edges),
        )

    def distances_from(self, source: int) -> dict[int, int]:
        dist = {source: 0}
        frontier = [source]
        while frontier:
            nxt = []
            for u in frontier:
                for w in self._adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        return dist

    def to_edge_list(self) -> str:
        lines = [f"n {self.n}"]
        lines += [f"{u} {v}" for u, v in sorted(self.edges)]
        return "\n".join(lines) + "\n"

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"LabeledGraph(n={self.n}, edges={self.sorted_edges()})"


def parse_edge_list(text: str) -> LabeledGraph:
    """Parse ``n <count>`` then ``u v`` lines (1-based); ``#`` starts a comment."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise GraphFormatError("expected header 'n <count>'", lineno)
            n = int(parts[1])
            continue
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if not (1 <= u <= n and 1 <= v <= n) or u == v:
            raise GraphFormatError(f"bad edge {u} {v} for n = {n}", lineno)
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing header 'n <count>'")
    return LabeledGraph(n, frozenset(edges))


def complete_graph(k: int) -> LabeledGraph:
    return LabeledGraph(k, frozenset((u, v) for u in range(1, k + 1) for v in range(u + 1, k + 1)))


def cycle_graph(k: int) -> LabeledGraph:
    return LabeledGraph(k, frozenset(_norm(i, i % k + 1) for i in range(1, k + 1)))


def path_graph(k: int) -> LabeledGraph:
    return LabeledGraph(k, frozenset((i, i + 1) for i in range(1, k)))


def named_graph(name: str) -> LabeledGraph:
    """``K3``, ``P4``, ``C5``, ``paw``, ``K3vE2`` (join of K3 and 2 isolated) ..."""
    key = name.strip()
    if key.lower() == "paw":
        return LabeledGraph(4, frozenset({(1, 2), (1, 3), (2, 3), (1, 4)}))
    kind, rest = key[0].upper(), key[1:]
    if kind == "K" and "v" in rest:
        a, b = rest.lower().split("ve")
        a, b = int(a), int(b)
        edges = {(u, v) for u in range(1, a + 1) for v in range(u + 1, a + b + 1)}
        return LabeledGraph(a + b, frozenset(edges))
    if not rest.isdigit():
        raise ValueError(f"unknown graph name {name!r}")
    k = int(rest)
    if kind == "K":
        return complete_graph(k)
    if kind == "C":
        return cycle_graph(k)
    if kind == "P":
        return path_graph(k)
    raise ValueError(f"unknown graph name {name!r}")
