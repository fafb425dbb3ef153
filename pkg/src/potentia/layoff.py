"""The Laying-off Algorithm: iterated Kleitman–Wang with vertex tracking.

Vertices ``v_1..v_n`` carry the terms of a nonincreasing sequence. At each
step a vertex whose remaining degree lies in the window ``{k-r, ..., k-1}``
is laid off and assigned a neighborhood ``N_p`` among the active vertices.
A neighborhood is *good* when it contains all of ``v_1..v_{k-r}``; ``r``
good neighborhoods give a ``K_{k-r,r}`` whose part of order ``k - r`` is
``v_1..v_{k-r}``.

With ``check_claims=True`` the structural facts that make the algorithm
terminate quickly (remaining-degree gaps, eligible-set size, proper form of
the vertex order, shrinking inconsistency) are asserted at every step and
a violation raises :class:`LayoffClaimError`.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterator, Sequence

from .graphs import LabeledGraph
from .realize import EmbeddingWitness, kleitman_wang_layoff, realize_degrees
from .seqcore import DegreeSequence, is_graphic

__all__ = [
    "LayoffError",
    "LayoffClaimError",
    "LayoffHypothesisError",
    "LayoffState",
    "LayoffStep",
    "LayoffTrace",
    "ProperFormPartition",
    "initial_state",
    "select_layoff_vertex",
    "choose_Np",
    "proper_form",
    "advance",
    "laying_off",
    "check_hypotheses",
    "run_layoff",
    "complete_bipartite",
]


class LayoffError(RuntimeError):
    pass


class LayoffClaimError(LayoffError):
    """A structural claim about the algorithm failed at runtime."""


class LayoffHypothesisError(ValueError):
    pass


@dataclass(frozen=True)
class ProperFormPartition:
    tau1: tuple[int, ...]
    tau2: tuple[int, ...]
    tau3: tuple[int, ...]
    tau4: tuple[int, ...]

    @property
    def inconsistency(self) -> int:
        return len(self.tau2) + len(self.tau3)

    @property
    def consistent(self) -> bool:
        return self.inconsistency == 0


@dataclass(frozen=True)
class LayoffState:
    """Snapshot after ``p`` vertices have been laid off.

    ``remaining[v - 1]`` is the remaining degree of ``v``; a laid-off vertex
    keeps the value it had when it was laid off.
    """

    seq: tuple[int, ...]
    k: int
    r: int
    p: int
    remaining: tuple[int, ...]
    active: frozenset[int]
    neighborhoods: tuple[tuple[int, ...], ...] = ()
    laid_off: tuple[int, ...] = ()

    def d_hat(self, v: int) -> int:
        return self.remaining[v - 1]

    @property
    def order(self) -> tuple[int, ...]:
        """Active vertices by remaining degree (desc), natural order on ties."""
        return tuple(sorted(self.active, key=lambda v: (-self.remaining[v - 1], v)))

    @property
    def residual(self) -> tuple[int, ...]:
        return tuple(self.remaining[v - 1] for v in self.order)

    @property
    def eligible(self) -> frozenset[int]:
        lo, hi = self.k - self.r, self.k - 1
        return frozenset(v for v in self.active if lo <= self.remaining[v - 1] <= hi)

    def is_good(self, neighborhood) -> bool:
        return set(range(1, self.k - self.r + 1)) <= set(neighborhood)


@dataclass(frozen=True)
class LayoffStep:
    p: int
    laid_off: int
    ell: int
    neighborhood: tuple[int, ...]
    case: int
    good: bool
    order: tuple[int, ...]
    residual: tuple[int, ...]
    partition: ProperFormPartition | None
    good_count: int

    @property
    def inconsistency(self) -> int | None:
        return None if self.partition is None else self.partition.inconsistency


@dataclass
class LayoffTrace:
    seq: tuple[int, ...]
    k: int
    r: int
    steps: list[LayoffStep] = field(default_factory=list)
    claim4_events: list[int] = field(default_factory=list)

    @property
    def good_count(self) -> int:
        return sum(1 for s in self.steps if s.good)

    @property
    def good_vertices(self) -> list[int]:
        return [s.laid_off for s in self.steps if s.good]

    def table(self) -> str:
        rows = ["step  laid_off  ell  N_p                       inconsistency  good"]
        for s in self.steps:
            nbh = "{" + ",".join(f"v{v}" for v in s.neighborhood) + "}"
            inc = "-" if s.inconsistency is None else str(s.inconsistency)
            rows.append(
                f"{s.p:>4}  v{s.laid_off:<7}  {s.ell:>3}  {nbh:<24}  {inc:>13}  {'yes' if s.good else 'no'}"
            )
        return "\n".join(rows)

    def to_dict(self) -> dict:
        return {
            "sequence": list(self.seq),
            "k": self.k,
            "r": self.r,
            "steps": [
                {
                    "p": s.p,
                    "laid_off": s.laid_off,
                    "ell": s.ell,
                    "neighborhood": list(s.neighborhood),
                    "case": s.case,
                    "good": s.good,
                    "residual": list(s.residual),
                    "order": list(s.order),
                    "inconsistency": s.inconsistency,
                }
                for s in self.steps
            ],
            "good_count": self.good_count,
        }


def initial_state(seq: Sequence[int], k: int, r: int) -> LayoffState:
    seq = tuple(DegreeSequence(seq))
    if not 0 < r < k:
        raise ValueError(f"need 0 < r < k, got r={r}, k={k}")
    return LayoffState(seq, k, r, 0, seq, frozenset(range(1, len(seq) + 1)))


def _consistent(order: Sequence[int]) -> bool:
    return all(order[i] < order[i + 1] for i in range(len(order) - 1))


def select_layoff_vertex(state: LayoffState) -> int:
    """Eligible vertex of least remaining degree; highest index on ties."""
    S = state.eligible
    if not S:
        raise LayoffError("eligible set exhausted")
    return max(S, key=lambda v: (-state.remaining[v - 1], v))


def choose_Np(state: LayoffState, a: int) -> tuple[tuple[int, ...], int]:
    """Neighborhood assigned to the laid-off vertex ``a`` and the rule used (1-3).

    1. order consistent: the first ``ell`` vertices of the order without ``a``;
    2. inconsistent but a strict drop after position ``ell``: same;
    3. inconsistent with a tie across position ``ell``: every vertex above the
       tied value plus the highest-index vertices carrying it.
    """
    rem = state.remaining
    ell = rem[a - 1]
    order = state.order
    rest = [v for v in order if v != a]
    if ell > len(rest):
        raise LayoffError(f"remaining degree {ell} of v{a} exceeds active vertex count")
    if _consistent(order):
        return tuple(rest[:ell]), 1
    if ell == len(rest) or rem[rest[ell - 1] - 1] > rem[rest[ell] - 1]:
        return tuple(rest[:ell]), 2
    val = rem[rest[ell - 1] - 1]
    above = [v for v in rest if rem[v - 1] > val]
    tied = sorted((v for v in rest if rem[v - 1] == val), reverse=True)
    chosen = set(above) | set(tied[: ell - len(above)])
    return tuple(v for v in rest if v in chosen), 3


def proper_form(state_or_order, remaining: Sequence[int] | None = None) -> ProperFormPartition:
    """The (unique) proper-form partition of the vertex order.

    ``tau2`` collects the vertices that jump ahead of a lower-index vertex and
    ``tau3`` the vertices they jump over. Raises :class:`LayoffClaimError`
    when the order has no proper form.
    """
    if isinstance(state_or_order, LayoffState):
        order, remaining = state_or_order.order, state_or_order.remaining
    else:
        order = tuple(state_or_order)
    pos = {v: i for i, v in enumerate(order)}
    left, right = set(), set()
    for i, a in enumerate(order):
        for b in order[i + 1 :]:
            if a > b:
                left.add(a)
                right.add(b)
    if not left:
        return ProperFormPartition(tuple(order), (), (), ())
    if left & right:
        raise LayoffClaimError("a vertex is inverted on both sides; no proper form")
    for a in left:
        for b in right:
            if not (pos[a] < pos[b] and a > b):
                raise LayoffClaimError(f"v{a}, v{b} break the proper-form pattern")
    for block in (left, right):
        if len({remaining[v - 1] for v in block}) != 1:
            raise LayoffClaimError("remaining degree not constant on an inverted block")
    first2 = min(pos[v] for v in left)
    last3 = max(pos[v] for v in right)
    tau2 = tuple(v for v in order if v in left)
    tau3 = tuple(v for v in order if v in right)
    middle = [v for v in order[first2 : last3 + 1] if v not in left and v not in right]
    if middle:
        raise LayoffClaimError("inverted blocks are not contiguous")
    return ProperFormPartition(tuple(order[:first2]), tau2, tau3, tuple(order[last3 + 1 :]))


def advance(state: LayoffState) -> tuple[LayoffState, int, tuple[int, ...], int]:
    """One step: returns ``(next_state, laid_off, N_p, rule)``."""
    a = select_layoff_vertex(state)
    nbh, rule = choose_Np(state, a)
    rem = list(state.remaining)
    for v in nbh:
        rem[v - 1] -= 1
    nxt = replace(
        state,
        p=state.p + 1,
        remaining=tuple(rem),
        active=state.active - {a},
        neighborhoods=state.neighborhoods + (tuple(sorted(nbh)),),
        laid_off=state.laid_off + (a,),
    )
    return nxt, a, nbh, rule


class _ClaimChecker:
    """Runtime assertions for a run whose input meets the biclique hypotheses."""

    def __init__(self, k: int, r: int):
        self.k, self.r = k, r
        self.claim4_at: int | None = None
        self.prev_ell: int | None = None
        self.prev_nbh_good = False

    def fail(self, p: int, msg: str) -> None:
        raise LayoffClaimError(f"step {p}: {msg}")

    def before(self, p: int, state: LayoffState) -> None:
        k, r = self.k, self.r
        if p <= r * (k + 1):
            for j in range(1, k - r + 1):
                if state.d_hat(j) < k:
                    self.fail(p, f"remaining degree of v{j} is {state.d_hat(j)} < k = {k}")
            if len(state.eligible) < 2 * r:
                self.fail(p, f"eligible set has {len(state.eligible)} < 2r = {2 * r} vertices")

    def after(
        self,
        p: int,
        prev: LayoffState,
        state: LayoffState,
        a: int,
        nbh: tuple[int, ...],
        good: bool,
        good_before: int,
        prev_part: ProperFormPartition | None,
    ) -> ProperFormPartition | None:
        k, r = self.k, self.r
        ell = prev.d_hat(a)
        S = prev.eligible
        hit = S & set(nbh)

        # remaining-degree identity
        for v in range(1, len(state.seq) + 1):
            count = sum(1 for N in state.neighborhoods if v in N)
            if state.d_hat(v) != state.seq[v - 1] - count:
                self.fail(p, f"remaining degree identity broken at v{v}")
        # the step is a Kleitman–Wang layoff of the sorted residual
        position = prev.order.index(a) + 1
        if kleitman_wang_layoff(prev.residual, position).residual != state.residual:
            self.fail(p, "residual differs from the Kleitman–Wang residual")

        # Claim 4 bookkeeping: a drop in ell must be followed by quick success
        if self.prev_ell is not None and ell < self.prev_ell and p - 1 <= r * k and self.claim4_at is None:
            if ell != self.prev_ell - 1 or not self.prev_nbh_good:
                self.fail(p, "ell dropped by more than one or after a bad neighborhood")
            self.claim4_at = p - 1
        self.prev_ell = ell
        self.prev_nbh_good = good

        if p <= r * (k + 1) and good_before <= r - 1:
            if hit and not good:
                self.fail(p, "neighborhood meets the eligible set but is not good")
            if len(hit) > r - 1:
                self.fail(p, f"|S ∩ N_p| = {len(hit)} > r - 1")
            floor = min(prev.d_hat(v) for v in S)
            if any(prev.d_hat(v) < floor for v in nbh):
                self.fail(p, "neighborhood reaches below the eligible minimum")
            prefix_min = None
            for v in sorted(state.active):
                if prefix_min is not None and state.d_hat(v) > prefix_min + 1:
                    self.fail(p, f"remaining degree of v{v} exceeds an earlier vertex by 2 or more")
                prefix_min = state.d_hat(v) if prefix_min is None else min(prefix_min, state.d_hat(v))

        if self.claim4_at is not None:
            return None
        part = proper_form(state)
        if p - 1 <= r * k - 1:
            if prev_part is not None and (prev_part.consistent or prev_part.inconsistency >= k) and not good:
                self.fail(p, "order was consistent (or very inconsistent) but N_p is not good")
            if not part.consistent and len(part.tau1) + len(part.tau3) > ell:
                self.fail(p, "|tau1 ∪ tau3| exceeds ell")
            if prev_part is not None and not prev_part.consistent:
                hat = tuple(v for v in prev.order if v != a)
                ok = (
                    (part.consistent and good)
                    or (state.order == hat and good)
                    or part.inconsistency < prev_part.inconsistency
                )
                if not ok:
                    self.fail(p, "inconsistency did not resolve or shrink")
        return part


def laying_off(
    seq: Sequence[int],
    k: int,
    r: int,
    *,
    max_steps: int | None = None,
    stop_after_good: int | None = None,
    check_claims: bool = False,
) -> Iterator[tuple[LayoffStep, LayoffState]]:
    """Run the algorithm step by step, yielding ``(step, state_after)``."""
    state = initial_state(seq, k, r)
    checker = _ClaimChecker(k, r) if check_claims else None
    part = proper_form(state) if check_claims else None
    good_count = 0
    while max_steps is None or state.p < max_steps:
        if stop_after_good is not None and good_count >= stop_after_good:
            return
        p = state.p + 1
        if checker:
            checker.before(p, state)
        prev = state
        state, a, nbh, rule = advance(prev)
        good = prev.is_good(nbh)
        if checker:
            part = checker.after(p, prev, state, a, nbh, good, good_count, part)
        else:
            try:
                part = proper_form(state)
            except LayoffClaimError:
                part = None
        good_count += good
        step = LayoffStep(
            p=p,
            laid_off=a,
            ell=prev.d_hat(a),
            neighborhood=nbh,
            case=rule,
            good=good,
            order=state.order,
            residual=state.residual,
            partition=part,
            good_count=good_count,
        )
        yield step, state
        if checker and checker.claim4_at is not None and good_count < r and p > checker.claim4_at + r:
            raise LayoffClaimError(
                f"ell dropped at step {checker.claim4_at} but {r} good neighborhoods did not follow within {r} steps"
            )


def check_hypotheses(seq: Sequence[int], k: int, r: int) -> None:
    """Raise :class:`LayoffHypothesisError` naming the first failed hypothesis."""
    seq = DegreeSequence(seq)
    n = len(seq)
    if not 0 < r < k:
        raise LayoffHypothesisError(f"need 0 < r < k, got r={r}, k={k}")
    if n < k:
        raise LayoffHypothesisError(f"need n >= k, got n={n}, k={k}")
    if not is_graphic(seq):
        raise LayoffHypothesisError(f"{tuple(seq)} is not graphic")
    gap = seq.d(k - r) - seq.d(k)
    if gap < r * (k + 2):
        raise LayoffHypothesisError(
            f"d_{k - r} - d_{k} = {gap} < r(k+2) = {r * (k + 2)}"
        )
    window = sum(1 for t in seq[k:] if k - r <= t <= k - 1)
    if window < r * (k + r + 1):
        raise LayoffHypothesisError(
            f"only {window} terms after position {k} lie in {{{k - r},...,{k - 1}}}; need r(k+r+1) = {r * (k + r + 1)}"
        )


def complete_bipartite(a: int, b: int) -> LabeledGraph:
    """``K_{a,b}`` with parts ``1..a`` and ``a+1..a+b``."""
    return LabeledGraph(a + b, frozenset((u, v) for u in range(1, a + 1) for v in range(a + 1, a + b + 1)))


def run_layoff(seq: Sequence[int], k: int, r: int) -> tuple[LayoffTrace, EmbeddingWitness]:
    """Realize ``seq`` with ``K_{k-r,r}`` whose ``k - r`` part is ``v_1..v_{k-r}``.

    Lays off vertices until ``r`` neighborhoods are good (at most
    ``(r-1)k + 1`` steps, asserted), realizes the final residual and
    re-attaches every laid-off vertex to its recorded neighborhood.
    """
    check_hypotheses(seq, k, r)
    seq = tuple(seq)
    n = len(seq)
    trace = LayoffTrace(seq, k, r)
    bound = (r - 1) * k + 1
    state = None
    for step, state in laying_off(seq, k, r, stop_after_good=r, check_claims=True):
        trace.steps.append(step)
        if step.p > bound and trace.good_count < r:
            raise LayoffClaimError(f"{r} good neighborhoods not reached within {bound} steps")
    assert state is not None
    if trace.good_count < r:
        raise LayoffClaimError("algorithm stopped before reaching r good neighborhoods")

    final = realize_degrees({v: state.d_hat(v) for v in state.active}, n)
    edges = set(final.edges)
    for a, nbh in zip(state.laid_off, state.neighborhoods):
        for v in nbh:
            e = (a, v) if a < v else (v, a)
            assert e not in edges, "re-attachment produced a parallel edge"
            edges.add(e)
    g = LabeledGraph(n, frozenset(edges))
    if g.degrees() != seq:
        raise LayoffError("assembled graph does not realize the sequence")

    part_a = list(range(1, k - r + 1))
    part_b = trace.good_vertices[:r]
    pattern = complete_bipartite(k - r, r)
    vmap = {i + 1: v for i, v in enumerate(part_a + part_b)}
    witness = EmbeddingWitness(g, pattern, vmap, route="layoff")
    if not witness.verify(seq):
        raise LayoffError("assembled graph lacks the complete bipartite subgraph")
    return trace, witness
