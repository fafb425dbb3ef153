"""Self-contained certificates for sequences far from potentially H-graphic.

Two situations are covered:

* ``seq`` is not degree sufficient for ``H``. With ``j`` the largest index
  where ``d_{k-j+1} < h_{k-j+1}``, either ``pi_tilde_j(H, n)`` majorizes
  ``seq`` (``j > alpha``) or ``seq`` becomes majorized by
  ``pi_tilde_{alpha+1}(H, n)`` after leveling positions ``k-alpha..k-j+1``
  (``j <= alpha``). See :func:`thm15_certificate`.
* ``seq`` is degree sufficient but not potentially ``H``-graphic. Then
  leveling positions ``k-i*+1..k`` and editing a bounded amount yields a
  sequence majorized by ``pi_tilde_{i*}(H, n)``. See :func:`thm41_certificate`.

A certificate stores both sequences, the leveling range and the edit
vector, so :meth:`Certificate.validate` needs no recomputation of
``pi_tilde``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graphs import LabeledGraph
from .potential import (
    NOT_POTENTIALLY_H,
    POTENTIALLY_H,
    as_pattern,
    degree_sufficient,
    is_potentially_H,
    pi_tilde,
)
from .realize import EmbeddingWitness
from .seqcore import ClosenessWitness, DegreeSequence, is_close, majorizes

__all__ = [
    "Certificate",
    "CertificateError",
    "CertificateInapplicable",
    "bound_B1",
    "bound_B1_literal",
    "bound_B2",
    "thm15_certificate",
    "thm41_certificate",
]

VALIDATED = "validated"
VACUOUS = "vacuous"
CONDITIONAL = "conditional"


class CertificateInapplicable(ValueError):
    """The sequence is outside the hypotheses of the requested certificate."""


class CertificateError(AssertionError):
    """A certificate that the theory guarantees could not be produced."""


def bound_B1_literal(H) -> int:
    """``k^2 + k i* + 2 + f(H) (ell* - 2)``; negative whenever ``ell* = 1``."""
    P = as_pattern(H)
    return P.k ** 2 + P.k * P.i_star + 2 + P.f * (P.ell_star - 2)


def bound_B1(H) -> int:
    """The editing budget of the fine bound with the ``ell* - 2`` factor floored at 0."""
    P = as_pattern(H)
    return P.k ** 2 + P.k * P.i_star + 2 + P.f * max(0, P.ell_star - 2)


def bound_B2(H) -> int:
    """Coarse budget ``(6 alpha + 3) k^2 + alpha^3 k``."""
    P = as_pattern(H)
    return (6 * P.alpha + 3) * P.k ** 2 + P.alpha ** 3 * P.k


@dataclass(frozen=True)
class Certificate:
    """Evidence for one sequence and pattern.

    ``mode`` is ``majorization``, ``closeness`` or ``embedding``; ``status``
    is ``validated``, ``vacuous`` (the sequence is potentially H-graphic, so
    there is nothing to certify) or ``conditional`` (potential
    H-graphicity was not decided).
    """

    claim: str
    status: str
    mode: str
    sequence: tuple[int, ...]
    pattern_edges: tuple[tuple[int, int], ...]
    k: int
    index: int | None = None
    target: tuple[int, ...] | None = None
    closeness: ClosenessWitness | None = None
    budgets: dict[str, int] = field(default_factory=dict)
    embedding: EmbeddingWitness | None = None

    def validate(self) -> bool:
        """Re-check every stored claim from the stored data alone."""
        if self.mode == "embedding":
            return self.embedding is not None and self.embedding.verify(self.sequence)
        if self.target is None:
            return False
        if self.mode == "majorization":
            return majorizes(self.target, self.sequence)
        if self.mode == "closeness":
            w = self.closeness
            if w is None or tuple(w.target) != tuple(self.target):
                return False
            if not w.check(self.sequence):
                return False
            return all(w.total_edit <= b for name, b in self.budgets.items() if name in _ENFORCED)
        return False

    def to_dict(self) -> dict:
        out = {
            "claim": self.claim,
            "status": self.status,
            "mode": self.mode,
            "sequence": list(self.sequence),
            "pattern_edges": [list(e) for e in self.pattern_edges],
            "k": self.k,
            "index": self.index,
            "target": None if self.target is None else list(self.target),
            "closeness": None if self.closeness is None else self.closeness.to_dict(),
            "budgets": dict(self.budgets),
            "valid": self.validate(),
        }
        if self.embedding is not None:
            out["embedding"] = self.embedding.to_dict()
        return out


_ENFORCED = {"b", "B1", "B2"}


def _pattern_edges(P) -> tuple[tuple[int, int], ...]:
    return tuple(P.graph.sorted_edges())


def thm15_certificate(seq: Sequence[int], H) -> Certificate:
    """Certificate for a sequence that is not degree sufficient for ``H``.

    Raises :class:`CertificateInapplicable` for degree-sufficient input and
    :class:`CertificateError` if the promised majorization or closeness
    fails.
    """
    seq = DegreeSequence(seq)
    P = as_pattern(H)
    n, k, a = len(seq), P.k, P.alpha
    ok, j = degree_sufficient(seq, P)
    if ok:
        raise CertificateInapplicable("sequence is degree sufficient for the pattern")
    if n < k:
        raise CertificateInapplicable(f"n = {n} is smaller than the pattern order {k}")
    assert j is not None
    if j >= a + 1:
        target = tuple(pi_tilde(P, n, j))
        cert = Certificate(
            claim="not_degree_sufficient",
            status=VALIDATED,
            mode="majorization",
            sequence=tuple(seq),
            pattern_edges=_pattern_edges(P),
            k=k,
            index=j,
            target=target,
        )
    else:
        target = tuple(pi_tilde(P, n, a + 1))
        _, w = is_close(seq, target, k - a, k - j + 1, 0)
        cert = Certificate(
            claim="not_degree_sufficient",
            status=VALIDATED,
            mode="closeness",
            sequence=tuple(seq),
            pattern_edges=_pattern_edges(P),
            k=k,
            index=a + 1,
            target=target,
            closeness=w,
            budgets={"b": 0},
        )
    if not cert.validate():
        raise CertificateError(
            f"{tuple(seq)}: {cert.mode} against {target} fails (j = {j}, alpha = {a})"
        )
    return cert


def thm41_certificate(
    seq: Sequence[int], H, *, cap: int | None = None, jobs: int = 1
) -> Certificate:
    """Certificate for a degree-sufficient sequence.

    If the sequence is potentially H-graphic the certificate carries the
    embedding (``vacuous``). If exhaustive search shows it is not, leveling
    positions ``k-i*+1..k`` and editing must fit both budgets ``B1`` and
    ``B2``; otherwise :class:`CertificateError` is raised. When neither
    happens the closeness data is returned marked ``conditional``.
    """
    seq = DegreeSequence(seq)
    P = as_pattern(H)
    n, k = len(seq), P.k
    ok, _ = degree_sufficient(seq, P)
    if not ok:
        raise CertificateInapplicable("sequence is not degree sufficient for the pattern")
    verdict = is_potentially_H(seq, P, cap=cap, jobs=jobs)
    if verdict.status == POTENTIALLY_H:
        assert verdict.witness is not None
        return Certificate(
            claim="degree_sufficient",
            status=VACUOUS,
            mode="embedding",
            sequence=tuple(seq),
            pattern_edges=_pattern_edges(P),
            k=k,
            embedding=verdict.witness,
        )
    target = tuple(pi_tilde(P, n, P.i_star))
    budgets = {"B1": bound_B1(P), "B1_literal": bound_B1_literal(P), "B2": bound_B2(P)}
    _, w = is_close(seq, target, k - P.i_star + 1, k, 0)
    status = VALIDATED if verdict.status == NOT_POTENTIALLY_H else CONDITIONAL
    cert = Certificate(
        claim="degree_sufficient",
        status=status,
        mode="closeness",
        sequence=tuple(seq),
        pattern_edges=_pattern_edges(P),
        k=k,
        index=P.i_star,
        target=target,
        closeness=w,
        budgets=budgets,
    )
    if status == VALIDATED and not cert.validate():
        raise CertificateError(
            f"{tuple(seq)}: edit {w.total_edit} against {target} exceeds B1 = {budgets['B1']} or B2 = {budgets['B2']}"
        )
    return cert


def pattern_from_edges(k: int, edges) -> LabeledGraph:
    return LabeledGraph.from_edges(k, [tuple(e) for e in edges])
