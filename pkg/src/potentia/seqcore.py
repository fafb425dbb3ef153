"""Degree-sequence arithmetic.

Graphicality (Erdős–Gallai, with Tripathi–Vijay pruning), majorization,
the ``D_{k,m}`` transform, leveling off, editing and closeness.

Positions are 1-based throughout, matching the usual ``(d_1, ..., d_n)``
notation. Anything that may leave the nonincreasing / nonnegative world
(``dkm_reduce``, edited sequences) returns a plain tuple, called a *raw
sequence* here.
"""

from __future__ import annotations

import re
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "DegreeSequence",
    "ClosenessWitness",
    "SequenceFormatError",
    "is_graphic",
    "eg_check_points",
    "zz_length_sufficient",
    "majorizes",
    "dkm_reduce",
    "level_off",
    "min_edit_to",
    "is_close",
    "parse_sequence",
    "read_sequences",
    "format_sequence",
]


class SequenceFormatError(ValueError):
    """Malformed sequence text; ``lineno`` is 1-based when known."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class DegreeSequence(tuple):
    """Nonincreasing tuple of nonnegative integers, each at most ``n - 1``.

    A ``DegreeSequence`` is a tuple, so it compares equal to the plain tuple
    with the same terms. Use :meth:`d` for 1-based access.
    """

    __slots__ = ()

    def __new__(cls, terms: Iterable[int] = ()):
        terms = tuple(int(t) for t in terms)
        n = len(terms)
        for i, t in enumerate(terms):
            if t < 0:
                raise ValueError(f"negative term {t} at position {i + 1}")
            if t > n - 1:
                raise ValueError(f"term {t} at position {i + 1} exceeds n - 1 = {n - 1}")
            if i and t > terms[i - 1]:
                raise ValueError(f"sequence is not nonincreasing at position {i + 1}")
        return super().__new__(cls, terms)

    @classmethod
    def from_unsorted(cls, terms: Iterable[int]) -> "DegreeSequence":
        return cls(sorted(terms, reverse=True))

    @property
    def n(self) -> int:
        return len(self)

    @property
    def sigma(self) -> int:
        return sum(self)

    @property
    def positive_count(self) -> int:
        return sum(1 for t in self if t > 0)

    def d(self, i: int) -> int:
        """Term at 1-based position ``i``."""
        if not 1 <= i <= len(self):
            raise IndexError(f"position {i} outside 1..{len(self)}")
        return self[i - 1]

    def __repr__(self) -> str:
        return f"DegreeSequence({format_sequence(self)!r})"


@dataclass(frozen=True)
class ClosenessWitness:
    """Certificate that ``seq`` is ``([a1, a2], b)``-close to ``target``.

    ``leveled`` is ``seq`` after leveling off positions ``a1..a2``; ``edits``
    is the least per-position subtraction after which ``target`` majorizes
    the result.
    """

    a1: int
    a2: int
    leveled: tuple[int, ...]
    edits: tuple[int, ...]
    total_edit: int
    target: tuple[int, ...]

    def edited(self) -> tuple[int, ...]:
        return tuple(x - e for x, e in zip(self.leveled, self.edits))

    def check(self, seq: Sequence[int] | None = None, b: int | None = None) -> bool:
        """Re-verify the witness from its own fields (and ``seq`` if given)."""
        if not 1 <= self.a1 <= self.a2 <= len(self.target):
            return False
        if len(self.leveled) != len(self.target) or len(self.edits) != len(self.target):
            return False
        if seq is not None and tuple(level_off(seq, self.a1, self.a2)) != self.leveled:
            return False
        if any(e < 0 for e in self.edits) or sum(self.edits) != self.total_edit:
            return False
        if not majorizes(self.target, self.edited()):
            return False
        return b is None or self.total_edit <= b

    def to_dict(self) -> dict:
        return {
            "a1": self.a1,
            "a2": self.a2,
            "leveled": list(self.leveled),
            "edits": list(self.edits),
            "total_edit": self.total_edit,
            "target": list(self.target),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ClosenessWitness":
        return cls(
            a1=data["a1"],
            a2=data["a2"],
            leveled=tuple(data["leveled"]),
            edits=tuple(data["edits"]),
            total_edit=data["total_edit"],
            target=tuple(data["target"]),
        )


# ---------------------------------------------------------------------------
# graphicality
# ---------------------------------------------------------------------------


def _check_nonincreasing(seq: Sequence[int]) -> None:
    for i in range(1, len(seq)):
        if seq[i] > seq[i - 1]:
            raise ValueError(f"sequence is not nonincreasing at position {i + 1}")


def eg_check_points(seq: Sequence[int]) -> list[int]:
    """Positions ``p`` at which the Erdős–Gallai inequality must be checked.

    Tripathi–Vijay: it is enough to test the positions where the sequence
    strictly drops (``d_p > d_{p+1}``), plus ``p = n``.
    """
    n = len(seq)
    pts = [p for p in range(1, n) if seq[p - 1] > seq[p]]
    if n:
        pts.append(n)
    return pts


def is_graphic(seq: Sequence[int], *, pruned: bool = True) -> bool:
    """Erdős–Gallai test for a nonincreasing integer sequence.

    With ``pruned=False`` every ``p`` in ``1..n`` is checked; the default
    checks only the Tripathi–Vijay positions. Both give the same verdict.
    """
    seq = tuple(seq)
    _check_nonincreasing(seq)
    n = len(seq)
    if n == 0:
        return True
    if seq[-1] < 0 or seq[0] > n - 1:
        return False
    if sum(seq) % 2:
        return False

    prefix = [0] * (n + 1)
    for i, t in enumerate(seq):
        prefix[i + 1] = prefix[i] + t
    # ascending copy for "how many terms are >= p" lookups
    asc = seq[::-1]

    def holds(p: int) -> bool:
        # w = number of terms (over the whole sequence) with value >= p
        w = n - bisect_left(asc, p)
        tail_start = max(w, p)
        big_after_p = tail_start - p
        rhs = p * (p - 1) + p * big_after_p + (prefix[n] - prefix[tail_start])
        return prefix[p] <= rhs

    points = eg_check_points(seq) if pruned else range(1, n + 1)
    return all(holds(p) for p in points)


def zz_length_sufficient(seq: Sequence[int]) -> bool:
    """Zverovich–Zverovich length condition.

    Zeros are stripped; with maximum term ``r`` and minimum positive term
    ``s``, the condition is ``len >= (r + s + 1)^2 / (4 s)``. An all-zero
    sequence is trivially graphic and reported as sufficient.
    """
    pos = [t for t in seq if t > 0]
    if not pos:
        return True
    r, s = max(pos), min(pos)
    return 4 * s * len(pos) >= (r + s + 1) ** 2


# ---------------------------------------------------------------------------
# majorization, leveling, editing
# ---------------------------------------------------------------------------


def _same_length(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")


def majorizes(a: Sequence[int], b: Sequence[int]) -> bool:
    """Termwise ``a[i] >= b[i]``."""
    _same_length(a, b)
    return all(x >= y for x, y in zip(a, b))


def dkm_reduce(seq: Sequence[int], k: int, m: int) -> tuple[int, ...]:
    """``D_{k,m}``: first ``k`` terms become ``x_k - m``, the rest drop by ``m``.

    Negative entries are kept as they are.
    """
    n = len(seq)
    if not 1 <= k <= n:
        raise ValueError(f"k = {k} outside 1..{n}")
    if m < 0:
        raise ValueError("m must be nonnegative")
    head = seq[k - 1] - m
    return (head,) * k + tuple(x - m for x in seq[k:])


def level_off(seq: Sequence[int], a1: int, a2: int) -> tuple[int, ...]:
    """Replace positions ``a1..a2`` by the value at position ``a2``."""
    n = len(seq)
    if not 1 <= a1 <= a2 <= n:
        raise ValueError(f"need 1 <= a1 <= a2 <= n, got a1={a1}, a2={a2}, n={n}")
    seq = tuple(seq)
    return seq[: a1 - 1] + (seq[a2 - 1],) * (a2 - a1 + 1) + seq[a2:]


def min_edit_to(
    leveled: Sequence[int], target: Sequence[int]
) -> tuple[int, tuple[int, ...]]:
    """Least total subtraction after which ``target`` majorizes ``leveled``.

    Returns ``(total, edits)`` with ``edits[i] = max(0, leveled[i] - target[i])``.
    """
    _same_length(leveled, target)
    edits = tuple(max(0, x - y) for x, y in zip(leveled, target))
    return sum(edits), edits


def is_close(
    seq: Sequence[int], target: Sequence[int], a1: int, a2: int, b: int
) -> tuple[bool, ClosenessWitness]:
    """Decide ``([a1, a2], b)``-closeness of ``seq`` to ``target``.

    The witness carries the minimal edit vector whether or not the budget
    ``b`` suffices.
    """
    _same_length(seq, target)
    if b < 0:
        raise ValueError("b must be nonnegative")
    leveled = level_off(seq, a1, a2)
    total, edits = min_edit_to(leveled, target)
    witness = ClosenessWitness(a1, a2, leveled, edits, total, tuple(target))
    return total <= b, witness


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"^(-?\d+)(?:\^(\d+))?$")


def parse_sequence(text: str, *, lineno: int | None = None) -> tuple[int, ...]:
    """Parse whitespace/comma separated integers; ``v^m`` repeats ``v`` m times."""
    text = text.split("#", 1)[0]
    out: list[int] = []
    for tok in text.replace(",", " ").replace("(", " ").replace(")", " ").split():
        m = _TOKEN.match(tok)
        if not m:
            raise SequenceFormatError(f"bad token {tok!r}", lineno)
        value = int(m.group(1))
        out.extend([value] * (int(m.group(2)) if m.group(2) is not None else 1))
    return tuple(out)


def read_sequences(text: str) -> list[tuple[int, ...]]:
    """One sequence per non-empty, non-comment line."""
    seqs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.split("#", 1)[0].strip():
            continue
        seqs.append(parse_sequence(line, lineno=lineno))
    return seqs


def format_sequence(seq: Sequence[int], *, compact: bool = True) -> str:
    """Inverse of :func:`parse_sequence`; runs of length > 1 use ``v^m``."""
    if not compact:
        return " ".join(str(t) for t in seq)
    parts = []
    i = 0
    while i < len(seq):
        j = i
        while j < len(seq) and seq[j] == seq[i]:
            j += 1
        parts.append(f"{seq[i]}^{j - i}" if j - i > 1 else str(seq[i]))
        i = j
    return " ".join(parts)
