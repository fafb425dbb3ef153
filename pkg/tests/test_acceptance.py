"""Acceptance criteria 1-10, one printed PASS/FAIL line each.

Run under pytest (lines go straight to the terminal) or directly with
``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from itertools import combinations_with_replacement
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from _instances import layoff_instances  # noqa: E402
from potentia.graphs import complete_graph, named_graph  # noqa: E402
from potentia.layoff import laying_off, run_layoff  # noqa: E402
from potentia.oracle import (  # noqa: E402
    brute_force_realizable,
    contains_subgraph,
    graphic_sequences,
    oracle_potentially_H,
    sigma_scan,
)
from potentia.potential import (  # noqa: E402
    _split_pattern,
    as_pattern,
    assemble_want_realization,
    degree_sufficient,
    li_yin_potentially_Kk,
    pi_tilde,
    sigma,
    want_sequence,
)
from potentia.seqcore import is_close, is_graphic  # noqa: E402
from potentia.witness import CertificateError, thm15_certificate, thm41_certificate  # noqa: E402

PATTERNS = ("K3", "K4", "P3", "P4", "C4", "C5", "paw")
TRACE_SEQ = (9, 9, 9, 9, 8, 8, 7, 7, 7, 7, 4, 4, 4, 4)

# the three sequences where the parity-fixed target drops below the input
PARITY_COUNTEREXAMPLES = {
    ("K4", (4, 2, 2, 2, 2, 2)),
    ("K4", (6, 2, 2, 2, 2, 2, 2, 2)),
    ("K4", (4, 2, 2, 2, 2, 2, 2, 2)),
}


def _report(n, ok, detail, capsys=None):
    line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    if capsys is None:
        print(line, flush=True)
    else:
        with capsys.disabled():
            print("\n" + line, flush=True)
    return ok


# ---------------------------------------------------------------------------


def criterion_1():
    t = time.time()
    total = mismatches = 0
    for n in range(1, 8):
        for seq in combinations_with_replacement(range(6, -1, -1), n):
            total += 1
            if is_graphic(seq) != brute_force_realizable(seq):
                mismatches += 1
    ok = mismatches == 0
    return ok, f"{total} sequences, {mismatches} disagreements, {time.time() - t:.1f}s"


def criterion_2():
    steps = [s for s, _ in laying_off(TRACE_SEQ, 5, 1, max_steps=4)]
    want = [
        (8,) * 6 + (7,) * 4 + (4,) * 3,
        (8, 8) + (7,) * 8 + (4, 4),
        (7,) * 8 + (6, 6, 4),
        (7,) * 4 + (6,) * 6,
    ]
    ok = [s.residual for s in steps] == want and set(steps[2].neighborhood) == {5, 6, 9, 10}
    return ok, "pi_1..pi_4 and N_3 = {v5,v6,v9,v10}" + ("" if ok else f" got {[s.residual for s in steps]}")


def criterion_3():
    t = time.time()
    inst = layoff_instances(200, seed=2024)
    bad = []
    for seq, k, r in inst:
        assert len(seq) <= 40 and k <= 6 and r <= 2
        try:
            trace, w = run_layoff(seq, k, r)
        except Exception as exc:  # any claim failure counts
            bad.append((seq, k, r, repr(exc)))
            continue
        if not (w.verify(seq) and trace.good_count >= r and len(trace.steps) <= (r - 1) * k + 1):
            bad.append((seq, k, r, "witness"))
    el = time.time() - t
    ok = not bad and el < 60
    return ok, f"{len(inst)} instances, {len(bad)} failures, {el:.1f}s"


def criterion_4():
    t = time.time()
    checked, bad = 0, []
    for name in PATTERNS:
        P = as_pattern(named_graph(name))
        for n in range(P.k, 10):
            for i in P.nabla:
                seq = pi_tilde(P, n, i)
                checked += 1
                if not is_graphic(seq) or oracle_potentially_H(seq, P):
                    bad.append((name, n, i))
    return not bad, f"{checked} (H, n, i) cases, {len(bad)} exceptions, {time.time() - t:.1f}s"


def _thm15_sweep():
    checked, failures = 0, []
    for name in PATTERNS:
        P = as_pattern(named_graph(name))
        for n in range(P.k, 9):
            for seq in graphic_sequences(n, min_term=1):
                if degree_sufficient(seq, P)[0]:
                    continue
                checked += 1
                try:
                    thm15_certificate(seq, P)
                except CertificateError:
                    failures.append((name, seq))
    return checked, failures


def criterion_5():
    checked, failures = _thm15_sweep()
    return not failures, f"{checked} not-degree-sufficient sequences, {len(failures)} failures {failures}"


def criterion_6():
    t = time.time()
    certified = 0
    failures = []
    for name in ("K3", "K4", "P3", "P4", "C5", "C4", "paw"):
        P = as_pattern(named_graph(name))
        for n in range(P.k, 9):
            for seq in graphic_sequences(n):
                if not degree_sufficient(seq, P)[0]:
                    continue
                try:
                    c = thm41_certificate(seq, P)
                except CertificateError:
                    failures.append((name, seq))
                    continue
                if c.status == "validated":
                    certified += 1
                    if not c.validate():
                        failures.append((name, seq))
    return not failures, f"{certified} oracle-negative sequences certified, {len(failures)} failures, {time.time() - t:.1f}s"


def criterion_7():
    k, n = 4, 10
    pk = (n - 1,) + (2 * k - 5,) * (2 * k - 3) + (1,) * (n - 2 * k + 2)
    K4 = complete_graph(4)
    part1 = is_graphic(pk) and degree_sufficient(pk, K4)[0] and not oracle_potentially_H(pk, K4)
    k = 6
    n6 = 20
    p6 = (n6 - 1,) + (2 * k - 5,) * (2 * k - 3) + (1,) * (n6 - 2 * k + 2)
    _, w = is_close(p6, pi_tilde(complete_graph(k), n6, 2), k - 1, k, 0)
    part2 = w.total_edit == k * (k - 3) == 18
    return part1 and part2, f"pi_4 = {pk} not potentially K4: {part1}; k=6 edit {w.total_edit} (want 18)"


def criterion_8():
    t = time.time()
    rows, ok = [], True
    for name in ("K2", "K3", "P3"):
        P = as_pattern(named_graph(name))
        for n in (5, 6, 7):
            scan = sigma_scan(P, n)
            lower = sigma(pi_tilde(P, n)) + 2
            good = scan.value >= lower and all(sum(s) < scan.value for s in scan.failures)
            ok &= good
            rows.append(f"{name}/{n}={scan.value}>={lower}")
    el = time.time() - t
    return ok and el < 300, " ".join(rows) + f", {el:.1f}s"


def _want_triples(count=1000, seed=7):
    rng = random.Random(seed)
    pool = {n: list(graphic_sequences(n, min_term=1)) for n in range(3, 9)}
    out = []
    while len(out) < count:
        n = rng.randint(3, 8)
        seq = rng.choice(pool[n])
        k = rng.randint(2, n)
        r = rng.randint(1, k - 1)
        if degree_sufficient(seq, _split_pattern(r, k))[0]:
            out.append((seq, r, k))
    return out


def _want_stats():
    unsound = negative = too_many_zeros = max_bound = graphic = 0
    zero_example = None
    for seq, r, k in _want_triples():
        w = want_sequence(seq, r, k)
        negative += not w.nonnegative
        if w.zero_count > r:
            too_many_zeros += 1
            zero_example = zero_example or (seq, r, k, w.values)
        max_bound += max(w.values) > w.max_bound()
        if w.is_graphic():
            graphic += 1
            g = assemble_want_realization(w)
            if g.degrees() != seq or not contains_subgraph(g, _split_pattern(r, k)):
                unsound += 1
    return dict(
        unsound=unsound,
        negative=negative,
        too_many_zeros=too_many_zeros,
        max_bound=max_bound,
        graphic=graphic,
        zero_example=zero_example,
    )


def criterion_9():
    s = _want_stats()
    ok = not (s["unsound"] or s["negative"] or s["too_many_zeros"] or s["max_bound"])
    return ok, (
        f"1000 triples, {s['graphic']} graphic want sequences, unsound {s['unsound']}, "
        f"negative {s['negative']}, max-bound violations {s['max_bound']}, "
        f"more than r zeros {s['too_many_zeros']} (e.g. {s['zero_example']})"
    )


def criterion_10():
    checked = false_pos = 0
    for n in range(2, 9):
        for seq in graphic_sequences(n):
            for k in range(2, 5):
                if li_yin_potentially_Kk(seq, k):
                    checked += 1
                    if not oracle_potentially_H(seq, complete_graph(k)):
                        false_pos += 1
    return false_pos == 0, f"{checked} positive Li-Yin verdicts, {false_pos} false positives"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


# ---------------------------------------------------------------------------
# pytest wrappers


def _run(n, capsys):
    ok, detail = CRITERIA[n - 1]()
    _report(n, ok, detail, capsys)
    assert ok, detail


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 7, 8, 10])
def test_criterion(n, capsys):
    _run(n, capsys)


@pytest.mark.xfail(strict=True, reason="parity-fixed target breaks the majorization case; see ledger")
def test_criterion_5(capsys):
    _run(5, capsys)


def test_criterion_5_failures_are_exactly_the_parity_cases():
    _, failures = _thm15_sweep()
    assert {(name, tuple(seq)) for name, seq in failures} == PARITY_COUNTEREXAMPLES
    for name, seq in PARITY_COUNTEREXAMPLES:
        P = as_pattern(named_graph(name))
        _, j = degree_sufficient(seq, P)
        target = pi_tilde(P, len(seq), j)
        # only the parity-reduced last term is in the way
        assert target[:-1] >= seq[:-1] and target[-1] + 1 == seq[-1]


@pytest.mark.xfail(strict=True, reason="the at-most-r-zeros bound is false as stated; see ledger")
def test_criterion_9(capsys):
    _run(9, capsys)


def test_criterion_9_soundness_parts():
    s = _want_stats()
    assert s["unsound"] == 0 and s["negative"] == 0 and s["max_bound"] == 0
    assert s["graphic"] > 900


if __name__ == "__main__":
    results = [_report(i + 1, *c()) for i, c in enumerate(CRITERIA)]
    sys.exit(0 if all(results) else 1)
