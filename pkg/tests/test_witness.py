import json

import pytest

from potentia.graphs import complete_graph, named_graph
from potentia.potential import pi_tilde
from potentia.seqcore import is_close, level_off
from potentia.witness import (
    Certificate,
    CertificateError,
    CertificateInapplicable,
    bound_B1,
    bound_B1_literal,
    bound_B2,
    thm15_certificate,
    thm41_certificate,
)

K4 = complete_graph(4)


def test_bounds_k4():
    # k=4, i*=2, ell*=1, f=101, alpha=1
    assert bound_B1_literal(K4) == 16 + 8 + 2 - 101
    assert bound_B1(K4) == 26
    assert bound_B2(K4) == 9 * 16 + 4
    C5 = named_graph("C5")
    # k=5, i*=3, ell*=2: the f-term vanishes either way
    assert bound_B1(C5) == bound_B1_literal(C5) == 25 + 15 + 2
    assert bound_B2(C5) == 15 * 25 + 8 * 5


def test_split_family_closeness():
    H = named_graph("K3vE2")
    seq = (4, 4, 4, 4) + (2,) * 20
    c = thm15_certificate(seq, H)
    assert c.mode == "closeness" and c.validate()
    assert (c.closeness.a1, c.closeness.a2) == (3, 5)
    assert c.closeness.total_edit == 0


def test_majorized_case():
    c = thm15_certificate((2,) * 8, K4)
    assert c.mode == "majorization" and c.index == 4
    assert c.target == (2,) * 8 and c.validate()


def test_thm15_inapplicable():
    with pytest.raises(CertificateInapplicable):
        thm15_certificate((3, 3, 3, 3), K4)


def test_thm15_parity_counterexample_raises():
    # pi_tilde_3(K4, 6) ends in 1 after the parity fix
    assert pi_tilde(K4, 6, 3) == (5, 2, 2, 2, 2, 1)
    with pytest.raises(CertificateError):
        thm15_certificate((4, 2, 2, 2, 2, 2), K4)


def test_thm41_family_instance():
    c = thm41_certificate((9, 3, 3, 3, 3, 3, 1, 1, 1, 1), K4)
    assert c.status == "validated"
    assert c.target == (9, 9) + (2,) * 8
    assert c.closeness.edits == (0, 0, 1, 1, 1, 1, 0, 0, 0, 0)
    assert c.closeness.total_edit == 4 <= c.budgets["B1"]
    assert c.validate()


def test_thm41_on_pi_tilde_is_zero_edit():
    C5 = named_graph("C5")
    seq = pi_tilde(C5, 9)
    _, w = is_close(seq, seq, 3, 5, 0)
    assert w.total_edit == 0


def test_thm41_vacuous_and_inapplicable():
    c = thm41_certificate((3, 3, 3, 3), K4)
    assert c.status == "vacuous" and c.mode == "embedding" and c.validate()
    with pytest.raises(CertificateInapplicable):
        thm41_certificate((2, 2, 2, 2), K4)


def test_thm41_conditional_above_cap():
    seq = (11, 3, 3, 3, 3, 3) + (1,) * 6
    c = thm41_certificate(seq, K4, cap=10)
    assert c.status == "conditional"


def test_certificate_json_and_tamper():
    c = thm41_certificate((9, 3, 3, 3, 3, 3, 1, 1, 1, 1), K4)
    text = json.dumps(c.to_dict(), sort_keys=True)
    assert json.loads(text)["valid"] is True
    bad = Certificate(**{**c.__dict__, "sequence": (9, 4, 4, 3, 3, 3, 1, 1, 1, 1)})
    assert not bad.validate()


def test_sharpness_full_sequence_k6():
    k, n = 6, 20
    seq = (n - 1,) + (2 * k - 5,) * (2 * k - 3) + (1,) * (n - 2 * k + 2)
    target = pi_tilde(complete_graph(k), n, 2)
    assert level_off(seq, k - 1, k) == seq
    _, w = is_close(seq, target, k - 1, k, 0)
    assert w.total_edit == k * (k - 3) == 18


def test_sharpness_residual_k6():
    k = 6
    residual = (2 * k - 6,) * (2 * k - 3)
    target = pi_tilde(complete_graph(k - 1), len(residual), 2)
    assert target == (8, 8, 8, 3, 3, 3, 3, 3, 3)
    _, w = is_close(residual, target, k - 2, k - 1, 0)
    assert w.total_edit == 18
