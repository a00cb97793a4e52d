from fractions import Fraction

import pytest

from nsjack.compositions import compositions_up_to
from nsjack.jack import JackTable
from nsjack.oracle import brute_ep
from nsjack.pieri.conjecture import (
    b_swa, boxed_rows, conjecture_Bp, explore, extension_factor, m_star, moved_down, row_map, summarize,
)
from nsjack.pieri.kernel import kernel
from nsjack.subsets import c_I, maximal_sets

A = Fraction(2)


def test_m_star_example():
    assert m_star((2, 0, 1), 2) == (3, 0, 2)
    assert m_star((0, 0, 0), 1) == (1, 0, 0)


def test_row_map_and_boxes():
    eta, nu = (0, 0, 0), (1, 0, 1)
    pi = row_map(eta, nu)
    assert pi == (0, 2, 1)
    assert boxed_rows(eta, nu, pi) == ([2], [0, 1])
    assert moved_down(eta, nu, pi) == 1
    with pytest.raises(ValueError):
        boxed_rows((0, 0), (2, 0), (0, 1))


def test_extension_reading_validated():
    with pytest.raises(ValueError):
        extension_factor((1, 0), (1, 1), A, "some")


@pytest.mark.parametrize("n", [1, 2, 3])
def test_top_target_coefficient_is_one(n):
    table = JackTable(n, A)
    for p in range(1, n + 1):
        for eta in compositions_up_to(n, 4):
            rec = conjecture_Bp(eta, p, m_star(eta, p), A, expansion=brute_ep(eta, p, table))
            assert rec.A_oracle == 1
            assert rec.swa_match


def test_p1_B_from_A_is_closed_form():
    table = JackTable(3, A)
    for eta in compositions_up_to(3, 3):
        exp = brute_ep(eta, 1, table)
        for t in maximal_sets(eta):
            rec = conjecture_Bp(eta, 1, c_I(eta, t), A, expansion=exp)
            k = kernel(eta, t, A)
            assert rec.B_from_A == -A * k.A * k.Bhat


def test_single_element_sets_satisfy_swa():
    table = JackTable(3, A)
    for eta in compositions_up_to(3, 4):
        exp = brute_ep(eta, 1, table)
        for t in maximal_sets(eta):
            if len(t) == 1:
                assert conjecture_Bp(eta, 1, c_I(eta, t), A, expansion=exp).swa_match


def test_swa_trivial_when_nothing_interleaves():
    assert b_swa((0, 0), (1, 1), A) == 1


def test_explore_and_summary_shape():
    recs = explore(2, 1, A, 2)
    summary = summarize(recs)
    assert summary["all"]["rows"] == len(recs) > 0
    assert summary["p1"]["rows"] == len(recs)
    assert summary["m_star"]["swa"] == summary["m_star"]["rows"]
    row = recs[0].row()
    assert set(row) >= {"eta", "nu", "A_oracle", "B_swa", "swa_match", "at_most_one_down"}
