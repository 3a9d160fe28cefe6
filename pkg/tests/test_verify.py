from fractions import Fraction

import pytest

from mertenslab import (
    IntervalGrid,
    OpenInterval,
    build_bk,
    check_bk_bridge,
    check_corollary1,
    check_lemma1,
    check_lemma2,
    check_lemma3,
    check_theorem,
    check_theorem_s_side,
    classify_lemma3,
    floor_log,
    kn_residuals,
    lemma1_predicted_set,
    primes_below,
    primorial_excluding,
    rough_count_oracle,
    squarefree_multiples_of,
    sweep_lemma3,
    theorem_double_sum,
)
from .oracles import naive_double_sum

F = Fraction


# --- lemma1 / corollary1 -------------------------------------------------------

def test_lemma1_examples():
    rec = check_lemma1(F("10.5"), 7, 1)
    assert (rec.lhs, rec.rhs, rec.passed, rec.tag) == (2, 2, True, "members=predicted")
    assert check_lemma1(F("10.5"), 7, 6).rhs == 2
    assert check_lemma1(F("10.5"), 7, 6).passed
    # p = 2 inherits the k*N_p = 1 (mod p) defect at its only k
    rec2 = check_lemma1(F("10.5"), 2, 1)
    assert (rec2.lhs, rec2.rhs, rec2.passed, rec2.tag) == (3, 4, False, "members!=predicted")


def test_lemma1_fails_exactly_when_window_base_is_one_mod_p():
    # the j = 0 prediction k*N_p - 1 is divisible by p precisely then
    for two_x in (7, 11, 21, 31):
        x = F(two_x, 2)
        for p in primes_below(x):
            n_p = primorial_excluding(x, p)
            want = floor_log(p, x) + 1
            for k in range(1, p):
                rec = check_lemma1(x, p, k, n_p)
                bad = (k * n_p.value) % p == 1
                assert rec.passed == (not bad)
                assert rec.lhs == want - (1 if bad else 0)
                assert (rec.tag == "members=predicted") == (not bad)


def test_lemma1_member_sets_differ_only_by_the_j0_element():
    x = F("10.5")
    p, k = 7, 4  # 4 * 30 = 120 = 1 (mod 7)
    n_p = primorial_excluding(x, p)
    base = k * n_p.value
    members = rough_count_oracle(OpenInterval(base - x, F(base)), x).members
    predicted = lemma1_predicted_set(k, p, x, n_p)
    assert list(members) == [v for v in predicted if v != base - 1]


def test_corollary1_examples():
    rec = check_corollary1(F("10.5"), 7, 1)
    assert (rec.lhs, rec.rhs, rec.passed) == (1, 1, True)
    assert check_corollary1(F("30.5"), 29, 1).lhs == 1
    rec2 = check_corollary1(F("10.5"), 3, 2)
    assert rec2.rhs == 2  # 3 and 9 both sit below 10.5
    assert rec2.passed


# --- lemma2 --------------------------------------------------------------------

@pytest.mark.parametrize(
    "two_x,p,k", [(21, 7, 1), (21, 5, 3), (11, 3, 1), (7, 3, 1), (7, 3, 2)]
)
def test_lemma2_examples(two_x, p, k):
    rec = check_lemma2(F(two_x, 2), p, k)
    assert rec.passed, rec


def test_lemma2_value_on_hand_checked_case():
    # x = 5.5, p = 3, k = 1: both routes give 0 (window holds {7}, plain holds {1})
    rec = check_lemma2(F("5.5"), 3, 1)
    assert rec.lhs == 0 and rec.rhs == 0


def test_lemma2_holds_at_the_anomalous_k():
    # the sieve identity is exact even where the cardinality claim fails
    rec = check_lemma2(F("10.5"), 7, 4)
    assert rec.passed
    assert rec.lhs == 0  # one short of floor_log + 0


# --- lemma3 --------------------------------------------------------------------

def test_classify_lemma3_examples():
    case = classify_lemma3(14, 7, 1, F("10.5"))
    assert (case.case, case.value) == ("one_pdiv_rgt", 1)
    assert classify_lemma3(6, 7, 1, F("10.5")).value == 0
    assert classify_lemma3(6, 7, 1, F("10.5")).case == "zero_pnotdiv"
    assert classify_lemma3(7, 7, 1, F("10.5")).value == 1
    assert classify_lemma3(35, 7, 1, F("10.5")).case == "zero_pdiv_rle"


def test_classify_lemma3_domain_errors():
    with pytest.raises(ValueError):
        classify_lemma3(12, 7, 1, F("10.5"))  # not squarefree
    with pytest.raises(ValueError):
        classify_lemma3(22, 7, 1, F("10.5"))  # factor 11 not below x
    with pytest.raises(ValueError):
        classify_lemma3(1, 7, 1, F("10.5"))


def test_check_lemma3_examples():
    rec = check_lemma3(14, 7, 1, F("10.5"))
    assert (rec.lhs, rec.rhs, rec.passed) == (1, 1, True)
    rec = check_lemma3(6, 7, 1, F("10.5"))
    assert (rec.lhs, rec.rhs, rec.passed) == (0, 0, True)


@pytest.mark.parametrize("two_x,p", [(11, 3), (21, 7), (21, 5), (31, 13)])
def test_lemma3_sweeps_clean(two_x, p):
    x = F(two_x, 2)
    for k in range(1, p):
        rec = sweep_lemma3(x, p, k)
        assert rec.passed and rec.lhs == 0


# --- B_k bridge ----------------------------------------------------------------

def test_build_bk_examples():
    members = build_bk(F("10.5"), 7, 1)
    assert members == [7, 14, 21]
    assert 14 in members and 7 in members
    assert all(a % 7 == 0 for a in members)


def test_bk_bridge_all_k():
    x = F("10.5")
    for k in range(1, 7):
        rec = check_bk_bridge(x, 7, k)
        assert rec.passed, rec


def test_bk_widened_cap_adds_nothing():
    x, p = F("10.5"), 7
    for k in range(1, p):
        narrow = build_bk(x, p, k, cap_multiplier=1)
        wide = build_bk(x, p, k, cap_multiplier=3)
        assert narrow == wide
        assert check_bk_bridge(x, p, k, cap_multiplier=3).passed


# --- permutation of window residuals --------------------------------------------

@pytest.mark.parametrize("two_x,p", [(21, 7), (21, 5), (11, 3), (31, 11)])
def test_window_residuals_permute_fractions(two_x, p):
    x = F(two_x, 2)
    target = {F(i, p) for i in range(1, p)}
    for a, _ in squarefree_multiples_of(p, x, p * x):
        values = kn_residuals(a, p, x)
        assert set(values) == target
        assert len(values) == p - 1


# --- interval grid and the double sum -------------------------------------------

def test_interval_grid_shape():
    grid = IntervalGrid(x=F("10.5"), p=7)
    assert grid.m == 3
    assert grid.cell(1, 6) == OpenInterval(F(3, 2), F(21, 2))
    assert len(list(grid.cells())) == grid.m * 6
    g23 = IntervalGrid(x=F("23.5"), p=7)
    assert g23.cell(1, 6) == OpenInterval(F(47, 14), F(47, 2))


def test_grid_rows_are_disjoint_and_ordered():
    grid = IntervalGrid(x=F("23.5"), p=7)
    for i in range(1, 7):
        row = grid.row(i)
        for left, right in zip(row[1:], row[:-1]):
            assert left.hi <= right.lo  # column n+1 sits left of column n


def test_grid_tail_is_integer_free():
    for two_x, p in [(21, 7), (21, 3), (47, 5), (201, 11)]:
        grid = IntervalGrid(x=F(two_x, 2), p=p)
        for n in range(grid.m + 1, grid.m + 4):
            for i in range(1, p):
                assert grid.cell(n, i).count_integers() == 0


@pytest.mark.parametrize(
    "two_x,p,expected",
    [(21, 7, -5), (21, 3, -3), (21, 5, -3), (21, 2, -2), (47, 7, -5), (47, 5, -3), (11, 3, -1)],
)
def test_theorem_double_sum_frozen_values(two_x, p, expected, table_200):
    # expected values computed by per-integer enumeration (see oracles.py)
    assert theorem_double_sum(F(two_x, 2), p, table_200) == expected


@pytest.mark.parametrize("two_x,p", [(21, 7), (11, 3), (31, 5), (47, 11)])
def test_theorem_double_sum_matches_naive_oracle(two_x, p, table_200):
    x = F(two_x, 2)
    assert theorem_double_sum(x, p, table_200) == naive_double_sum(x, p)


def test_check_theorem_records(table_200):
    rec = check_theorem(F("10.5"), 7, table_200)
    assert (rec.lhs, rec.rhs, rec.passed, rec.tag) == (-5, -6, False, "m-side")
    srec = check_theorem_s_side(F("10.5"), 7)
    assert (srec.lhs, srec.rhs, srec.passed, srec.tag) == (5, 6, False, "s-side")
    # the two sides are exact negatives of each other
    assert rec.lhs == -srec.lhs


@pytest.mark.parametrize("two_x", [7, 11, 21, 31])
def test_m_side_equals_minus_s_side(two_x, table_200):
    x = F(two_x, 2)
    for p in primes_below(x):
        assert theorem_double_sum(x, p, table_200) == -check_theorem_s_side(x, p).lhs


def test_record_sort_key_and_claims():
    rec = check_lemma1(F("10.5"), 7, 1)
    assert rec.sort_key()[0] == "lemma1"
    assert rec.elapsed_us >= 0
