#!/usr/bin/env python3
"""Every claim check in one place, on a small parameter point.

Checks return records instead of asserting, so the workbench can map
out where each claim holds.  The bridges (lemma2, lemma3, bk_bridge,
the m-side/s-side equality) hold everywhere; the cardinality claims
(lemma1, corollary1) and the grid identity (theorem) are off by a
uniform one.
"""
from fractions import Fraction as F

from mertenslab import (
    check_bk_bridge,
    check_corollary1,
    check_lemma1,
    check_lemma2,
    check_lemma3,
    check_theorem,
    check_theorem_s_side,
    classify_lemma3,
    kn_residuals,
    sweep_lemma3,
)

x = F("10.5")


def show(rec):
    verdict = "pass" if rec.passed else "FAIL"
    params = f"p={rec.p}" + (f" k={rec.k}" if rec.k else "") + (f" a={rec.a}" if rec.a else "")
    tag = f"  [{rec.tag}]" if rec.tag else ""
    print(f"  {rec.claim:<11} {params:<12} lhs={rec.lhs!s:>3} rhs={rec.rhs!s:>3}  {verdict}{tag}")


print(f"== claim records at x = {x} ==")
show(check_lemma1(x, 7, 1))
show(check_lemma1(x, 7, 4))  # 4*30 = 120 = 1 (mod 7): the bad k
show(check_corollary1(x, 7, 1))
show(check_lemma2(x, 7, 4))  # the residual bridge holds even at the bad k
show(check_lemma3(14, 7, 1, x))
show(check_bk_bridge(x, 7, 4))
show(sweep_lemma3(x, 7, 3))
show(check_theorem(x, 7))
show(check_theorem_s_side(x, 7))

print()
print("== the lemma3 trichotomy, spelled out ==")
for a in (14, 6, 7, 35):
    case = classify_lemma3(a, 7, 1, x)
    print(f"  a={a:2d}: case {case.case:<13} value {case.value}")

print()
print("== window residuals permute the p-ths exactly ==")
values = kn_residuals(14, 7, x)
print(f"  a=14, p=7: R(0, k*N_p/14) over k=1..6 -> {values}")
print(f"  as a set: {sorted(values)}")
