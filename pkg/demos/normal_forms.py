"""
Rewriting products of full spaces
=================================

A word w denotes R_{s_i1} * ... * R_{s_ik}. Neighbours d, e merge into the
canonical decomposition of d + e whenever ext(e, d) = 0, and such merges
strictly lower N = sum of ext over ordered pairs. We compare the verdicts
against brute-force point sets on A3.
"""

import itertools

from quivmon.quiver import a3_linear
from quivmon.normal_form import Trace, Verdict, decide_equal, partial_normal_form, word_to_product
from quivmon.oracle import dynkin_equal
from quivmon.words import words_of_degree

Q = a3_linear()  # 1 -> 2 -> 3

trace = Trace()
P = word_to_product(Q, "3212")
out = partial_normal_form(Q, P, trace=trace)
print("3212 ->", out.factors)
print("merge positions", trace.positions, "measures", trace.measures)

# the decision procedure only ever claims equality when it can prove it
agree = total = 0
for w1, w2 in itertools.combinations(words_of_degree(Q, (1, 2, 1)), 2):
    ours = decide_equal(Q, word_to_product(Q, w1), word_to_product(Q, w2)) is Verdict.EQUAL
    agree += ours == dynkin_equal(Q, w1, w2, dynkin=True)
    total += 1
print(f"agreement with the F_2 oracle at (1,2,1): {agree}/{total}")
