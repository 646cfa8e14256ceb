"""Acceptance gate: one test and one PASS/FAIL line per criterion."""

import itertools
import time

import numpy as np

from quivmon.fields import det_mod
from quivmon.normal_form import Trace, Verdict, decide_equal, partial_normal_form, satisfies_pnf, word_to_product
from quivmon.oracle import (
    all_keys,
    dynkin_equal,
    FqRep,
    end_dim,
    enumerate_reps,
    family_hom,
    generic_ext_oracle,
    variety_dim,
    variety_points,
)
from quivmon.qalgebra import (
    NCPoly,
    graded_ideal_dim,
    q0_relations,
    q_binomial,
    serre_relations,
    specialize_q0,
    u0_monomials_equal,
)
from quivmon.quiver import (
    Quiver,
    a2,
    a3_linear,
    a3_sink,
    ambient_dims,
    double_kronecker_chain,
    euler_form,
    generalized_kronecker,
    kronecker,
)
from quivmon.schofield import (
    canonical_decomposition,
    drel3_threshold,
    ext_value,
    ext_vanishes,
    vectors_of_total,
)
from quivmon.words import (
    codim_lower_bound,
    hasse_diagram,
    v_function,
    word_degree,
    word_leq,
    words_of_degree,
    zero_pattern,
)

from conftest import ACCEPTANCE_LINES, DYNKIN_SMALL
from fixtures import (
    ALPHA_PATTERN,
    BETA_PATTERN,
    CHAIN_HASSE_EDGES,
    CHAIN_HASSE_NODES,
    SINK_V,
    SINK_WORD,
    pattern_text,
)

TEST_QUIVERS = DYNKIN_SMALL + [kronecker(), generalized_kronecker(3), double_kronecker_chain()]


def report(n, title, failures, started):
    status = "PASS" if not failures else "FAIL"
    line = f"{status} criterion {n}: {title} ({time.perf_counter() - started:.1f}s)"
    if failures:
        line += f"; {len(failures)} failure(s), first: {failures[0]}"
    ACCEPTANCE_LINES[n] = line
    print(line)
    assert not failures, line


def small_vectors(Q, top):
    return [d for s in range(1, top + 1) for d in vectors_of_total(Q, s)]


def test_criterion_01_v_function():
    t = time.perf_counter()
    got = v_function(SINK_WORD)
    report(1, "v-function of the 21-letter word", [] if got == SINK_V else [got], t)


def test_criterion_02_zero_patterns():
    t = time.perf_counter()
    Q = a3_sink()
    masks = zero_pattern(Q, SINK_WORD)
    texts = [pattern_text(m) for m in masks]
    fails = [] if texts == [ALPHA_PATTERN, BETA_PATTERN] else [texts]
    report(2, "zero patterns 8x7 and 8x6", fails, t)


def test_criterion_03_hasse():
    t = time.perf_counter()
    G = hasse_diagram(double_kronecker_chain(), (1, 2, 1))
    nodes = {"".join(w) for w in G.nodes}
    edges = {("".join(a), "".join(b)) for a, b in G.edges}
    fails = []
    if nodes != CHAIN_HASSE_NODES:
        fails.append(("nodes", nodes ^ CHAIN_HASSE_NODES))
    if edges != CHAIN_HASSE_EDGES:
        fails.append(("edges", edges ^ CHAIN_HASSE_EDGES))
    report(3, "Hasse diagram of i=>j=>k at (1,2,1)", fails, t)


def test_criterion_04_schofield_engine():
    t = time.perf_counter()
    fails = []
    if not ext_vanishes(generalized_kronecker(3), (2, 3), (3, 1)):
        fails.append("ext((2,3),(3,1)) on the 3-Kronecker quiver does not vanish")
    for n in range(1, 4):
        Q = generalized_kronecker(n)
        for k in range(1, n + 1):
            # the law is stated for x >= k
            for x in range(k, 6):
                p = drel3_threshold(n, k, x)
                for y in range(0, 21):
                    if ext_vanishes(Q, (x, y), (1, k)) != (y >= p):
                        fails.append((n, k, x, y))
    report(4, "3-Kronecker ext fixture and power threshold law", fails, t)


def test_criterion_05_oracle_engine_agreement():
    t = time.perf_counter()
    fails = []
    for Q in (a2(), kronecker()):
        vecs = small_vectors(Q, 3)
        for q in (2, 3):
            for e, d in itertools.product(vecs, vecs):
                a, b = generic_ext_oracle(Q, e, d, q), ext_value(Q, e, d)
                if a != b:
                    fails.append((Q.arrows, q, e, d, a, b))
    report(5, "generic ext oracle equals ext_value, |d|,|e| <= 3, q = 2, 3", fails, t)


def test_criterion_06_kronecker_facts():
    t = time.perf_counter()
    Q = kronecker()
    fails = []
    if variety_points(Q, "12", 2).members != all_keys(Q, (1, 1), 2):
        fails.append("E_(12) != R_(1,1)")
    E21 = variety_points(Q, "21", 2).members
    zero = FqRep.zero(Q, 2, (1, 1)).key()
    if E21 != {zero}:
        fails.append("E_(21) != {0}")
    full = all_keys(Q, (2, 2), 2)
    for w in ("1212", "1122"):
        if variety_points(Q, w, 2).members != full:
            fails.append(f"E_({w}) != R_(2,2)")
    report(6, "Kronecker monoid facts over F_2", fails, t)


def test_criterion_07_determinant():
    t = time.perf_counter()
    Q = double_kronecker_chain()
    fails = []
    for q in (2, 3):
        E = variety_points(Q, "jijk", q)
        for X in enumerate_reps(Q, (1, 2, 1), q):
            A = np.hstack([X.mats[0], X.mats[1]])
            if (X in E) != (det_mod(A, q) == 0):
                fails.append((q, X.key()))
        both = E.members & variety_points(Q, "ijkj", q).members
        inner = variety_points(Q, "jikj", q).members
        if not len(both) > len(inner):
            fails.append((q, len(both), len(inner)))
    report(7, "E_(jijk) is det A = 0 and the intersection is strictly larger than E_(jikj)", fails, t)


def test_criterion_08_relations_and_inclusions():
    t = time.perf_counter()
    fails = []
    # relation instances between simples
    free = Quiver(("i", "j"), ())
    if not (variety_points(free, "ij", 2).members == all_keys(free, (1, 1), 2) == variety_points(free, "ji", 2).members):
        fails.append("no arrow: ij, i+j, ji")
    A2 = a2()
    for w1, w2 in [("iji", "iij"), ("jij", "ijj"), ("jiiij", "jiiji")]:
        if variety_points(A2, w1, 2) != variety_points(A2, w2, 2):
            fails.append((w1, w2))
    if not variety_points(A2, "jiiji", 2).members < variety_points(A2, "ijiji", 2).members:
        fails.append("E_(jiiji) not strictly inside E_(ijiji)")
    # nesting for every comparable pair
    for Q in TEST_QUIVERS:
        for d in small_vectors(Q, 4):
            ws = words_of_degree(Q, d)
            pts = {w: variety_points(Q, w, 2).members for w in ws}
            for w1, w2 in itertools.permutations(ws, 2):
                if word_leq(Q, w1, w2) and not pts[w1] >= pts[w2]:
                    fails.append((Q.arrows, w1, w2))
    report(8, "relation instances and nesting for w <= w', |d| <= 4", fails, t)


def _codim(Q, w):
    d = word_degree(Q, w)
    return ambient_dims(Q, d)[0] - variety_dim(Q, w, 2, dynkin=True)[1]


def test_criterion_09_dimension_bounds():
    t = time.perf_counter()
    fails = []
    # pinned equality cases
    K = kronecker()
    lower, _ = variety_dim(K, "21", 2)
    if not (len(variety_points(K, "21", 2)) == 1 and lower == 0 and codim_lower_bound(K, "21") == 2):
        fails.append("Kronecker (21)")
    if not (codim_lower_bound(a2(), "ji") == 1 == _codim(a2(), "ji")):
        fails.append("A2 (ji)")
    for Q in DYNKIN_SMALL:
        words = [w for s in range(1, 6) for w in itertools.product(Q.vertices, repeat=s)]
        for w in words:
            if _codim(Q, w) < codim_lower_bound(Q, w):
                fails.append(("dimest", Q.arrows, w))
        for s in range(2, 6):
            for w in itertools.product(Q.vertices, repeat=s):
                for cut in range(1, s):
                    fails += _check_product_bounds(Q, w[:cut], w[cut:])
    report(9, "codimension estimate and product codimension bounds on A2/A3", fails, t)


def _check_product_bounds(Q, wa, wb):
    # A = E_wa sits on top of B = E_wb in A * B = E_(wa wb)
    d, e = word_degree(Q, wa), word_degree(Q, wb)
    A, B = variety_points(Q, wa, 2), variety_points(Q, wb, 2)
    cA, cB, cAB = _codim(Q, wa), _codim(Q, wb), _codim(Q, wa + wb)
    hom_BA = family_hom(Q, B, A, top_only=True)
    ext_BA = hom_BA - euler_form(Q, e, d)
    ext_AB = family_hom(Q, A, B, top_only=True) - euler_form(Q, d, e)
    low, high = cA + cB - euler_form(Q, e, d), cA + cB + ext_BA
    out = []
    if not low <= cAB <= high:
        out.append(("bounds", Q.arrows, wa, wb, low, cAB, high))
    if hom_BA == 0 and cAB != low:
        out.append(("hom equality", Q.arrows, wa, wb))
    full = cA == 0 and cB == 0
    if (ext_AB == 0 or full) and cAB != high:
        out.append(("ext equality", Q.arrows, wa, wb))
    return out


def test_criterion_10_q_zero_algebra():
    t = time.perf_counter()
    fails = []
    for n in range(0, 5):
        Q = generalized_kronecker(n)
        r1, r2 = serre_relations(Q, "i", "j")
        e1 = NCPoly({("i",) * (n + 1) + ("j",): 1, ("i",) * n + ("j", "i"): -1})
        e2 = NCPoly({("i",) + ("j",) * (n + 1): 1, ("j", "i") + ("j",) * n: -1})
        if specialize_q0(r1) != e1 or specialize_q0(r2) != e2:
            fails.append(("q=0 relations", n))
    for M in range(7):
        for N in range(7):
            if q_binomial(M, N).constant_term() != 1:
                fails.append(("binomial", M, N))
    K = kronecker()
    if graded_ideal_dim(K, q0_relations(K), (2, 2))[0] != 0:
        fails.append("ideal component at (2,2) is not zero")
    if u0_monomials_equal(K, "1212", "1122"):
        fails.append("monomials 1212 and 1122 equal at q = 0")
    if variety_points(K, "1212", 2) != variety_points(K, "1122", 2):
        fails.append("families 1212 and 1122 differ")
    report(10, "q = 0 relations, binomial constant terms, non-injectivity witness", fails, t)


def test_criterion_11_normal_form():
    t = time.perf_counter()
    fails = []
    for Q in TEST_QUIVERS:
        for s in range(1, 7):
            for w in itertools.product(Q.vertices, repeat=s):
                trace = Trace()
                out = partial_normal_form(Q, word_to_product(Q, w), trace=trace)
                if not all(b < a for a, b in zip(trace.measures, trace.measures[1:])):
                    fails.append(("measure", Q.arrows, w))
                if not satisfies_pnf(Q, out):
                    fails.append(("pnf condition", Q.arrows, w))
    for Q in DYNKIN_SMALL:
        for d in small_vectors(Q, 4):
            for w1, w2 in itertools.combinations(words_of_degree(Q, d), 2):
                ours = decide_equal(Q, word_to_product(Q, w1), word_to_product(Q, w2)) is Verdict.EQUAL
                if ours != dynkin_equal(Q, w1, w2, dynkin=True):
                    fails.append(("decide_equal", Q.arrows, w1, w2, ours))
    report(11, "partial normal form termination and decide_equal on Dynkin quivers", fails, t)


def _generic_end(Q, f):
    return min(end_dim(X) for X in enumerate_reps(Q, f, 2))


def test_criterion_12_canonical_decomposition():
    t = time.perf_counter()
    fails = []
    for Q in TEST_QUIVERS:
        for d in small_vectors(Q, 6):
            if canonical_decomposition(Q, d) != canonical_decomposition(Q, d, reverse=True):
                fails.append(("split order", Q.arrows, d))
    K, A2 = kronecker(), a2()
    pinned = [(K, (2, 2), [(1, 1), (1, 1)]), (A2, (2, 1), [(1, 0), (1, 1)])]
    for Q, d, expect in pinned:
        got = canonical_decomposition(Q, d)
        if sorted(got) != sorted(expect):
            fails.append(("pinned", d, got))
    # oracle cross-check: summands are Schur and pairwise ext-orthogonal over F_2
    for Q in (A2, K):
        for d in small_vectors(Q, 4):
            if sum(d[t] * d[h] for t, h in Q.arrow_indices) > 8:
                continue
            parts = canonical_decomposition(Q, d)
            for f in set(parts):
                if _generic_end(Q, f) != 1:
                    fails.append(("summand not Schur", d, f))
            for a, b in itertools.permutations(range(len(parts)), 2):
                if generic_ext_oracle(Q, parts[a], parts[b], 2) != 0:
                    fails.append(("summands not orthogonal", d, parts[a], parts[b]))
            if len(parts) > 1 and _generic_end(Q, d) == 1:
                fails.append(("decomposable d is Schur in the oracle", d))
    report(12, "canonical decomposition: split-order independence, pinned values, oracle cross-check", fails, t)
