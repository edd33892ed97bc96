"""Acceptance suite: every criterion at its stated scale and tolerance
(all tolerances exact), one pass/fail line printed per criterion.

Criteria 5-8 are the long family sweeps; the whole suite stays well inside
the stated runtime budgets on commodity hardware.
"""

import random
import time
from itertools import combinations

from edge_ideal_lab.graphs import complete_bipartite, delete_closed_neighborhood, ferrers_graph
from edge_ideal_lab.complexes import (
    SimplicialComplex,
    connected_in_codim,
    independence_complex,
)
from edge_ideal_lab.homology import GF2, RATIONALS, boundary_matrices, reduced_betti
from edge_ideal_lab.invariants import (
    classify,
    classify_graph,
    connected_in_codim_ideal,
    ferrers_invariants,
    graph_is_acm,
    graph_is_cm,
    minimal_primes,
    prime_witness_sequence,
    reisner_cm,
)
from edge_ideal_lab.theorems import (
    check_MV,
    check_T2,
    check_T3,
    check_ferrers,
    enumerate_complexes,
    random_complex,
)
from edge_ideal_lab.worked_examples import (
    ASS_4X4,
    ASS_6X6,
    staircase_4x4_graph,
    unmixed_6x6_graph,
)


def stamp(num, desc, t0, budget):
    elapsed = time.time() - t0
    print(f"ACCEPTANCE {num:2d} PASS ({elapsed:6.1f}s / {budget}s budget): {desc}")
    assert elapsed < budget


def test_criterion_01_example_6x6():
    t0 = time.time()
    g = unmixed_6x6_graph()
    rep = classify_graph(g)
    assert rep.krull_dim == 6
    assert rep.depth == 4
    assert rep.is_ACM is False
    mp = minimal_primes(independence_complex(g))
    assert frozenset(frozenset(p) for p in mp.primes) == ASS_6X6
    stamp(1, "6x6 example: dim 6, depth 4, not aCM, 5 primes exact", t0, 60)


def test_criterion_02_example_4x4():
    t0 = time.time()
    g = staircase_4x4_graph()
    rep = classify_graph(g)
    assert rep.is_unmixed is False
    mp = minimal_primes(independence_complex(g))
    assert frozenset(frozenset(p) for p in mp.primes) == ASS_4X4
    assert rep.height == 4
    assert connected_in_codim_ideal(mp, rep.height, 2) is True
    seq = prime_witness_sequence(mp, rep.height, 2, ("x1", "x2", "x3", "x4"),
                                 ("y1", "y2", "y3", "y4"))
    assert seq is not None
    assert all(len(set(a) | set(b)) <= 6 for a, b in zip(seq, seq[1:]))
    stamp(2, "4x4 example: 4 primes exact, codim-2 witness heights <= 6, mixed", t0, 5)


def test_criterion_03_t5_counterexample_pinned():
    t0 = time.time()
    g = unmixed_6x6_graph()
    h = delete_closed_neighborhood(g, ["x6"])
    k = delete_closed_neighborhood(g, ["y5", "y6"])
    assert graph_is_acm(h) is True
    assert graph_is_acm(k) is True
    assert graph_is_cm(k) is False
    assert graph_is_acm(g) is False
    stamp(3, "pinned trio: H aCM, K aCM but not CM, G not aCM", t0, 60)


def test_criterion_04_complete_bipartite_table():
    t0 = time.time()
    for m in range(1, 5):
        for n in range(1, m + 1):
            expect = m <= 2
            assert classify_graph(complete_bipartite(m, n)).is_ACM == expect
            assert classify_graph(complete_bipartite(n, m)).is_ACM == expect
    stamp(4, "complete bipartite aCM iff larger side <= 2, sides <= 4", t0, 30)


def test_criterion_05_degree_bound_sweep():
    t0 = time.time()
    result = check_T3(max_vertices=10, jobs=2)
    assert result.counterexamples == ()
    assert result.instances_checked + result.vacuous == 5015
    stamp(5, f"aCM => min degree <= 2 on all {5015} connected bipartite classes "
             f"<= 10 vertices ({result.instances_checked} aCM)", t0, 600)


def test_criterion_06_codim2_sweep():
    t0 = time.time()
    result = check_T2(max_exhaustive=5, n_random=10000)
    assert result.counterexamples == ()
    stamp(6, f"aCM => codim-2 connected, exhaustive <= 5 vertices + 10000 random "
             f"({result.instances_checked} aCM instances)", t0, 600)


def test_criterion_07_ferrers_equivalence():
    t0 = time.time()
    result = check_ferrers(max_n=6)
    assert result.counterexamples == ()
    assert result.instances_checked == 63  # unmixed partitions with n <= 6
    stamp(7, "unmixed staircase: aCM iff codim-2 connected, closed forms match sweep",
          t0, 300)


def test_criterion_08_reisner_oracle_crosscheck():
    t0 = time.time()
    mismatches = []
    for n in range(0, 6):
        for d in enumerate_complexes(n):
            for f in (RATIONALS, GF2):
                rep = classify(d, f)
                if reisner_cm(d, f) != (rep.depth == rep.krull_dim):
                    mismatches.append((n, d.facets, f.label))
    assert mismatches == []
    stamp(8, "Reisner CM iff depth = dim on all complexes <= 5 vertices, Q and GF(2)",
          t0, 300)


def test_criterion_09_homology_sanity():
    t0 = time.time()
    # spheres: boundary of the d-simplex has one class in level d-1
    for d in range(1, 7):
        verts = [f"v{i}" for i in range(d + 1)]
        cx = SimplicialComplex(verts, list(combinations(verts, d)))
        assert reduced_betti(cx).nonzero() == {d - 1: 1}
    rng = random.Random(90)
    for _ in range(250):
        cx = random_complex(rng, rng.randint(2, 7))
        apex = "z!"
        cone = SimplicialComplex(tuple(cx.ground) + (apex,),
                                 [tuple(f) + (apex,) for f in cx.facets])
        assert reduced_betti(cone).nonzero() == {}
    for _ in range(100):
        cx = random_complex(rng, rng.randint(2, 8))
        for f in (RATIONALS, GF2):
            bm = boundary_matrices(cx, f)
            p = f.p
            for l in bm.levels():
                if l + 1 not in bm.levels():
                    continue
                a, b = bm.matrix(l), bm.matrix(l + 1)
                for i in range(len(a)):
                    for j in range(len(b[0])):
                        s = sum(a[i][k] * b[k][j] for k in range(len(b)))
                        assert (s % p if p else s) == 0
    for _ in range(1000):
        cx = random_complex(rng, rng.randint(2, 7))
        bv = reduced_betti(cx)
        f_alt = sum(
            (-1) ** (len(s) - 1)
            for k in range(1, len(cx.ground) + 1)
            for s in combinations(cx.ground, k)
            if cx.has_face(s)
        )
        assert bv.reduced_euler() == f_alt - 1
    stamp(9, "spheres, cones, boundary-squared-zero, Euler identity on 1000 random",
          t0, 60)


def test_criterion_10_mayer_vietoris():
    t0 = time.time()
    result = check_MV(n_cases=200)
    assert result.counterexamples == ()
    assert result.instances_checked == 200
    stamp(10, "Mayer-Vietoris exact on 200 random facet splits", t0, 120)
