"""Ring invariants: generators, primes, the Betti-table sweep against an
independent restriction-homology oracle, classification flags, the Reisner
criterion cross-check, prime-sequence connectivity, and staircase closed
forms."""

import random
from itertools import combinations

import pytest

from edge_ideal_lab.errors import DomainError, ResourceError
from edge_ideal_lab.graphs import (
    complete_bipartite,
    ferrers_graph,
    is_unmixed,
    parse_graph,
)
from edge_ideal_lab.complexes import (
    SimplicialComplex,
    connected_in_codim,
    dimension,
    independence_complex,
    is_pure,
    restrict,
)
from edge_ideal_lab.homology import GF2, RATIONALS, FieldSpec
from edge_ideal_lab.invariants import (
    BettiTable,
    classify,
    classify_graph,
    connected_in_codim_ideal,
    depth,
    ferrers_invariants,
    graph_is_acm,
    graph_is_cm,
    height,
    hochster_betti,
    krull_dim,
    minimal_primes,
    prime_witness_sequence,
    proj_dim,
    reisner_cm,
    stanley_reisner,
)
from edge_ideal_lab.theorems import bipartite_family, enumerate_complexes, random_complex
from edge_ideal_lab.worked_examples import staircase_4x4_graph, unmixed_6x6_graph

from test_homology import oracle_reduced_betti


def oracle_betti_table(d, p=0):
    """Oracle: restriction homology over every subset, computed by the
    independent dense routine."""
    out = {}
    ground = d.ground
    for k in range(len(ground) + 1):
        for w in combinations(ground, k):
            r = restrict(d, w)
            if r.is_void():
                continue
            for lvl, b in oracle_reduced_betti(r, p).items():
                out[(len(w) - 1 - lvl, w)] = b
    return out


# -- generators -----------------------------------------------------------------------

def test_stanley_reisner_k22():
    d = independence_complex(complete_bipartite(2, 2))
    gens = {frozenset(t) for t in stanley_reisner(d).generators}
    assert gens == {
        frozenset({"x1", "y1"}), frozenset({"x1", "y2"}),
        frozenset({"x2", "y1"}), frozenset({"x2", "y2"}),
    }


def test_stanley_reisner_full_simplex_zero_ideal():
    d = SimplicialComplex("abc", [("a", "b", "c")])
    assert stanley_reisner(d).generators == ()


def test_stanley_reisner_4x4_thirteen_generators():
    d = independence_complex(staircase_4x4_graph())
    gens = stanley_reisner(d).generators
    assert len(gens) == 13
    assert {frozenset(t) for t in gens} == {
        frozenset(e) for e in staircase_4x4_graph().edges()
    }


def test_stanley_reisner_empty_complex_generates_all_variables():
    d = SimplicialComplex("abc", [()])
    assert {frozenset(t) for t in stanley_reisner(d).generators} == {
        frozenset({v}) for v in "abc"
    }


def test_stanley_reisner_generators_form_antichain_and_are_nonfaces():
    rng = random.Random(8)
    for _ in range(40):
        d = random_complex(rng, rng.randint(2, 6))
        gens = stanley_reisner(d).generators
        sets = [frozenset(t) for t in gens]
        assert not any(a < b for a in sets for b in sets)
        for s in sets:
            assert not d.has_face(s)
            for v in s:
                assert d.has_face(s - {v})


# -- primes / height ---------------------------------------------------------------------

def test_minimal_primes_worked_examples():
    d4 = independence_complex(staircase_4x4_graph())
    got4 = {frozenset(p) for p in minimal_primes(d4).primes}
    assert got4 == {
        frozenset({"x1", "x2", "x3", "x4"}),
        frozenset({"x2", "x3", "x4", "y1", "y2"}),
        frozenset({"x3", "x4", "y1", "y2", "y3"}),
        frozenset({"y1", "y2", "y3", "y4"}),
    }
    d6 = independence_complex(unmixed_6x6_graph())
    got6 = {frozenset(p) for p in minimal_primes(d6).primes}
    assert got6 == {
        frozenset({"x1", "x2", "x3", "x4", "x5", "x6"}),
        frozenset({"x1", "x2", "x3", "x4", "y5", "y6"}),
        frozenset({"x1", "x2", "x5", "x6", "y3", "y4"}),
        frozenset({"x1", "x2", "y3", "y4", "y5", "y6"}),
        frozenset({"y1", "y2", "y3", "y4", "y5", "y6"}),
    }


def test_minimal_primes_full_simplex():
    d = SimplicialComplex("ab", [("a", "b")])
    assert minimal_primes(d).primes == ((),)


def test_height_goldens():
    assert height(independence_complex(parse_graph("x y"))) == 1
    assert height(independence_complex(staircase_4x4_graph())) == 4
    assert height(independence_complex(unmixed_6x6_graph())) == 6


# -- Betti tables ------------------------------------------------------------------------

def test_hochster_full_simplex():
    d = SimplicialComplex("abc", [("a", "b", "c")])
    t = hochster_betti(d)
    assert t.entries == {(0, ()): 1}
    assert t.proj_dim() == 0


def test_hochster_single_edge():
    d = independence_complex(parse_graph("x y"))
    t = hochster_betti(d)
    assert t.entries == {(0, ()): 1, (1, ("x", "y")): 1}


def test_hochster_k22_pd3():
    d = independence_complex(complete_bipartite(2, 2))
    t = hochster_betti(d)
    assert t.proj_dim() == 3
    assert t.entries == oracle_betti_table(d)
    assert depth(d) == 1


def test_hochster_matches_oracle_on_random_complexes():
    rng = random.Random(77)
    for _ in range(25):
        d = random_complex(rng, rng.randint(2, 5))
        for p in (0, 2):
            assert hochster_betti(d, FieldSpec(p)).entries == oracle_betti_table(d, p)


def test_hochster_matches_oracle_on_graphs():
    for g in bipartite_family(5):
        d = independence_complex(g)
        assert hochster_betti(d).entries == oracle_betti_table(d)


def test_hochster_resource_guard():
    d = SimplicialComplex([f"v{i}" for i in range(25)], [()])
    with pytest.raises(ResourceError):
        hochster_betti(d)


def test_betti_table_aggregation_and_rows():
    d = independence_complex(complete_bipartite(2, 2))
    t = hochster_betti(d)
    assert t.by_degree() == {(0, 0): 1, (1, 2): 4, (2, 3): 4, (3, 4): 1}
    rows = t.rows()
    assert rows == sorted(rows)
    assert all(v > 0 for _, _, v in rows)


def test_uncovered_ground_vertex_shifts_pd():
    d = SimplicialComplex("ab", [("a",)])  # b is a face-free variable
    t = hochster_betti(d)
    assert t.proj_dim() == 1
    assert krull_dim(d) == 1 and depth(d) == 1


# -- dimensions / classification -------------------------------------------------------------

def test_dim_depth_goldens():
    d6 = independence_complex(unmixed_6x6_graph())
    assert krull_dim(d6) == 6
    assert depth(d6) == 4
    d1 = independence_complex(parse_graph("x y"))
    assert krull_dim(d1) == 1 and depth(d1) == 1
    dk = independence_complex(complete_bipartite(2, 2))
    assert krull_dim(dk) == 2 and depth(dk) == 1
    assert proj_dim(dk) == 3


def test_classify_goldens():
    r6 = classify_graph(unmixed_6x6_graph())
    assert r6.is_ACM is False and r6.is_unmixed is True and r6.depth == 4
    rk = classify_graph(complete_bipartite(2, 2))
    assert rk.is_ACM is True and rk.is_CM is False
    r11 = classify_graph(complete_bipartite(1, 1))
    assert r11.is_CM is True
    assert classify_graph(parse_graph("")).is_CM is True  # empty graph


def test_classify_graph_equals_classify_complex():
    for g in bipartite_family(7):
        assert classify_graph(g) == classify(independence_complex(g))


def test_classify_report_identities():
    rng = random.Random(4)
    for _ in range(30):
        d = random_complex(rng, rng.randint(2, 6))
        rep = classify(d)
        assert rep.krull_dim == rep.n_vars - rep.height
        assert rep.depth == rep.n_vars - rep.proj_dim
        assert rep.depth <= rep.krull_dim
        assert rep.is_ACM == (rep.depth >= rep.krull_dim - 1)
        assert rep.is_ACM or not rep.is_CM
        assert rep.is_unmixed == is_pure(d)


def test_acm_cm_deciders_match_reports():
    for g in bipartite_family(8):
        rep = classify_graph(g)
        assert graph_is_acm(g) == rep.is_ACM
        assert graph_is_cm(g) == rep.is_CM


def test_min_positive_degree():
    assert classify_graph(unmixed_6x6_graph()).min_positive_degree == 2
    assert classify_graph(parse_graph("")).min_positive_degree is None


# -- Reisner cross-check -------------------------------------------------------------------

def test_reisner_goldens():
    assert reisner_cm(SimplicialComplex("abc", [("a", "b", "c")])) is True
    assert reisner_cm(SimplicialComplex("ab", [("a",), ("b",)])) is True
    assert reisner_cm(independence_complex(complete_bipartite(2, 2))) is False


def test_reisner_agrees_with_depth_on_small_complexes():
    for n in range(0, 5):
        for d in enumerate_complexes(n):
            for f in (RATIONALS, GF2):
                rep = classify(d, f)
                assert reisner_cm(d, f) == (rep.depth == rep.krull_dim), d.facets


# -- connectivity duality ----------------------------------------------------------------------

def test_codim_duality_facet_vs_prime_form():
    rng = random.Random(12)
    samples = [random_complex(rng, rng.randint(2, 7)) for _ in range(60)]
    samples += [independence_complex(g) for g in bipartite_family(6)]
    for d in samples:
        ps = minimal_primes(d)
        ht = height(d)
        for k in range(0, 4):
            assert connected_in_codim(d, k) == connected_in_codim_ideal(ps, ht, k)


def test_prime_witness_4x4():
    d = independence_complex(staircase_4x4_graph())
    ps = minimal_primes(d)
    seq = prime_witness_sequence(ps, 4, 2, ("x1", "x2", "x3", "x4"),
                                 ("y1", "y2", "y3", "y4"))
    assert seq is not None and len(seq) == 4
    assert all(len(set(a) | set(b)) <= 6 for a, b in zip(seq, seq[1:]))


def test_single_prime_connected_for_all_k():
    d = SimplicialComplex("ab", [("a", "b")])
    ps = minimal_primes(d)
    for k in range(4):
        assert connected_in_codim_ideal(ps, height(d), k) is True


def test_codim1_connected_implies_unmixed_reported():
    # reporting-style check: collect violations instead of assuming
    violations = []
    for n in range(1, 5):
        for d in enumerate_complexes(n):
            if connected_in_codim(d, 1) and not is_pure(d):
                violations.append(d.facets)
    assert violations == [], f"codim-1-connected mixed complexes: {violations[:5]}"


# -- staircase closed forms ----------------------------------------------------------------------

def all_partitions(max_n, max_part):
    def rec(prefix, cap):
        if prefix:
            yield tuple(prefix)
        if len(prefix) == max_n:
            return
        for v in range(min(cap, max_part), 0, -1):
            prefix.append(v)
            yield from rec(prefix, v)
            prefix.pop()

    yield from rec([], max_part)


def test_ferrers_invariants_goldens():
    fi = ferrers_invariants((4, 4, 3, 2))
    assert (fi.height, fi.proj_dim, fi.unmixed) == (4, 5, False)
    assert len(fi.primes.primes) == 4
    fi = ferrers_invariants((3, 2, 1))
    assert (fi.height, fi.proj_dim, fi.unmixed) == (3, 3, True)
    fi = ferrers_invariants((3, 3, 1))
    assert (fi.height, fi.proj_dim, fi.unmixed) == (3, 4, True)
    fi = ferrers_invariants((1,))
    assert (fi.height, fi.proj_dim) == (1, 1)


def test_ferrers_closed_forms_match_sweep():
    for lam in all_partitions(5, 5):
        if len(lam) + lam[0] > 10:
            continue
        fi = ferrers_invariants(lam)
        g, _ = ferrers_graph(lam)
        d = independence_complex(g)
        rep = classify_graph(g)
        assert rep.height == fi.height, lam
        assert rep.proj_dim == fi.proj_dim, lam
        assert set(minimal_primes(d).primes) == set(fi.primes.primes), lam
        assert is_unmixed(g) == fi.unmixed, lam


def test_ferrers_4x4_primes_match_relabelled_paper_list():
    fi = ferrers_invariants((4, 4, 3, 2))
    relabel = {f"x{i}": f"x{5 - i}" for i in range(1, 5)}
    relabelled = {
        frozenset(relabel.get(v, v) for v in p) for p in fi.primes.primes
    }
    got4 = {frozenset(p) for p in minimal_primes(
        independence_complex(staircase_4x4_graph())).primes}
    assert relabelled == got4
