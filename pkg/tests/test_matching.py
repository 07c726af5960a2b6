from itertools import product

import pytest

import monocert as mc
from monocert.graphs import Graph, InternalInconsistencyError
from monocert.matching import (
    MatchingTargets,
    extend_with_color_zero,
    find_mono_matching,
    find_mono_matching_kiraly,
    find_properly_colored_cycle,
    kiraly_reduce,
    lift_matching,
    maximum_matching,
    ramsey_matching_number,
)
from monocert.hunter import random_graph
from monocert.verify import check_matching_certificate, check_reduced_instance

from oracles import matching_number_recursive, matching_number_subsets


def test_targets_validation():
    MatchingTargets((3, 2, 2))
    with pytest.raises(ValueError):
        MatchingTargets((2, 3))
    with pytest.raises(ValueError):
        MatchingTargets((2, 0))
    with pytest.raises(ValueError):
        MatchingTargets(())
    assert MatchingTargets.of([1, 3, 2]).targets == (3, 2, 1)


def test_ramsey_matching_number_values():
    assert ramsey_matching_number(MatchingTargets((1,))) == 2
    assert ramsey_matching_number(MatchingTargets((2, 2))) == 5
    assert ramsey_matching_number(MatchingTargets((3, 2))) == 7
    assert ramsey_matching_number(MatchingTargets((3, 3))) == 8
    assert ramsey_matching_number(MatchingTargets((2, 2, 2))) == 6


def test_maximum_matching_examples(c5, petersen):
    assert maximum_matching(mc.complete_graph(4)) == [(0, 1), (2, 3)]
    assert len(maximum_matching(c5)) == 2
    assert len(maximum_matching(petersen)) == 5
    assert maximum_matching(Graph.from_edges(3, [])) == []
    # two triangles joined by a bridge: odd components force blossoms
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
    assert len(maximum_matching(g)) == 3


def test_maximum_matching_is_a_matching(rng):
    for _ in range(100):
        g = random_graph(rng.randint(0, 12), rng.choice([0.2, 0.5, 0.8]), rng)
        mm = maximum_matching(g)
        ends = [v for e in mm for v in e]
        assert len(ends) == len(set(ends))
        assert all(g.has_edge(u, v) for u, v in mm)
        assert len(mm) == matching_number_recursive(g)


def test_maximum_matching_matches_subset_oracle(rng):
    for _ in range(30):
        g = random_graph(rng.randint(1, 8), 0.5, rng)
        if g.m <= 16:
            assert len(maximum_matching(g)) == matching_number_subsets(g)


def test_maximum_matching_atlas(atlas7):
    for g in atlas7:
        assert len(maximum_matching(g)) == matching_number_recursive(g)


def test_find_mono_matching_exhaustive_k5():
    # chi(K5) = 5 = ramsey number of (2,2), so every 2-coloring carries
    # a monochromatic 2-matching
    g = mc.complete_graph(5)
    targets = MatchingTargets((2, 2))
    edges = g.edges()
    for bits in product((1, 2), repeat=len(edges)):
        ec = mc.EdgeColoring(2, dict(zip(edges, bits)))
        cert = find_mono_matching(g, ec, targets, chi_lower=5)
        assert cert is not None
        assert len(cert.edges) == cert.target == 2
        assert check_matching_certificate(g, ec, cert) == []


def test_find_mono_matching_none_when_avoidable():
    # a star has matching number 1 regardless of the coloring
    h = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    hec = mc.EdgeColoring(2, {(0, 1): 1, (0, 2): 1, (0, 3): 2})
    assert find_mono_matching(h, hec, MatchingTargets((2, 2))) is None
    assert find_mono_matching(h, hec, MatchingTargets((1, 1))) is not None


def test_find_mono_matching_rejects_false_bound():
    h = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    hec = mc.EdgeColoring(2, {(0, 1): 1, (0, 2): 1, (0, 3): 2})
    with pytest.raises(InternalInconsistencyError):
        find_mono_matching(h, hec, MatchingTargets((2, 2)), chi_lower=5)
    with pytest.raises(ValueError):
        find_mono_matching(h, hec, MatchingTargets((2, 2, 2)))


def test_certificate_json_round_trip():
    cert = mc.MatchingCertificate(2, 2, ((0, 1), (2, 3)))
    assert mc.MatchingCertificate.from_json(cert.to_json()) == cert


def test_check_matching_certificate_catches_tampering(c5):
    ec = mc.EdgeColoring(2, {e: 1 for e in c5.edges()})
    good = mc.MatchingCertificate(1, 2, ((0, 1), (2, 3)))
    assert check_matching_certificate(c5, ec, good) == []
    assert check_matching_certificate(c5, ec, mc.MatchingCertificate(2, 2, ((0, 1), (2, 3))))
    assert check_matching_certificate(c5, ec, mc.MatchingCertificate(1, 2, ((0, 1), (1, 2))))
    assert check_matching_certificate(c5, ec, mc.MatchingCertificate(1, 2, ((0, 1),)))
    assert check_matching_certificate(c5, ec, mc.MatchingCertificate(1, 1, ((0, 2),)))


# ---------------------------------------------------------------------------
# reduction route

def test_kiraly_reduce_c5(c5):
    ec = mc.EdgeColoring(2, {e: 1 if e[0] == 0 else 2 for e in c5.edges()})
    vc = mc.VertexColoring(3, (0, 1, 0, 1, 2))
    ri = kiraly_reduce(c5, ec, vc)
    assert ri.k == 3 and ri.t == 2
    assert set(ri.edge_color) == {(0, 1), (0, 2), (1, 2)}
    for pair, (u, v) in ri.provenance.items():
        assert c5.has_edge(u, v)
        assert ri.edge_color[pair] == ec.color_of(u, v)
    assert check_reduced_instance(c5, ec, ri) == []


def test_kiraly_reduce_merges_disconnected_classes():
    # two disjoint edges, 2-colored; the two classes of the proper coloring
    # that pair non-adjacent vertices get merged down to k=1 ... build a
    # case where classes {0,2} and {1,3} cross, but {0,1} vs {2,3} do not
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    ec = mc.EdgeColoring(1, {(0, 1): 1, (2, 3): 1})
    vc = mc.VertexColoring(2, (0, 1, 0, 1))
    ri = kiraly_reduce(g, ec, vc)
    assert ri.k == 2
    assert ri.edge_color == {(0, 1): 1}
    # now a coloring whose classes have no crossing edges at all
    vc2 = mc.VertexColoring(2, (0, 0, 1, 1))
    with pytest.raises(ValueError):
        kiraly_reduce(g, ec, vc2)  # not proper: (0,1) inside class 0


def test_kiraly_reduce_merge_to_single_class():
    g = Graph.from_edges(2, [])
    ec = mc.EdgeColoring(1, {})
    vc = mc.VertexColoring(2, (0, 1))
    ri = kiraly_reduce(g, ec, vc)
    assert ri.k == 1 and ri.edge_color == {}


def test_kiraly_reduce_picks_smallest_color():
    # both edges of P3 cross the same class pair; the smaller color wins
    p3 = mc.path_graph(3)
    ec = mc.EdgeColoring(2, {(0, 1): 2, (1, 2): 1})
    vc = mc.VertexColoring(2, (0, 1, 0))
    ri = kiraly_reduce(p3, ec, vc)
    assert ri.k == 2
    assert ri.edge_color == {(0, 1): 1}
    assert ri.provenance == {(0, 1): (1, 2)}


def test_lift_matching_validation():
    g = mc.complete_graph(4)
    ec = mc.EdgeColoring(2, {e: 1 for e in g.edges()})
    vc = mc.VertexColoring(4, (0, 1, 2, 3))
    ri = kiraly_reduce(g, ec, vc)
    assert lift_matching(ri, [(0, 1), (2, 3)], 1) == [(0, 1), (2, 3)]
    assert lift_matching(ri, [(1, 0)], 1) == [(0, 1)]
    with pytest.raises(ValueError):
        lift_matching(ri, [(0, 1), (1, 2)], 1)  # class 1 reused
    with pytest.raises(ValueError):
        lift_matching(ri, [(0, 1)], 2)  # wrong color
    with pytest.raises(ValueError):
        lift_matching(ri, [(0, 9)], 1)


def test_reduction_route_end_to_end(rng, random_coloring):
    g = mc.complete_graph(7)
    targets = MatchingTargets((3, 2))
    for _ in range(100):
        ec = random_coloring(g, 2, rng)
        vc = mc.chi_exact(g).witness
        cert = find_mono_matching_kiraly(g, ec, vc, targets, chi_lower=7)
        assert cert is not None
        assert check_matching_certificate(g, ec, cert) == []
        direct = find_mono_matching(g, ec, targets, chi_lower=7)
        assert direct is not None
        assert check_matching_certificate(g, ec, direct) == []


def test_reduction_route_agrees_with_direct(rng, random_coloring):
    # on arbitrary hosts neither route may find anything, but when the
    # reduction route succeeds its certificate must verify
    targets = MatchingTargets((2, 2))
    for _ in range(60):
        g = random_graph(8, 0.6, rng)
        r = mc.chi_exact(g)
        if r.upper < 2:
            continue
        ec = random_coloring(g, 2, rng)
        cert = find_mono_matching_kiraly(g, ec, r.witness, targets)
        if cert is not None:
            assert check_matching_certificate(g, ec, cert) == []


# ---------------------------------------------------------------------------
# extended colorings and properly colored cycles

def test_extend_with_color_zero(c5):
    ec = mc.EdgeColoring(2, {e: 1 for e in c5.edges()})
    kg, ext = extend_with_color_zero(c5, ec)
    assert kg.m == 10 and ext.extended
    assert ext.color_of(0, 2) == 0 and ext.color_of(0, 1) == 1
    with pytest.raises(ValueError):
        extend_with_color_zero(c5, ext)


def test_properly_colored_cycle_found():
    g = mc.complete_graph(3)
    ec = mc.EdgeColoring(3, {(0, 1): 1, (1, 2): 2, (0, 2): 3})
    cyc = find_properly_colored_cycle(g, ec)
    assert cyc is not None and sorted(cyc) == [0, 1, 2]


def test_properly_colored_cycle_absent():
    g = mc.complete_graph(3)
    ec = mc.EdgeColoring(2, {(0, 1): 1, (1, 2): 1, (0, 2): 2})
    assert find_properly_colored_cycle(g, ec) is None
    c4 = mc.cycle_graph(4)
    mono = mc.EdgeColoring(1, {e: 1 for e in c4.edges()})
    assert find_properly_colored_cycle(c4, mono) is None


def test_properly_colored_cycle_uses_color_zero(c5):
    # all of C5 in color 1: proper cycles must alternate with chord color 0
    ec = mc.EdgeColoring(1, {e: 1 for e in c5.edges()})
    kg, ext = extend_with_color_zero(c5, ec)
    cyc = find_properly_colored_cycle(kg, ext)
    assert cyc is not None
    k = len(cyc)
    assert k >= 3
    cols = [ext.color_of(cyc[i], cyc[(i + 1) % k]) for i in range(k)]
    assert all(cols[i] != cols[(i + 1) % k] for i in range(k))


def test_properly_colored_cycle_guard():
    g = mc.complete_graph(13)
    ec = mc.EdgeColoring(1, {e: 1 for e in g.edges()})
    with pytest.raises(ValueError):
        find_properly_colored_cycle(g, ec)
    assert find_properly_colored_cycle(g, ec, max_n=13) is None
