import pytest

from specconn.connectivity import CutMode, CutQuery, min_cut
from specconn.families import Family, FamilyParams, construct, witness_cut
from specconn.graphs import (
    Graph,
    canonical_form,
    complete_bipartite,
    complete_graph,
    components,
    cycle_graph,
    degree_profile,
    disjoint_union,
    from_edges,
    induced_subgraph,
    is_isomorphic,
    mask_of,
    permute,
    vertices_of,
    _brute_canonical_adj,
)
from conftest import random_graph


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (2, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (1,))  # self-loop
    with pytest.raises(ValueError):
        Graph(0, ())
    with pytest.raises(ValueError):
        Graph(65, (0,) * 65)
    with pytest.raises(ValueError):
        from_edges(3, [(0, 0)])


def test_components_of_cycle_minus_two():
    got = components(cycle_graph(5), mask_of([0, 2]))
    assert [vertices_of(m) for m in got] == [(1,), (3, 4)]


def test_complete_graph_is_connected():
    assert components(complete_graph(5)) == [mask_of(range(5))]


def test_components_of_family_witness():
    p = FamilyParams(Family.DELTA_0, 8, 3, 2, 1, 2)
    comps = components(construct(p), witness_cut(p))
    assert sorted(m.bit_count() for m in comps) == [2, 3]


def test_components_cover_and_are_disjoint(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 12), rng.random())
        removed = rng.randrange(1 << g.n)
        comps = components(g, removed)
        union = 0
        for m in comps:
            assert union & m == 0
            union |= m
        assert union == g.vertex_mask & ~removed
        assert (comps == []) == (removed & g.vertex_mask == g.vertex_mask)
        # sorted by least member
        leads = [vertices_of(m)[0] for m in comps]
        assert leads == sorted(leads)


def test_degree_profile_examples():
    assert degree_profile(complete_graph(4)) == (3, 3, (3, 3, 3, 3))
    star = complete_bipartite(1, 4)
    assert degree_profile(star) == (1, 4, (4, 1, 1, 1, 1))


def test_degree_profile_of_pendant_family():
    # the pendant vertex 0 attains the minimum degree
    p = FamilyParams(Family.ZERO_DELTA, 11, 1, 2, 3, 2)
    prof = degree_profile(construct(p))
    assert prof.min_degree == 2
    assert prof.degrees[0] == 2


def test_degree_sum_is_twice_edge_count(rng):
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 12), rng.random())
        assert sum(degree_profile(g).degrees) == 2 * g.edge_count()


def test_permute_and_induced_subgraph():
    g = from_edges(4, [(0, 1), (1, 2), (2, 3)])
    h = permute(g, [3, 2, 1, 0])
    assert sorted(h.edges()) == [(0, 1), (1, 2), (2, 3)]
    sub = induced_subgraph(g, mask_of([1, 2, 3]))
    assert sorted(sub.edges()) == [(0, 1), (1, 2)]
    with pytest.raises(ValueError):
        induced_subgraph(g, 0)


def test_canonical_form_invariant_under_relabeling():
    c5 = cycle_graph(5)
    assert canonical_form(c5) == canonical_form(permute(c5, [2, 4, 1, 0, 3]))


def test_canonical_form_separates_structures():
    two_triangles = disjoint_union(complete_graph(3), complete_graph(3))
    assert canonical_form(cycle_graph(6)) != canonical_form(two_triangles)
    assert not is_isomorphic(cycle_graph(6), two_triangles)


def test_canonical_size_cap():
    with pytest.raises(ValueError):
        canonical_form(complete_graph(13))


def test_canonical_partition_matches_brute_force(rng):
    # oracle: minimum over all n! relabelings; both functions must induce the
    # same isomorphism classes
    graphs = [random_graph(rng, rng.randint(2, 6), rng.choice([0.2, 0.5, 0.8]))
              for _ in range(150)]
    by_canon: dict = {}
    by_brute: dict = {}
    for i, g in enumerate(graphs):
        by_canon.setdefault((g.n, canonical_form(g)), set()).add(i)
        by_brute.setdefault((g.n, _brute_canonical_adj(g)), set()).add(i)
    assert sorted(map(sorted, by_canon.values())) == sorted(map(sorted, by_brute.values()))


def test_canonical_form_permutation_fuzz(rng):
    # 1000 random graphs of order <= 10, 100 random permutations each
    for _ in range(1000):
        n = rng.randint(2, 10)
        g = random_graph(rng, n, rng.choice([0.2, 0.4, 0.6, 0.8]))
        reference = canonical_form(g)
        perm = list(range(n))
        for _ in range(100):
            rng.shuffle(perm)
            assert canonical_form(permute(g, perm)) == reference


def test_isomorphism_on_symmetric_graphs():
    assert is_isomorphic(complete_bipartite(2, 3), permute(complete_bipartite(2, 3), [4, 2, 0, 3, 1]))
    assert not is_isomorphic(complete_graph(5), cycle_graph(5))
    assert not is_isomorphic(complete_graph(4), complete_graph(5))


def test_min_cut_respects_search_cap():
    with pytest.raises(ValueError):
        min_cut(complete_graph(21), CutQuery(0, 2, CutMode.CLASSIC))
