from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from etacalc.complexes import SimplicialComplex
from etacalc.constructions import (
    SplitMix64,
    apply_operator,
    barycentric_operator,
    barycentric_refinement,
    boundary_vertices,
    canonical_key,
    complete_graph,
    connection_graph,
    cycle_graph,
    disjoint_union,
    erdos_renyi,
    graph_from_key,
    house_graph,
    is_collapsible,
    is_d_graph,
    is_d_sphere,
    moebius_graph,
    named_generator,
    octahedron_graph,
    path_graph,
    prime_graph,
    stirling2,
    wheel_graph,
    zykov_join,
)
from etacalc.graphs import Graph, graph_chi, whitney_complex


def brute_refinement_edges(complex_):
    """Oracle: strict containment pairs by direct subset tests."""
    faces = complex_.faces
    out = set()
    for a, b in combinations(faces, 2):
        sa, sb = set(a), set(b)
        if sa < sb or sb < sa:
            out.add((a, b))
    return out


def brute_connection_edges(complex_):
    faces = complex_.faces
    return {
        (a, b)
        for a, b in combinations(faces, 2)
        if set(a) & set(b)
    }


def test_refinement_matches_brute_force(house, double_pyramid):
    for k in (house, double_pyramid):
        lab = barycentric_refinement(k)
        got = {
            tuple(sorted((lab.face_of(u), lab.face_of(v))))
            for u, v in lab.graph.edges()
        }
        want = {tuple(sorted(e)) for e in brute_refinement_edges(k)}
        assert got == want


def test_connection_matches_brute_force(house, octahedron):
    for k in (house, octahedron):
        lab = connection_graph(k)
        got = {
            tuple(sorted((lab.face_of(u), lab.face_of(v))))
            for u, v in lab.graph.edges()
        }
        want = {tuple(sorted(e)) for e in brute_connection_edges(k)}
        assert got == want


def test_stirling2_against_recurrence():
    table = {(0, 0): 1}
    for n in range(1, 9):
        table[(n, 0)] = 0
        for k in range(1, n + 1):
            table[(n, k)] = k * table.get((n - 1, k), 0) + table.get((n - 1, k - 1), 0)
    for (n, k), v in table.items():
        assert stirling2(n, k) == v


def test_refinement_operator_known_rows():
    s2 = barycentric_operator(2)
    assert apply_operator(s2, (6, 12, 8)) == (26, 72, 48)
    assert apply_operator(s2, (5, 6, 1)) == (12, 18, 6)


def test_operator_predicts_refined_f_vector(house, octahedron, double_pyramid):
    for k in (house, octahedron, double_pyramid):
        lab = barycentric_refinement(k)
        refined = whitney_complex(lab.graph)
        op = barycentric_operator(k.dim)
        assert refined.f_vector() == apply_operator(op, k.f_vector())


def test_named_generators_basics():
    assert complete_graph(4).m == 6
    assert cycle_graph(5).m == 5
    assert path_graph(4).m == 3
    assert wheel_graph(5).n == 6
    assert named_generator("kn", [3]).m == 3
    with pytest.raises(Exception):
        named_generator("nope")


def test_zykov_join_multiplies_reduced_generating_functions():
    g, h = cycle_graph(4), complete_graph(2)
    j = zykov_join(g, h)
    fg = whitney_complex(g).generating_function(reduced=True)
    fh = whitney_complex(h).generating_function(reduced=True)
    fj = whitney_complex(j).generating_function(reduced=True)
    assert fj == fg * fh


def test_octahedron_is_triple_join_of_point_pairs():
    p2 = Graph([0, 1])
    j = zykov_join(zykov_join(p2, p2), p2)
    assert canonical_key(j) == canonical_key(octahedron_graph())


def test_disjoint_union_adds_chi():
    g, h = cycle_graph(4), complete_graph(3)
    u = disjoint_union(g, h)
    assert graph_chi(u) == graph_chi(g) + graph_chi(h)


def test_prime_graph_is_squarefree_divisibility():
    g = prime_graph(12)
    assert 4 not in g.vertices and 8 not in g.vertices and 9 not in g.vertices
    assert sorted(g.edges()) == [(2, 6), (2, 10), (3, 6), (5, 10)]


def test_splitmix64_is_deterministic_and_in_range():
    a = SplitMix64(7)
    b = SplitMix64(7)
    xs = [a.next_u64() for _ in range(5)]
    assert xs == [b.next_u64() for _ in range(5)]
    c = SplitMix64(1)
    for _ in range(100):
        u = c.uniform()
        assert 0.0 <= u < 1.0
        assert 0 <= c.randrange(10) < 10


def test_erdos_renyi_seeded_and_bounded():
    g1 = erdos_renyi(8, 0.5, seed=3)
    g2 = erdos_renyi(8, 0.5, seed=3)
    assert g1 == g2
    assert erdos_renyi(8, 0.0, seed=1).m == 0
    assert erdos_renyi(8, 1.0, seed=1).m == 28


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**30), st.permutations(list(range(6))))
def test_canonical_key_is_relabeling_invariant(seed, perm):
    g = erdos_renyi(6, 0.5, seed=seed)
    h = g.relabel({v: perm[i] for i, v in enumerate(g.vertices)})
    assert canonical_key(g) == canonical_key(h)
    back = graph_from_key(canonical_key(g))
    assert canonical_key(back) == canonical_key(g)


def test_collapsible_predicate():
    assert is_collapsible(Graph([0]))
    assert is_collapsible(complete_graph(4))
    assert not is_collapsible(cycle_graph(4))
    assert not is_collapsible(Graph([]))


def test_sphere_predicates():
    assert is_d_sphere(cycle_graph(5), 1)
    assert not is_d_sphere(cycle_graph(3), 1)
    assert is_d_sphere(octahedron_graph(), 2)
    assert not is_d_sphere(house_graph(), 1)
    assert is_d_graph(cycle_graph(6), 1)


def test_wheel_boundary_is_rim():
    # the hub's unit sphere is a cycle, the rim spheres are paths
    assert boundary_vertices(wheel_graph(5)) == (1, 2, 3, 4, 5)


def test_moebius_strip_spheres_are_paths():
    # every unit sphere of the circulant strip is a 4-vertex path
    g = moebius_graph(7)
    assert boundary_vertices(g) == tuple(g.vertices)
    for v in g.vertices:
        s = g.unit_sphere(v)
        assert s.n == 4 and s.m == 3 and s.is_connected()
