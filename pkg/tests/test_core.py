import io

import pytest
from hypothesis import given, settings, strategies as st

from hyperrho.constructions import C1, C2, C3, LooseCycle, LoosePath, build
from hyperrho.core import (BRANCH, PENDANT, PLAIN, Hypergraph, classify_edge, components,
                           cycle_basis, cyclomatic_number, degree, dumps, find_internal_paths,
                           is_connected, is_subhypergraph, konig_representation, loads, read,
                           write)
from hyperrho.errors import InvalidArgument

SINGLE = Hypergraph(3, 3, ((0, 1, 2),))


class TestConstruction:
    def test_edges_are_canonical(self):
        H = Hypergraph(3, 5, ((4, 3, 2), (2, 1, 0)))
        assert H.edges == ((0, 1, 2), (2, 3, 4))
        assert H == Hypergraph(3, 5, ((0, 1, 2), (2, 3, 4)))

    @pytest.mark.parametrize("edges, n", [
        (((0, 1, 2), (2, 1, 0)), 3),   # duplicate
        (((0, 1),), 2),                 # wrong size
        (((0, 0, 1),), 2),              # repeated vertex
        (((0, 1, 5),), 3),              # out of range
        (((0, 1, 2),), 4),              # isolated vertex 3
    ])
    def test_rejects_invalid(self, edges, n):
        with pytest.raises(InvalidArgument):
            Hypergraph(3, n, edges)

    def test_rejects_k2(self):
        with pytest.raises(InvalidArgument):
            Hypergraph(2, 2, ((0, 1),))

    def test_from_edges(self):
        H = Hypergraph.from_edges([(0, 1, 2), (2, 3, 4)])
        assert (H.k, H.n, H.m) == (3, 5, 2)


class TestDegree:
    def test_single_edge(self):
        assert degree(SINGLE, 0) == 1

    def test_c3_shared_joint(self):
        H = build(C3(1, 1), 4)
        assert max(degree(H, v) for v in range(H.n)) == 2
        anchors = [v for v in H.edges[0] if degree(H, v) == 2]
        assert len(anchors) >= 2

    def test_loose_cycle_joints(self):
        H = build(LooseCycle(4), 3)
        assert sorted(degree(H, v) for v in range(H.n)) == [1] * 4 + [2] * 4

    def test_out_of_range(self):
        with pytest.raises(InvalidArgument):
            degree(SINGLE, 3)


class TestConnectivity:
    def test_single_edge(self):
        assert is_connected(SINGLE)

    def test_disjoint_edges(self):
        H = Hypergraph(3, 6, ((0, 1, 2), (3, 4, 5)))
        assert not is_connected(H)
        assert components(H) == [[0, 1, 2], [3, 4, 5]]

    def test_cycle(self):
        assert is_connected(build(LooseCycle(5), 3))


class TestCyclomatic:
    def test_path(self):
        H = build(LoosePath(3), 3)
        assert (H.m, H.n) == (3, 7)
        assert cyclomatic_number(H) == 0

    def test_cycle(self):
        H = build(LooseCycle(4), 3)
        assert (H.m, H.n) == (4, 8)
        assert cyclomatic_number(H) == 1

    def test_c2_111(self):
        H = build(C2(1, 1, 1), 3)
        # two triangles' worth of anchors (6) plus one filler per path edge (3)
        assert H.n == 9
        assert cyclomatic_number(H) == 5 * 2 - 9 + 1 == 2

    def test_disconnected_counts_components(self):
        H = Hypergraph(3, 6, ((0, 1, 2), (3, 4, 5)))
        assert cyclomatic_number(H) == 2 * 2 - 6 + 2 == 0

    def test_matches_konig_rank(self, corpus_graph):
        H = corpus_graph
        K = konig_representation(H)
        assert cyclomatic_number(H) == K.cycle_rank()
        assert len(cycle_basis(K)) == cyclomatic_number(H)


class TestKonig:
    def test_single_edge_star(self):
        K = konig_representation(SINGLE)
        assert (K.n_left, K.n_right, len(K.links)) == (3, 1, 3)
        assert cycle_basis(K) == []

    def test_c3_loose_cycle(self):
        K = konig_representation(build(LooseCycle(3), 3))
        assert (K.n_left, K.n_right, len(K.links)) == (6, 3, 9)
        assert K.cycle_rank() == 1

    def test_theta_star_rank(self):
        K = konig_representation(build(C3(1, 1), 4))
        assert len(K.links) - K.num_nodes + 1 == 2

    def test_link_count(self, corpus_graph):
        K = konig_representation(corpus_graph)
        assert len(K.links) == corpus_graph.k * corpus_graph.m

    def test_basis_cycles_are_closed_alternating_walks(self, corpus_graph):
        H = corpus_graph
        K = konig_representation(H)
        for cyc in cycle_basis(K):
            assert len(cyc) % 2 == 0 and len(cyc) >= 4
            assert len(set(cyc)) == len(cyc)
            for i, node in enumerate(cyc):
                assert K.is_edge_node(node) == (i % 2 == 1)
                nxt = cyc[(i + 1) % len(cyc)]
                assert nxt in K.adjacency[node]

    def test_cycle_counts(self):
        assert len(cycle_basis(konig_representation(build(LooseCycle(4), 3)))) == 1
        for spec in (C1(1, 2, 1), C2(2, 2, 1)):
            assert len(cycle_basis(konig_representation(build(spec, 3)))) == 2


class TestClassifyEdge:
    def test_single_edge_pendant(self):
        assert classify_edge(SINGLE, (0, 1, 2)) == PENDANT

    def test_c1_branch_edge(self):
        H = build(C1(1, 1, 1), 3)
        branch = [e for e in H.edges if sum(H.degrees[v] == 2 for v in e) == 3]
        assert len(branch) == 2
        assert all(classify_edge(H, e) == BRANCH for e in branch)

    def test_path_middle_plain(self):
        H = build(LoosePath(3), 3)
        middle = [e for e in H.edges if sum(H.degrees[v] == 2 for v in e) == 2]
        assert len(middle) == 1
        assert classify_edge(H, middle[0]) == PLAIN

    def test_missing_edge(self):
        with pytest.raises(InvalidArgument):
            classify_edge(SINGLE, (0, 1, 3))

    @settings(max_examples=30, deadline=None)
    @given(st.sampled_from([(C1(2, 1, 3), 3), (C2(1, 2, 2), 4), (C3(2, 1), 4),
                            (LoosePath(4), 3)]), st.randoms(use_true_random=False))
    def test_relabel_invariant(self, case, rnd):
        spec, k = case
        H = build(spec, k)
        perm = list(range(H.n))
        rnd.shuffle(perm)
        H2 = H.relabel(perm)
        for e in H.edges:
            assert classify_edge(H, e) == classify_edge(H2, [perm[v] for v in e])


class TestInternalPaths:
    def test_path_has_none(self):
        assert find_internal_paths(build(LoosePath(5), 3)) == []

    def test_theta_lengths(self):
        H = build(C2(2, 1, 1), 3)
        paths = find_internal_paths(H)
        assert sorted(p.length for p in paths) == [1, 1, 2]
        anchors = {p.start_anchor for p in paths} | {p.end_anchor for p in paths}
        assert len(anchors) == 2
        assert not any(p.is_loop for p in paths)

    def test_theta_star_loops(self):
        # four distinct anchors need k >= 4
        H = build(C3(2, 2), 4)
        paths = find_internal_paths(H)
        assert [p.length for p in paths] == [2, 2]
        assert all(p.is_loop for p in paths)
        assert len({p.start_anchor for p in paths}) == 1

    def test_hypo_flag(self):
        # C1 anchors have no vertex of degree > 2; add a pendant edge on a joint
        H = build(C1(1, 1, 1), 3)
        assert all(p.hypo for p in find_internal_paths(H))

    def test_locator_invariants(self, corpus_graph):
        H = corpus_graph
        paths = find_internal_paths(H)
        seen = set()
        for p in paths:
            assert not seen & set(p.path_edges)
            seen |= set(p.path_edges)
            assert all(H.degrees[w] == 2 for w in p.joints)
            assert p.joints[0] in H.edges[p.start_anchor]
            assert p.joints[-1] in H.edges[p.end_anchor]
            for i, j in enumerate(p.path_edges):
                assert p.joints[i] in H.edges[j] and p.joints[i + 1] in H.edges[j]


class TestSubhypergraph:
    def test_identity(self):
        H = build(C2(1, 2, 1), 3)
        assert is_subhypergraph(H, H)

    def test_cycle_with_pendant(self):
        C = build(LooseCycle(3), 3)
        host = Hypergraph(3, C.n + 2, C.edges + ((0, C.n, C.n + 1),))
        assert is_subhypergraph(C, host, list(range(C.n)))

    def test_too_many_edges(self):
        assert not is_subhypergraph(build(LooseCycle(4), 3), build(LoosePath(3), 3))

    def test_missing_edge(self):
        P = build(LoosePath(2), 3)
        # swapping the joint with a filler breaks the second edge
        assert not is_subhypergraph(P, P, [1, 0, 2, 3, 4])

    def test_non_injective(self):
        with pytest.raises(InvalidArgument):
            is_subhypergraph(SINGLE, SINGLE, [0, 0, 1])


class TestTextFormat:
    def test_round_trip(self, corpus_graph):
        assert loads(dumps(corpus_graph)) == corpus_graph

    def test_stream_round_trip(self):
        H = build(C1(1, 1, 2), 4)
        buf = io.StringIO()
        write(H, buf)
        buf.seek(0)
        assert read(buf) == H

    def test_header(self):
        assert dumps(SINGLE) == "3 3 1\n0 1 2\n"

    def test_trailing_whitespace(self):
        assert loads("3 3 1  \n 2 1 0   \n\n") == SINGLE

    def test_duplicate_rejected(self):
        with pytest.raises(InvalidArgument):
            loads("3 3 2\n0 1 2\n2 1 0\n")

    def test_count_mismatch(self):
        with pytest.raises(InvalidArgument):
            loads("3 3 2\n0 1 2\n")
