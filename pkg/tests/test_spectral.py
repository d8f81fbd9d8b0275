import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import minimize

from hyperrho.constructions import C1, C2, C3, CycleStar, LooseCycle, LoosePath, build, delete_edges
from hyperrho.core import Hypergraph, is_connected
from hyperrho.errors import ConvergenceFailure, InvalidArgument
from hyperrho.spectral import alpha_of, apply_adjacency, rayleigh, spectral_radius

from conftest import CORPUS

TOL = 1e-10
SINGLE = Hypergraph(3, 3, ((0, 1, 2),))


def brute_force_rho(H, starts=6, seed=0):
    """Independent oracle: maximise k * sum_e prod x over the k-norm sphere."""
    k, E = H.k, H.edge_array
    rng = np.random.default_rng(seed)

    def neg(y):
        x = np.abs(y) / np.sum(np.abs(y) ** k) ** (1 / k)
        return -k * np.prod(x[E], axis=1).sum()

    best = 0.0
    for _ in range(starts):
        res = minimize(neg, rng.uniform(0.5, 1.5, H.n), method="BFGS",
                       options={"gtol": 1e-12, "maxiter": 5000})
        best = max(best, -res.fun)
    return best


class TestApplyAdjacency:
    def test_ones(self):
        assert np.allclose(apply_adjacency(SINGLE, np.ones(3)), [1, 1, 1])

    def test_pairwise_products(self):
        assert np.allclose(apply_adjacency(SINGLE, np.array([1.0, 2.0, 3.0])), [6, 3, 2])

    def test_ones_give_degrees(self, corpus_graph):
        H = corpus_graph
        assert np.array_equal(apply_adjacency(H, np.ones(H.n)), H.degrees)

    def test_zero_entries_ok(self):
        # prefix/suffix products, no division by x_v
        assert np.allclose(apply_adjacency(SINGLE, np.array([0.0, 2.0, 3.0])), [6, 0, 0])

    def test_dimension_mismatch(self):
        with pytest.raises(InvalidArgument):
            apply_adjacency(SINGLE, np.ones(4))

    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.floats(0.1, 3.0), min_size=9, max_size=9))
    def test_matches_naive(self, xs):
        H = build(C2(1, 1, 1), 3)
        x = np.array(xs)
        naive = np.zeros(H.n)
        for e in H.edges:
            for v in e:
                naive[v] += math.prod(x[u] for u in e if u != v)
        assert np.allclose(apply_adjacency(H, x), naive, rtol=1e-13)


class TestSpectralRadius:
    def test_single_edge(self):
        assert spectral_radius(SINGLE, TOL).rho == pytest.approx(1.0, abs=TOL)

    @pytest.mark.parametrize("n", [2, 3, 4, 7, 12])
    def test_loose_cycles(self, n):
        r = spectral_radius(build(LooseCycle(n), 3), TOL)
        assert abs(r.rho - 4 ** (1 / 3)) <= TOL

    def test_worked_example(self):
        r = spectral_radius(build(C1(4, 4, 4), 3), TOL)
        assert abs(r.rho - 1.654396) <= 5e-7

    def test_disconnected(self):
        with pytest.raises(InvalidArgument):
            spectral_radius(Hypergraph(3, 6, ((0, 1, 2), (3, 4, 5))))

    def test_bad_tol(self):
        with pytest.raises(InvalidArgument):
            spectral_radius(SINGLE, 0.0)

    def test_convergence_failure_carries_bounds(self):
        H = build(C1(3, 2, 5), 3)
        with pytest.raises(ConvergenceFailure) as info:
            spectral_radius(H, 1e-14, max_iter=3)
        exc = info.value
        assert exc.lower < exc.upper and exc.iterations == 3
        true = spectral_radius(H, TOL).rho
        assert exc.lower <= true <= exc.upper

    def test_result_invariants(self, corpus_graph):
        H = corpus_graph
        r = spectral_radius(H, TOL)
        assert r.lower_bound <= r.rho <= r.upper_bound
        assert r.gap <= TOL
        assert np.all(r.eigenvector > 0)
        assert np.sum(r.eigenvector ** H.k) == pytest.approx(1.0, abs=1e-12)

    def test_monotone_bounds(self, corpus_graph):
        hist = []
        r = spectral_radius(corpus_graph, TOL, history=hist)
        lo, hi = np.array(hist).T
        assert np.all(np.diff(lo) >= 0) and np.all(np.diff(hi) <= 0)
        assert np.all(lo <= r.rho) and np.all(r.rho <= hi)

    def test_rayleigh_oracle(self, corpus_graph):
        r = spectral_radius(corpus_graph, TOL)
        assert abs(rayleigh(corpus_graph, r.eigenvector) - r.rho) <= 10 * TOL

    def test_eigen_residual(self, corpus_graph):
        H = corpus_graph
        r = spectral_radius(H, TOL)
        xk = r.eigenvector ** (H.k - 1)
        resid = np.abs(apply_adjacency(H, r.eigenvector) - r.rho * xk).max()
        assert resid <= 10 * TOL * xk.max()

    @pytest.mark.parametrize("spec, k", [(LooseCycle(3), 3), (C2(1, 1, 1), 3),
                                         (C1(1, 2, 1), 4), (CycleStar(3), 3),
                                         (C3(1, 2), 4), (LoosePath(3), 3)])
    def test_against_brute_force(self, spec, k):
        H = build(spec, k)
        assert spectral_radius(H, TOL).rho == pytest.approx(brute_force_rho(H), abs=1e-7)

    @settings(max_examples=15, deadline=None)
    @given(st.sampled_from([(C1(2, 1, 3), 3), (C2(1, 2, 2), 4), (C3(2, 1), 4),
                            (CycleStar(4), 3)]), st.randoms(use_true_random=False))
    def test_relabel_invariance(self, case, rnd):
        spec, k = case
        H = build(spec, k)
        perm = list(range(H.n))
        rnd.shuffle(perm)
        a = spectral_radius(H, TOL).rho
        b = spectral_radius(H.relabel(perm), TOL).rho
        assert abs(a - b) <= TOL

    @pytest.mark.parametrize("spec, k", [(C1(2, 2, 2), 3), (C2(1, 3, 2), 3), (C3(2, 2), 4),
                                         (CycleStar(5), 3), (LooseCycle(4), 4)])
    def test_proper_subgraph_smaller(self, spec, k):
        H = build(spec, k)
        rho = spectral_radius(H, TOL).rho
        for j in range(H.m):
            sub = delete_edges(H, [j])
            if is_connected(sub):
                assert spectral_radius(sub, TOL).rho < rho - TOL


class TestRayleigh:
    def test_uniform_single_edge(self):
        x = np.full(3, 3 ** (-1 / 3))
        assert rayleigh(SINGLE, x) == pytest.approx(1.0, abs=1e-14)

    def test_indicator(self, corpus_graph):
        x = np.zeros(corpus_graph.n)
        x[0] = 1.0
        assert rayleigh(corpus_graph, x) == 0.0

    def test_cycle_eigenvector(self):
        H = build(LooseCycle(3), 3)
        r = spectral_radius(H, TOL)
        assert abs(rayleigh(H, r.eigenvector) - 4 ** (1 / 3)) <= 10 * TOL

    def test_unnormalised(self):
        with pytest.raises(InvalidArgument):
            rayleigh(SINGLE, np.ones(3))

    def test_negative(self):
        with pytest.raises(InvalidArgument):
            rayleigh(SINGLE, np.array([-1.0, 0.0, 0.0]))


class TestAlpha:
    def test_cycle(self):
        assert alpha_of(build(LooseCycle(5), 3)) == pytest.approx(0.25, abs=1e-10)

    def test_single_edge(self):
        assert alpha_of(SINGLE) == pytest.approx(1.0, abs=1e-10)

    def test_worked_example(self):
        assert alpha_of(build(C1(4, 4, 4), 3)) == pytest.approx(0.22084, abs=5e-6)
