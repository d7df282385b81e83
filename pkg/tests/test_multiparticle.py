"""Fermionic exterior powers, bosonic quotients and lifted transfers."""

import itertools
import math

import numpy as np
import pytest

from sgwalk import (
    amplitude,
    antisymmetrizer,
    boson_formula_comparison,
    boson_quotient,
    build_signed_graph,
    cartesian_power_matrix,
    complete,
    complete_bipartite,
    cycle,
    eig_sym,
    exterior_power,
    exterior_power_oracle,
    fermion_pst_lift,
    from_net_matrix,
    hypercube,
    is_pst,
    k_subsets,
    multiset_rank,
    multiset_states,
    path,
    random_regular,
    subset_rank,
    subset_unrank,
    symmetric_power,
    symmetrizer,
)


def all_graphs(n):
    """Every simple unsigned graph on n labelled vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        net = np.zeros((n, n), dtype=np.int64)
        for bit, (u, v) in enumerate(pairs):
            if mask >> bit & 1:
                net[u, v] = net[v, u] = 1
        yield from_net_matrix(net)


def test_subset_indexing_round_trip():
    for n, k in [(5, 2), (6, 3), (7, 1), (4, 4)]:
        subsets = k_subsets(n, k)
        assert subsets == sorted(subsets)  # lex order
        for rank, subset in enumerate(subsets):
            assert subset_rank(subset, n) == rank
            assert subset_unrank(rank, n, k) == subset


def test_multiset_indexing():
    states = multiset_states(3, 2)
    assert states == [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]
    for rank, state in enumerate(states):
        assert multiset_rank(state, 3) == rank


def test_antisymmetrizer_and_symmetrizer_are_isometries():
    for n, k in [(4, 2), (5, 2), (5, 3)]:
        alt = antisymmetrizer(n, k).matrix
        assert alt.shape == (n ** k, math.comb(n, k))
        assert np.abs(alt.T @ alt - np.eye(alt.shape[1])).max() < 1e-12
        sym = symmetrizer(n, k)
        assert sym.shape == (n ** k, math.comb(n + k - 1, k))
        assert np.abs(sym.T @ sym - np.eye(sym.shape[1])).max() < 1e-12


def test_cartesian_power_matrix_is_a_kronecker_sum():
    g = path(3)
    box = cartesian_power_matrix(g, 2)
    a = g.adjacency
    eye = np.eye(3, dtype=np.int64)
    assert np.array_equal(box, np.kron(a, eye) + np.kron(eye, a))


def test_exterior_power_sign_rule_matches_conjugation_exhaustively():
    # every graph on up to 4 vertices, every particle count
    for n in range(2, 5):
        for g in all_graphs(n):
            for k in range(1, n):
                built = exterior_power(g, k)
                oracle = exterior_power_oracle(g, k)
                assert np.array_equal(built.adjacency.astype(float),
                                      oracle.weights)


def test_exterior_power_sign_rule_on_random_larger_graphs():
    rng = np.random.default_rng(97)
    for _ in range(10):
        n = int(rng.choice([6, 7]))
        upper = np.triu(rng.integers(0, 2, size=(n, n)), k=1)
        g = from_net_matrix(upper + upper.T)
        built = exterior_power(g, 2)
        oracle = exterior_power_oracle(g, 2)
        assert np.array_equal(built.adjacency.astype(float), oracle.weights)


def test_exterior_square_of_the_square():
    # corner labelling: edges 01, 02, 13, 23 (antipodes 0-3 and 1-2)
    square = build_signed_graph(4, [(0, 1, 1), (0, 2, 1), (1, 3, 1), (2, 3, 1)])
    ext = exterior_power(square, 2)
    assert ext.n == 6
    negatives = {(u, v) for u in range(6) for v in range(u + 1, 6)
                 if ext.neg[u, v]}
    pair_01 = subset_rank((0, 1), 4)
    pair_12 = subset_rank((1, 2), 4)
    pair_23 = subset_rank((2, 3), 4)
    assert negatives == {tuple(sorted((pair_01, pair_12))),
                         tuple(sorted((pair_12, pair_23)))}
    # two-particle transfer between the disjoint edges at pi/2
    verdict = is_pst(ext, pair_01, pair_23, math.pi / 2)
    assert verdict.kind == "pst"
    assert verdict.fidelity >= 1 - 1e-9


def test_exterior_power_spectra_negation_duality():
    # spec of the (n-k)-th power is the negation of the k-th power's,
    # not a plain equality: the triangle is the smallest counterexample
    k3 = complete(3)
    w1 = np.sort(eig_sym(exterior_power(k3, 1)).eigenvalues)
    w2 = np.sort(eig_sym(exterior_power(k3, 2)).eigenvalues)
    assert np.abs(np.sort(-w2) - w1).max() < 1e-10
    assert np.abs(w1 - w2).max() > 1.0

    rng = np.random.default_rng(131)
    for _ in range(5):
        upper = np.triu(rng.integers(0, 2, size=(5, 5)), k=1)
        g = from_net_matrix(upper + upper.T)
        for k in (1, 2):
            wk = np.sort(eig_sym(exterior_power(g, k)).eigenvalues)
            wc = np.sort(eig_sym(exterior_power(g, 5 - k)).eigenvalues)
            assert np.abs(np.sort(-wc) - wk).max() < 1e-10


def test_symmetric_power_of_the_ring_is_complete_bipartite():
    sym = symmetric_power(cycle(4), 2)
    assert not sym.neg.any()
    assert sorted((sym.pos.sum(axis=1)).tolist()) == [2, 2, 2, 2, 4, 4]
    # the two degree-4 states {0,2} and {1,3} form one side of a K_{2,4}
    big = [subset_rank((0, 2), 4), subset_rank((1, 3), 4)]
    small = [r for r in range(6) if r not in big]
    relabel = big + small
    expected = complete_bipartite(2, 4).adjacency
    permuted = sym.adjacency[np.ix_(relabel, relabel)]
    assert np.array_equal(permuted, expected)
    verdict = is_pst(sym, big[0], big[1], math.pi / math.sqrt(8))
    assert verdict.fidelity >= 1 - 1e-9


def test_boson_quotient_of_an_edge_is_a_sqrt2_ladder():
    ladder = boson_quotient(complete(2), 2)
    expected = math.sqrt(2) * np.array([[0.0, 1.0, 0.0],
                                        [1.0, 0.0, 1.0],
                                        [0.0, 1.0, 0.0]])
    assert np.abs(ladder.weights - expected).max() < 1e-12
    amp = amplitude(ladder, 0, 2, math.pi / 2)
    assert abs(amp.value - (-1.0)) < 1e-10


def test_boson_quotient_matches_orbit_quotient():
    from sgwalk import partition_from_cell_of, quotient

    for g in (complete(2), cycle(3), complete(4)):
        states = multiset_states(g.n, 2)
        box = cartesian_power_matrix(g, 2)
        pair_of = [multiset_rank(tuple(sorted((u, v))), g.n)
                   for u in range(g.n) for v in range(g.n)]
        p = partition_from_cell_of(pair_of)
        orbit = quotient(from_net_matrix(box), p)
        direct = boson_quotient(g, 2)
        # the orbit cells enumerate multisets in the same lex order
        assert [states[i] for i in range(len(states))] == states
        assert np.abs(orbit.matrix - direct.weights).max() < 1e-12


def test_boson_hop_weights_depart_from_the_occupancy_formula():
    mismatches = boson_formula_comparison(complete(2), 2)
    assert mismatches  # the sqrt((a_u - 1)(a_v + 1)) guess misses sqrt(2) hops
    guesses = {round(m[2], 6) for m in mismatches}
    actuals = {round(m[3], 6) for m in mismatches}
    assert round(math.sqrt(2), 6) in actuals
    assert guesses != actuals


def test_fermion_lift_on_the_ring():
    square = cycle(4)
    verdict = fermion_pst_lift(square, [(0, 2), (1, 3)], math.pi / 2)
    assert verdict.kind == "pst"
    assert verdict.fidelity >= 1 - 1e-9
    assert abs(verdict.phase) < 1e-9  # det of the two -1 phases is +1
    with pytest.raises(ValueError):
        fermion_pst_lift(square, [(0, 2), (2, 0)], math.pi / 2)  # not disjoint
    with pytest.raises(ValueError):
        fermion_pst_lift(square, [(0, 1), (2, 3)], math.pi / 2)  # no PST pairwise


def test_wedge_amplitude_is_a_single_particle_determinant():
    # free-fermion identity: the two-particle amplitude between sorted
    # wedges equals det <b_i|U(t)|a_j> of single-particle amplitudes
    for g in (cycle(4), hypercube(3)):
        ext = exterior_power(g, 2)
        rng = np.random.default_rng(271)
        for _ in range(6):
            a = tuple(sorted(rng.choice(g.n, size=2, replace=False).tolist()))
            b = tuple(sorted(rng.choice(g.n, size=2, replace=False).tolist()))
            t = float(rng.uniform(0, 4))
            m = np.array([[amplitude(g, a[j], b[i], t).value
                           for j in range(2)] for i in range(2)])
            det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
            lifted = amplitude(ext, subset_rank(a, g.n),
                               subset_rank(b, g.n), t)
            assert abs(lifted.value - det) < 1e-9


def test_exterior_cubes_transfer_between_antipodal_wedges():
    cube = hypercube(3)
    ext = exterior_power(cube, 2)
    assert ext.n == 28
    verdict = fermion_pst_lift(cube, [(0, 7), (1, 6)], math.pi / 2)
    assert verdict.fidelity >= 1 - 1e-9
    # a self-antipodal wedge {u, u^7} returns to itself instead
    wedge = subset_rank((0, 7), 8)
    amp = amplitude(ext, wedge, wedge, math.pi / 2)
    assert abs(amp.value - 1.0) < 1e-9


def test_power_domain_checks():
    with pytest.raises(ValueError):
        exterior_power(build_signed_graph(3, [(0, 1, -1)]), 2)
    with pytest.raises(ValueError):
        exterior_power(complete(4), 0)
    with pytest.raises(ValueError):
        exterior_power(complete(4), 5)
    with pytest.raises(ValueError):
        boson_quotient(random_regular(40, 3, seed=1), 8)  # state space too big
