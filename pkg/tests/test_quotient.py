"""Equitable partitions, quotient matrices and walk compression."""

import math

import numpy as np
import pytest

from sgwalk import (
    amplitude,
    build_signed_graph,
    coarsest_equitable,
    complete,
    cycle,
    discrete_partition,
    is_equitable,
    normalized_partition_matrix,
    partition_from_cell_of,
    partition_from_cells,
    quotient,
    quotient_transfer_check,
    read_partition,
    signed_join,
    single_cell_partition,
    write_partition,
)


def edge_join():
    """Negative edge joined to a positive 4-clique, all cross edges positive."""
    return signed_join(complete(2), complete(4), -1, 1)


def test_partition_constructors_and_validation():
    p = partition_from_cells([[0], [1], [2, 3, 4, 5]])
    assert p.n == 6 and p.m == 3
    assert list(p.sizes()) == [1, 1, 4]
    q = partition_from_cell_of([0, 1, 2, 2, 2, 2])
    assert q.cells == p.cells
    with pytest.raises(ValueError):
        partition_from_cells([[0], [0, 1]])  # overlap
    with pytest.raises(ValueError):
        partition_from_cells([[0], [2]], n=3)  # vertex 1 missing
    with pytest.raises(ValueError):
        partition_from_cells([[0], []], n=1)  # empty cell


def test_partition_file_round_trip(tmp_path):
    p = partition_from_cells([[0], [1], [2, 3, 4, 5]])
    target = tmp_path / "cells.txt"
    write_partition(p, target)
    back = read_partition(target, n=6)
    assert back.cells == p.cells


def test_is_equitable_profiles():
    g = edge_join()
    ok, profile = is_equitable(g, partition_from_cells([[0], [1], [2, 3, 4, 5]]))
    assert ok
    assert np.array_equal(profile.d_plus,
                          np.array([[0, 0, 4], [0, 0, 4], [1, 1, 3]]))
    assert np.array_equal(profile.d_minus,
                          np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]]))
    bad, profile = is_equitable(g, partition_from_cells([[0], [1, 2], [3, 4, 5]]))
    assert not bad and profile is None


def test_quotient_matrix_of_the_edge_join():
    g = edge_join()
    quot = quotient(g, partition_from_cells([[0], [1], [2, 3, 4, 5]]))
    expected = np.array([[0.0, -1.0, 2.0],
                         [-1.0, 0.0, 2.0],
                         [2.0, 2.0, 3.0]])
    assert np.abs(quot.matrix - expected).max() < 1e-12
    # eigenvalues of the quotient interlace into the full spectrum
    full = np.linalg.eigvalsh(g.adjacency.astype(float))
    small = np.linalg.eigvalsh(quot.matrix)
    for w in small:
        assert np.min(np.abs(full - w)) < 1e-9


def test_quotient_identities():
    g = edge_join()
    p = partition_from_cells([[0], [1], [2, 3, 4, 5]])
    q = normalized_partition_matrix(p)
    assert np.abs(q.T @ q - np.eye(3)).max() < 1e-12
    a = g.adjacency.astype(float)
    # equitability makes the projector QQ^T commute with the adjacency
    proj = q @ q.T
    assert np.abs(a @ proj - proj @ a).max() < 1e-11
    bad = normalized_partition_matrix(
        partition_from_cells([[0], [1, 2], [3, 4, 5]]))
    bad_proj = bad @ bad.T
    assert np.abs(a @ bad_proj - bad_proj @ a).max() > 1e-3


def test_quotient_rejects_inequitable_partitions():
    with pytest.raises(ValueError):
        quotient(edge_join(), partition_from_cells([[0], [1, 2], [3, 4, 5]]))


def test_discrete_quotient_is_the_adjacency():
    g = edge_join()
    quot = quotient(g, discrete_partition(g.n))
    assert np.abs(quot.matrix - g.adjacency).max() < 1e-12


def test_quotient_transfer_agreement():
    g = edge_join()
    p = partition_from_cells([[0], [1], [2, 3, 4, 5]])
    worst = 0.0
    for t in np.linspace(0.0, 2 * math.pi, 100):
        check = quotient_transfer_check(g, p, 0, 1, float(t))
        assert check.agree
        worst = max(worst, abs(check.full.value - check.reduced.value))
    assert worst < 1e-10
    with pytest.raises(ValueError):
        quotient_transfer_check(g, partition_from_cells([[0, 1], [2, 3, 4, 5]]),
                                0, 1, 1.0)
    quot = quotient(g, p)
    t = math.pi / math.sqrt(12)
    assert abs(amplitude(g, 0, 1, t).value
               - amplitude(quot, 0, 1, t).value) < 1e-10


def test_coarsest_equitable_cases():
    # one negative edge on a square: degree profile splits the endpoints
    unbalanced = build_signed_graph(
        4, [(0, 1, -1), (1, 2, 1), (2, 3, 1), (0, 3, 1)])
    p = coarsest_equitable(unbalanced)
    assert p.cells == ((0, 1), (2, 3))

    # alternating signs: every vertex sees one + and one - neighbour
    alternating = build_signed_graph(
        4, [(0, 1, 1), (1, 2, -1), (2, 3, 1), (0, 3, -1)])
    assert coarsest_equitable(alternating).m == 1

    # unsigned square: single cell is already equitable
    assert coarsest_equitable(cycle(4)).m == 1

    # seeding with a finer start is respected
    seeded = coarsest_equitable(cycle(4),
                                partition_from_cells([[0], [1, 2, 3]]))
    assert seeded.cells == ((0,), (1, 3), (2,))

    g = edge_join()
    p = coarsest_equitable(g, single_cell_partition(g.n))
    assert p.cells == ((0, 1), (2, 3, 4, 5))
    ok, _ = is_equitable(g, p)
    assert ok
