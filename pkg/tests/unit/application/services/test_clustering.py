import numpy as np
import pytest

from src.application.services.clustering import (
    kmeans_plusplus,
    lloyd,
    nearest_entries,
    update_centroids,
)


def test_nearest_entries_returns_index_and_squared_distance():
    vectors = np.array([[0.0, 0.0], [3.0, 4.0]])
    entries = np.array([[0.0, 0.0], [3.0, 0.0]])

    indices, distances = nearest_entries(vectors, entries)

    assert indices.tolist() == [0, 1]
    assert distances.tolist() == [0.0, 16.0]


def test_nearest_entries_is_block_size_independent(monkeypatch):
    rng = np.random.default_rng(0)
    vectors = rng.normal(size=(257, 3))
    entries = rng.normal(size=(5, 3))
    whole = nearest_entries(vectors, entries)

    monkeypatch.setattr("src.application.services.clustering._DISTANCE_BLOCK_ELEMENTS", 16)
    blocked = nearest_entries(vectors, entries)

    np.testing.assert_array_equal(whole[0], blocked[0])
    np.testing.assert_array_equal(whole[1], blocked[1])


class TestUpdateCentroids:
    def test_moves_centroids_to_cluster_means(self):
        data = np.array([[0.0], [2.0], [10.0]])

        updated, n_empty = update_centroids(data, np.array([0, 0, 1]), np.zeros((2, 1)))

        assert updated.ravel().tolist() == [1.0, 10.0]
        assert n_empty == 0

    def test_empty_cluster_takes_the_farthest_point(self):
        data = np.array([[0.0], [1.0], [9.0]])

        updated, n_empty = update_centroids(data, np.array([0, 0, 0]), np.zeros((2, 1)))

        assert n_empty == 1
        assert updated[1, 0] == 9.0

    def test_reseeds_prefer_distinct_vectors(self):
        data = np.array([[10.0], [10.0], [10.0], [-8.0], [0.0]])

        updated, n_empty = update_centroids(data, np.zeros(5, dtype=np.int64), np.zeros((3, 1)))

        assert n_empty == 2
        assert sorted(updated[1:, 0].tolist()) == [-8.0, 10.0]


def test_lloyd_stops_at_a_fixpoint():
    data = np.array([[0.0], [0.1], [5.0], [5.1]])

    result = lloyd(data, np.array([[0.0], [5.0]]), max_iters=50, rel_tol=1e-6)

    assert result.converged
    assert result.assignments.tolist() == [0, 0, 1, 1]
    np.testing.assert_allclose(result.centroids.ravel(), [0.05, 5.05])
    assert result.trace[-1] == pytest.approx(4 * 0.05**2)


def test_lloyd_respects_the_iteration_cap():
    data = np.random.default_rng(3).normal(size=(100, 2))

    result = lloyd(data, data[:4].copy(), max_iters=1, rel_tol=1e-12)

    assert len(result.trace) == 1


def test_kmeans_plusplus_never_picks_a_zero_distance_point_twice():
    data = np.array([[0.0, 0.0]] * 9 + [[1.0, 1.0]])

    for seed in range(20):
        seeds = kmeans_plusplus(data, 2, np.random.default_rng(seed))

        assert sorted(map(tuple, seeds.tolist())) == [(0.0, 0.0), (1.0, 1.0)]
