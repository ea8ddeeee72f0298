import math

import pytest
from hypothesis import given, settings

from distpoly.distances import (
    DistanceDistribution,
    Orbit,
    OrbitSpec,
    bfs_distances,
    diameter,
    distance_distribution,
    orbit_distance_distribution,
)
from distpoly.errors import DisconnectedError, MalformedOrbitsError
from distpoly.generators import complete, cycle, jahangir, path, rotation_orbits, star
from distpoly.graph import Graph

from _oracle import oracle_counts
from _strategies import connected_graphs, graphs


def test_bfs_distances_path():
    g = path(5)
    assert bfs_distances(g, 0) == [0, 1, 2, 3, 4]
    assert bfs_distances(g, 2) == [2, 1, 0, 1, 2]


def test_bfs_distances_cycle():
    assert bfs_distances(cycle(6), 0) == [0, 1, 2, 3, 2, 1]


def test_bfs_distances_jahangir_center():
    """From the center of J(5,3): hubs at 1, their cycle neighbors at 2,
    everything else at 3."""
    dist = bfs_distances(jahangir(5, 3), 15)
    by_distance = {}
    for v, d in enumerate(dist):
        by_distance.setdefault(d, set()).add(v)
    assert by_distance[0] == {15}
    assert by_distance[1] == {0, 5, 10}
    assert by_distance[2] == {1, 4, 6, 9, 11, 14}
    assert by_distance[3] == {2, 3, 7, 8, 12, 13}


def test_bfs_distances_disconnected():
    with pytest.raises(DisconnectedError) as excinfo:
        bfs_distances(Graph(4, [(0, 1), (2, 3)]), 0)
    assert excinfo.value.unreached_vertex in (2, 3)


def test_distribution_small_known_graphs():
    assert distance_distribution(path(2)).counts == (0, 1)
    assert distance_distribution(path(4)).counts == (0, 3, 2, 1)
    assert distance_distribution(complete(5)).counts == (0, 10)
    assert distance_distribution(cycle(6)).counts == (0, 6, 6, 3)
    assert distance_distribution(star(5)).counts == (0, 5, 10)


def test_distribution_single_vertex():
    dd = distance_distribution(path(1))
    assert dd.counts == (0,)
    assert dd.diameter == 0
    assert dd.total_pairs == 0


def test_distribution_jahangir_frozen_values():
    assert distance_distribution(jahangir(5, 3)).counts == (0, 18, 24, 33, 24, 18, 3)
    assert distance_distribution(jahangir(5, 4)).counts == (0, 24, 34, 52, 48, 40, 12)
    assert distance_distribution(jahangir(5, 6)).counts == (0, 36, 57, 102, 120, 108, 42)


def test_distribution_disconnected():
    with pytest.raises(DisconnectedError):
        distance_distribution(Graph(3, [(0, 1)]))
    with pytest.raises(DisconnectedError):
        distance_distribution(Graph(2, []))


def test_distribution_properties():
    dd = distance_distribution(cycle(6))
    assert dd.diameter == 3
    assert dd.total_pairs == 15
    assert dd.per_distance() == (6, 6, 3)


@settings(deadline=None)
@given(connected_graphs(max_vertices=14))
def test_distribution_matches_independent_oracle(g):
    assert list(distance_distribution(g).counts) == oracle_counts(g)


@settings(deadline=None)
@given(connected_graphs(max_vertices=14))
def test_distribution_invariants(g):
    dd = distance_distribution(g)
    n = g.vertex_count
    assert dd.counts[0] == 0
    assert sum(dd.counts) == math.comb(n, 2)
    if n > 1:
        assert dd.counts[1] == g.edge_count
        assert dd.counts[-1] > 0


@settings(deadline=None)
@given(graphs(min_vertices=2))
def test_distribution_raises_iff_disconnected(g):
    if g.is_connected():
        distance_distribution(g)
    else:
        with pytest.raises(DisconnectedError):
            distance_distribution(g)


def test_diameter_known_values():
    assert diameter(path(1)) == 0
    assert diameter(path(7)) == 6
    assert diameter(cycle(9)) == 4
    assert diameter(cycle(10)) == 5
    assert diameter(complete(4)) == 1
    assert diameter(star(6)) == 2


# -- orbit-accelerated distribution -------------------------------------------


def test_orbit_distribution_matches_naive_j53():
    g = jahangir(5, 3)
    assert orbit_distance_distribution(g, rotation_orbits(5, 3)) == distance_distribution(g)


def test_orbit_distribution_frozen_j28():
    g = jahangir(2, 8)
    assert g.vertex_count == 17
    assert g.edge_count == 24
    dd = orbit_distance_distribution(g, rotation_orbits(2, 8))
    assert dd.counts == (0, 24, 44, 48, 20)


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("m", range(3, 7))
def test_orbit_distribution_matches_naive_sweep(n, m):
    g = jahangir(n, m)
    assert orbit_distance_distribution(g, rotation_orbits(n, m)) == distance_distribution(g)


def test_orbit_spec_for_wrong_graph_rejected():
    with pytest.raises(MalformedOrbitsError):
        orbit_distance_distribution(jahangir(5, 4), rotation_orbits(5, 3))


def test_orbit_partition_validation():
    g = cycle(4)
    whole = Orbit(0, 4, (0, 1, 2, 3))
    cases = [
        OrbitSpec((Orbit(0, 3, (0, 1, 2)),)),  # does not cover the vertex set
        OrbitSpec((whole, Orbit(0, 1, (0,)))),  # overlap
        OrbitSpec((Orbit(3, 4, (0, 1, 2, 4)),)),  # member out of range
        OrbitSpec((Orbit(3, 4, (0, 1, 2)),)),  # size disagrees with members
        OrbitSpec((Orbit(3, 3, (0, 1, 2)), Orbit(3, 1, (3,)))),  # rep not a member
    ]
    for spec in cases:
        with pytest.raises(MalformedOrbitsError):
            orbit_distance_distribution(g, spec)


def test_orbit_partition_that_is_not_automorphism_induced():
    """A partition can be structurally valid yet not come from symmetries; the
    parity of the weighted totals catches this one."""
    g = jahangir(5, 3)
    bad = OrbitSpec((
        Orbit(0, 6, (0, 1, 5, 6, 10, 11)),
        Orbit(2, 6, (2, 3, 7, 8, 12, 13)),
        Orbit(4, 3, (4, 9, 14)),
        Orbit(15, 1, (15,)),
    ))
    with pytest.raises(MalformedOrbitsError):
        orbit_distance_distribution(g, bad)


def test_orbit_distribution_on_disconnected_graph():
    g = Graph(4, [(0, 1), (2, 3)])
    spec = OrbitSpec((Orbit(0, 4, (0, 1, 2, 3)),))
    with pytest.raises(DisconnectedError):
        orbit_distance_distribution(g, spec)


def test_trivial_singleton_partition_matches_naive():
    g = cycle(7)
    spec = OrbitSpec(tuple(Orbit(v, 1, (v,)) for v in range(7)))
    assert orbit_distance_distribution(g, spec) == distance_distribution(g)


def test_distance_distribution_rejects_malformed_counts():
    with pytest.raises(ValueError):
        DistanceDistribution((1, 2))
    with pytest.raises(ValueError):
        DistanceDistribution((0, 2, 0))
    with pytest.raises(ValueError):
        DistanceDistribution(())
