from itertools import product

import pytest
from hypothesis import given, strategies as st

from nodalcalc.fibres import (
    DualGraph,
    KodairaFibre,
    blowup_configurations,
    elliptic_fibre_search,
    fibre_types,
    max_independent_set,
    ruled_fibre_certificate,
)

from oracles import mis_exhaustive, partitions

ALL = fibre_types(12)


@pytest.mark.parametrize(
    "name, euler",
    [("I1", 1), ("I5", 5), ("I0*", 6), ("I3*", 9), ("II", 2), ("III", 3), ("IV", 4),
     ("IV*", 8), ("III*", 9), ("II*", 10)],
)
def test_euler_table(name, euler):
    assert KodairaFibre.parse(name).euler == euler


@pytest.mark.parametrize(
    "name, components",
    [("I4", 4), ("I0*", 5), ("I2*", 7), ("III", 2), ("IV", 3), ("IV*", 7), ("III*", 8), ("II*", 9)],
)
def test_component_count(name, components):
    # Euler number of a fibre with simple-normal-crossing-free components is components + (I_n: 0)
    assert KodairaFibre.parse(name).dual_graph().size == components


@pytest.mark.parametrize("fibre", ALL, ids=str)
def test_capacity_matches_exhaustive_oracle(fibre):
    g = fibre.dual_graph()
    nodal = g.nodal_vertices()
    edges = [e for e in g.edges if e[0] in nodal and e[1] in nodal]
    assert fibre.nodal_capacity == mis_exhaustive(nodal, edges)


def test_capacity_examples():
    cap = {str(f): f.nodal_capacity for f in ALL}
    assert cap["I0*"] == 4 and cap["I1"] == 0 and cap["II"] == 0
    assert cap["IV*"] == 4 and cap["III*"] == 5 and cap["II*"] == 5
    assert all(cap[f"I{n}"] == n // 2 for n in range(2, 13))


@pytest.mark.parametrize("name", [str(f) for f in ALL] + ["I_3", "I_0*"])
def test_parse_roundtrip(name):
    f = KodairaFibre.parse(name)
    assert KodairaFibre.parse(f.name) == f


@pytest.mark.parametrize("bad", ["V", "I*", "II3", "I-1", "", "IV**", "I"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        KodairaFibre.parse(bad)


def test_search_examples():
    (only,) = elliptic_fibre_search(12, 8)
    assert [str(f) for f in only] == ["I0*", "I0*"]
    assert elliptic_fibre_search(12, 9) == []
    assert any(str(f) == "I0*" for (f,) in [c for c in elliptic_fibre_search(6, 4) if len(c) == 1])
    assert elliptic_fibre_search(0, 0) == [()]
    with pytest.raises(ValueError):
        elliptic_fibre_search(-1, 0)


def _oracle(total, demand):
    by_euler = {}
    for f in fibre_types(total):
        by_euler.setdefault(f.euler, []).append(f)
    found = set()
    for parts in partitions(total):
        for choice in product(*(by_euler.get(p, []) for p in parts)):
            if sum(f.nodal_capacity for f in choice) >= demand:
                found.add(tuple(sorted(choice)))
    return found


@pytest.mark.parametrize("total, demand", [(6, 0), (6, 3), (8, 4), (10, 5), (12, 7), (12, 8)])
def test_search_matches_partition_oracle(total, demand):
    got = elliptic_fibre_search(total, demand)
    assert len(got) == len(set(got))
    assert {tuple(sorted(c)) for c in got} == _oracle(total, demand)


@given(st.dictionaries(st.integers(0, 8), st.sets(st.integers(0, 8), max_size=4), max_size=9))
def test_mis_matches_exhaustive(raw):
    adj = {v: set() for v in raw}
    for v, ns in raw.items():
        for u in ns:
            if u in adj and u != v:
                adj[v].add(u)
                adj[u].add(v)
    s = max_independent_set(adj)
    assert all(not (adj[v] & s) for v in s)
    edges = [(v, u) for v in adj for u in adj[v]]
    assert len(s) == mis_exhaustive(adj, edges)


def test_blowup_configurations_are_trees_with_a_minus_one_curve():
    assert [g.self_intersections for g in blowup_configurations(0)] == [(0,)]
    for m in range(1, 5):
        for g in blowup_configurations(m):
            assert g.size == m + 1
            assert len(g.edges) == m
            assert -1 in g.self_intersections


def test_ruled_certificate_only_the_balanced_string():
    cert = ruled_fibre_certificate(4)
    assert cert[0] == [(0,)]
    assert cert[2] == [(-2, -2, -1)]
    assert all(cert[m] == [] for m in (1, 3, 4))


def test_dual_graph_build_normalises_edges():
    g = DualGraph.build([-2, -2], [(1, 0), (0, 1), (1, 1)])
    assert g.edges == frozenset({(0, 1)})
    assert g.nodal_capacity() == 1
