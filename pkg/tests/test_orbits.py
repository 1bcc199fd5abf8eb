# encoding: utf-8

'''🧮 Global Integrals: tests for orbit dimensions and the exceptional fixture.'''

from jpl.automorphic.integrals.const import E6, E7, GL, GSP
from jpl.automorphic.integrals.errors import DomainError, LabelLookupError
from jpl.automorphic.integrals.orbits import (
    ExceptionalOrbit, check_fixture, classical_orbit, closure_graph, contribution, exceptional_orbit, fixture_entries,
    half_dim, orbit_dim, orbits_above, strictly_greater
)
import networkx as nx, pytest


@pytest.mark.parametrize('group, label, dim', [
    (E6, 'D4', 60), (E6, 'D5(a1)', 64), (E6, 'E6(a1)', 70), (E6, 'E6', 72),
    (E7, 'E6', 120), (E7, 'E7(a2)', 122), (E7, 'E7(a1)', 124), (E7, 'E7', 126),
])
def test_exceptional_dimensions(group, label, dim):
    assert orbit_dim(exceptional_orbit(group, label)) == dim


def test_classical_dimension():
    orbit = classical_orbit(GL, 6, (2, 2, 2))
    assert orbit_dim(orbit) == 18
    assert half_dim(orbit) == 9


def test_invalid_classical_orbit():
    with pytest.raises(DomainError):
        classical_orbit(GSP, 4, (3, 1))


def test_unknown_label():
    with pytest.raises(LabelLookupError):
        exceptional_orbit(E6, 'E8(a1)')


def test_mismatched_dimension():
    with pytest.raises(DomainError):
        orbit_dim(ExceptionalOrbit(E6, 'D4', 62))


def test_closure_order():
    d4, e6 = exceptional_orbit(E6, 'D4'), exceptional_orbit(E6, 'E6')
    assert strictly_greater(d4, e6)
    assert not strictly_greater(e6, d4)
    assert not strictly_greater(d4, d4)
    assert strictly_greater(exceptional_orbit(E6, 'E6(a3)'), exceptional_orbit(E6, 'D5'))


def test_incomparable_orbits_of_equal_dimension():
    assert not strictly_greater(exceptional_orbit(E7, 'E6'), exceptional_orbit(E7, 'E7(a3)'))
    assert not strictly_greater(exceptional_orbit(E7, 'E7(a3)'), exceptional_orbit(E7, 'E6'))


def test_orbits_in_different_groups_do_not_compare():
    with pytest.raises(DomainError):
        strictly_greater(exceptional_orbit(E6, 'D4'), exceptional_orbit(E7, 'E6'))
    with pytest.raises(DomainError):
        strictly_greater(exceptional_orbit(E6, 'D4'), classical_orbit(GL, 4, (4,)))


def test_orbits_above():
    above = orbits_above(exceptional_orbit(E6, 'D4'))
    assert [o.label for o in above] == ['D5(a1)', 'E6(a3)', 'D5', 'E6(a1)', 'E6']


def test_contribution():
    assert contribution(exceptional_orbit(E6, 'D4'), exceptional_orbit(E6, 'D5(a1)')) == 2
    assert contribution(exceptional_orbit(E7, 'E6'), exceptional_orbit(E7, 'E7(a1)')) == 2
    assert contribution(classical_orbit(GL, 4, (2, 2)), classical_orbit(GL, 4, (4,))) == 2


def test_contribution_needs_a_larger_orbit():
    with pytest.raises(DomainError):
        contribution(exceptional_orbit(E6, 'E6'), exceptional_orbit(E6, 'D4'))


def test_closure_graph_is_acyclic():
    for group in (E6, E7):
        assert nx.is_directed_acyclic_graph(closure_graph(group))


def test_closure_graph_unknown_group():
    with pytest.raises(LabelLookupError):
        closure_graph('E8')


def test_fixture_is_consistent():
    assert check_fixture() == []


def test_unanchored_entries():
    marked = {key for key, entry in fixture_entries().items() if entry.unanchored}
    assert marked == {(E6, 'D5'), (E7, 'E7(a3)')}
