# encoding: utf-8

'''🧮 Global Integrals: tests for partition arithmetic.'''

from hypothesis import given, strategies as st
from jpl.automorphic.integrals.const import GL, GSO, GSP
from jpl.automorphic.integrals.errors import DomainError
from jpl.automorphic.integrals.partitions import (
    ClassicalFamily, Partition, add, dominates, double, is_valid, make_partition, nilpotent_dim,
    partitions_dominating, strictly_dominates, transpose, valid_partitions
)
import pytest


partitions = st.lists(st.integers(min_value=1, max_value=7), max_size=7).map(make_partition)


def test_construction_drops_zeros():
    assert Partition((3, 1, 0, 0)).parts == (3, 1)


def test_construction_rejects_increasing_parts():
    with pytest.raises(DomainError):
        Partition((1, 3))


def test_construction_rejects_negative_parts():
    with pytest.raises(DomainError):
        make_partition([2, -1])


@pytest.mark.parametrize('text', ['5,3', '(5,3)', '5 3', '[5, 3]'])
def test_parse(text):
    assert Partition.parse(text) == Partition((5, 3))


def test_parse_garbage():
    with pytest.raises(DomainError):
        Partition.parse('five,three')


def test_str():
    assert str(Partition((4, 2, 2))) == '(4,2,2)'


def test_transpose():
    assert transpose(Partition((4, 2, 1))) == Partition((3, 2, 1, 1))
    assert transpose(Partition()) == Partition()


def test_dominance_is_partial():
    a, b = Partition((3, 1, 1, 1)), Partition((2, 2, 2))
    assert not dominates(a, b)
    assert not dominates(b, a)
    assert strictly_dominates(Partition((3, 1)), Partition((2, 2)))
    assert not strictly_dominates(Partition((2, 2)), Partition((2, 2)))


def test_dominance_needs_equal_sizes():
    with pytest.raises(DomainError):
        dominates(Partition((3,)), Partition((2, 2)))


def test_add_and_double():
    assert add(Partition((2, 1)), Partition((3,))) == Partition((5, 1))
    assert add(Partition((2, 1)), Partition((2, 1))) == Partition((4, 2))
    assert double(Partition((3, 1))) == Partition((6, 2))


def test_validity():
    assert is_valid(Partition((3, 3)), ClassicalFamily(GSP, 6))
    assert not is_valid(Partition((3, 1)), ClassicalFamily(GSP, 4))
    assert is_valid(Partition((2, 2)), ClassicalFamily(GSO, 4))
    assert not is_valid(Partition((2, 1, 1)), ClassicalFamily(GSO, 4))
    assert is_valid(Partition((3, 1)), ClassicalFamily(GL, 4))


def test_symplectic_needs_even_size():
    with pytest.raises(DomainError):
        ClassicalFamily(GSP, 5)


def test_unknown_family_tag():
    with pytest.raises(DomainError):
        ClassicalFamily('GU', 4)


@pytest.mark.parametrize('tag, parts, expected', [
    (GL, (4,), 12),
    (GL, (2, 2), 8),
    (GSP, (4,), 8),      # regular orbit of Sp_4
    (GSP, (2, 2), 6),    # subregular orbit of Sp_4
    (GSO, (5,), 8),      # regular orbit of SO_5
    (GSP, (3, 3), 14),
])
def test_nilpotent_dim(tag, parts, expected):
    p = Partition(parts)
    assert nilpotent_dim(p, ClassicalFamily(tag, p.size)) == expected


def test_nilpotent_dim_checks_size():
    with pytest.raises(DomainError):
        nilpotent_dim(Partition((2, 2)), ClassicalFamily(GL, 5))


def test_partitions_dominating():
    dominating = partitions_dominating(Partition((2, 2)), ClassicalFamily(GL, 4))
    assert dominating == [Partition((3, 1)), Partition((4,))]


def test_partitions_dominating_needs_valid_base():
    with pytest.raises(DomainError):
        partitions_dominating(Partition((3, 1)), ClassicalFamily(GSP, 4))


def test_valid_partitions_respects_max_parts():
    assert all(len(p) <= 2 for p in valid_partitions(ClassicalFamily(GL, 6), max_parts=2))
    assert len(valid_partitions(ClassicalFamily(GL, 6))) == 11


@given(partitions)
def test_transpose_is_an_involution(p):
    assert transpose(transpose(p)) == p
    assert transpose(p).size == p.size


@given(st.integers(min_value=1, max_value=9).flatmap(
    lambda n: st.tuples(*(st.sampled_from(valid_partitions(ClassicalFamily(GL, n))),) * 2)
))
def test_transpose_reverses_dominance(pair):
    a, b = pair
    assert dominates(a, b) == dominates(transpose(b), transpose(a))


@given(st.sampled_from([GL, GSP, GSO]), st.integers(min_value=1, max_value=6), st.data())
def test_orbit_dimensions_are_even(tag, half, data):
    family = ClassicalFamily(tag, 2 * half + (data.draw(st.integers(0, 1)) if tag != GSP else 0))
    p = data.draw(st.sampled_from(valid_partitions(family)))
    assert nilpotent_dim(p, family) % 2 == 0
