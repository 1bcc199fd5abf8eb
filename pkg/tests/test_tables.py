# encoding: utf-8

'''🧮 Global Integrals: tests for matching solver rows against the table fixtures.'''

from jpl.automorphic.integrals.const import FLAG_LIFTED
from jpl.automorphic.integrals.errors import DomainError, FixtureError
from jpl.automorphic.integrals.partitions import Partition
from jpl.automorphic.integrals.tables import (
    Alternative, TableFixture, enumerate_tables, load_table_fixtures, slot_name
)
import pytest


def test_fixtures_load():
    fixtures = load_table_fixtures()
    assert {fixture.table for fixture in fixtures} == {'1', '2', '3', '4', '5', '6', '7', '8'}


def test_parametric_pattern():
    table8 = next(fixture for fixture in load_table_fixtures() if fixture.table == '8')
    assert not table8.applies(3)
    assert table8.pattern_at(4) == (12, 3)
    assert table8.pattern_at(6) == (30, 5)


def test_alternative_with_repeated_part():
    alt = Alternative.from_json({'family': 'GL', 'parts': [[1, 0, 1], [1, 0, 0, 1, -2], [1, 0, -1]], 'min': 1})
    assert alt.partition_at(2, 4) == Partition((3, 2, 2, 1))
    assert alt.partition_at(1, 4) == Partition((2, 1, 1))
    assert str(alt) == '(p+1,(p)^(m-2),p-1)_GL [p≥1]'


def test_malformed_alternative():
    with pytest.raises(FixtureError):
        Alternative.from_json({'family': 'GL', 'parts': [[1, 0]]})


def test_fixture_needs_one_of_m_and_m_min():
    with pytest.raises(FixtureError):
        TableFixture.from_json({'table': 'X', 'pattern': [3], 'slots': [[]]})
    with pytest.raises(FixtureError):
        TableFixture.from_json({'table': 'X', 'm': 2, 'm_min': 2, 'pattern': [3], 'slots': [[]]})


def test_slot_names():
    assert [slot_name(i, 3) for i in range(3)] == ['O(π1)', 'O(π2)', 'O(E_τ)']


@pytest.mark.parametrize('m', [2, 3])
def test_small_tables_match(m):
    tables = enumerate_tables(m)
    assert tables.ok
    assert tables.rows > 0
    assert tables.unexpected == []


@pytest.mark.parametrize('m', [4, 5, 6])
def test_closed_regime_matches_the_single_table(m):
    tables = enumerate_tables(m)
    assert tables.ok
    assert [match.fixture.table for match in tables.matches] == ['8']
    assert tables.flagged == []


def test_lifting_the_cuspidal_exclusion_breaks_the_m3_tables():
    tables = enumerate_tables(3, cuspidal_exclusion=False)
    assert not tables.ok
    assert tables.unexpected
    assert all(FLAG_LIFTED in row.flags for row in tables.unexpected)


def test_open_regime_rows_are_set_aside():
    tables = enumerate_tables(4, (1, 2), l_max=3, allow_open_regime=True)
    assert tables.flagged
    assert tables.unexpected == []


def test_markdown():
    text = enumerate_tables(2).to_markdown()
    assert text.startswith('# Global integrals for GL_2, parameters 1..6')
    assert text.endswith('**✅ All tables matched**\n')


def test_json():
    payload = enumerate_tables(2, (1, 3)).to_json()
    assert payload['m'] == 2
    assert payload['params'] == [1, 3]


def test_m_below_two():
    with pytest.raises(DomainError):
        enumerate_tables(1)
