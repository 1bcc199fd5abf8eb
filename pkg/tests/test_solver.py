# encoding: utf-8

'''🧮 Global Integrals: tests for the dimension-equation solver.'''

from jpl.automorphic.integrals.catalog import instantiate
from jpl.automorphic.integrals.const import (
    AUTOMORPHIC, CUSPIDAL, EISENSTEIN, FLAG_OPEN_REGIME, FLAG_VANISHING, GE7, GL, GSP
)
from jpl.automorphic.integrals.errors import DomainError, OpenRegimeError
from jpl.automorphic.integrals.orbits import classical_orbit, exceptional_orbit
from jpl.automorphic.integrals.partitions import Partition
from jpl.automorphic.integrals.solver import (
    Slot, SolutionRow, admissible_orbits, brute_force_rows, contribution_budget, cuspidal_contribution,
    enumerate_rows, max_length, solve, verify_cuspidal_bound, verify_rows
)
import pytest


def test_budget():
    assert contribution_budget(2) == 3
    assert contribution_budget(6) == 35
    with pytest.raises(DomainError):
        contribution_budget(1)


@pytest.mark.parametrize('k, m', [(1, 2), (2, 2), (1, 3), (2, 3), (3, 4), (2, 6)])
def test_cuspidal_term(k, m):
    assert cuspidal_contribution(k, m) == k * m * (m - 1) // 2


def test_cuspidal_gl_slots_are_generic():
    with pytest.raises(DomainError):
        Slot(CUSPIDAL, instantiate(GL, 2, 2), classical_orbit(GL, 4, (3, 1)))


def test_slot_contribution():
    slot = Slot(EISENSTEIN, instantiate(GE7, None, 2), exceptional_orbit('E7', 'E7(a1)'))
    assert slot.contribution == 2


def test_admissible_orbits():
    config = instantiate(GL, 2, 2)
    assert [o.partition for o in admissible_orbits(config, 1)] == [Partition((3, 1))]
    assert [o.partition for o in admissible_orbits(config, 2)] == [Partition((4,))]
    with pytest.raises(DomainError):
        admissible_orbits(config, 0)


def test_row_must_fill_the_budget():
    cuspidal = Slot(CUSPIDAL, instantiate(GL, 1, 2), classical_orbit(GL, 2, (2,)))
    eisenstein = Slot(EISENSTEIN, instantiate(GL, 2, 2), classical_orbit(GL, 4, (3, 1)))
    with pytest.raises(DomainError):
        SolutionRow(2, (cuspidal, eisenstein))


def test_row_roles():
    cuspidal = Slot(CUSPIDAL, instantiate(GL, 1, 2), classical_orbit(GL, 2, (2,)))
    automorphic = Slot(AUTOMORPHIC, instantiate(GL, 2, 2), classical_orbit(GL, 4, (4,)))
    with pytest.raises(DomainError):
        SolutionRow(2, (cuspidal, automorphic))


def test_solve():
    rows = solve(2, [(GL, 1), (GL, 2)])
    assert len(rows) == 1
    row = rows[0]
    assert row.contributions == (1, 2)
    assert row.slots[-1].orbit.partition == Partition((4,))
    assert row.to_json()['total'] == 3


def test_solve_with_symplectic_eisenstein():
    rows = solve(2, [(GL, 1), (GSP, 1)])
    assert [row.contributions for row in rows] == [(1, 2)]


def test_solve_refuses_the_open_regime():
    with pytest.raises(OpenRegimeError):
        solve(4, [(GL, 1), (GL, 1)])


def test_rows_fill_the_budget():
    rows = enumerate_rows(2)
    assert rows
    assert all(row.total == 3 for row in rows)
    assert verify_rows(rows) == []


def test_rows_come_out_sorted():
    rows = enumerate_rows(3, (1, 3))
    assert [row.key() for row in rows] == sorted(row.key() for row in rows)


def test_against_brute_force():
    found = {row.key() for row in enumerate_rows(2, (1, 4), l_max=3)}
    assert found == brute_force_rows(2, (1, 4), l_max=3)


def test_concurrency_does_not_change_rows():
    single = enumerate_rows(2, (1, 3))
    pooled = enumerate_rows(2, (1, 3), concurrency=2)
    assert [row.key() for row in pooled] == [row.key() for row in single]


@pytest.mark.parametrize('m', [2, 3])
def test_max_length(m):
    assert max_length(m) == 3


def test_open_regime_is_skipped_by_default():
    rows = enumerate_rows(4, (1, 2), l_max=3)
    assert not any(FLAG_OPEN_REGIME in row.flags for row in rows)


def test_open_regime_rows_are_flagged():
    rows = enumerate_rows(4, (1, 2), l_max=3, allow_open_regime=True)
    open_rows = [row for row in rows if row.slots[0].config.param == 1]
    assert open_rows
    assert all({FLAG_OPEN_REGIME, FLAG_VANISHING} <= row.flags for row in open_rows)


def test_bad_parameter_range():
    with pytest.raises(DomainError):
        enumerate_rows(2, (3, 1))
    with pytest.raises(DomainError):
        enumerate_rows(2, (1, 2), l_max=1)


def test_large_cuspidal_blocks_never_solve():
    report = verify_cuspidal_bound(range(2, 5), range(1, 5), range(2, 4), (1, 3))
    assert report.ok
    assert report.cases > 0


def test_solve_can_enter_the_open_regime():
    open_row = next(
        row for row in enumerate_rows(4, (1, 2), l_max=3, allow_open_regime=True) if FLAG_OPEN_REGIME in row.flags
    )
    choices = [(slot.config.family, slot.config.param) for slot in open_row.slots]
    rows = solve(4, choices, allow_open_regime=True)
    assert open_row.key() in {row.key() for row in rows}
    assert all({FLAG_OPEN_REGIME, FLAG_VANISHING} <= row.flags for row in rows)
