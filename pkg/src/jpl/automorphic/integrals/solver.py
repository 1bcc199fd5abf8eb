# encoding: utf-8

'''🧮 Global Integrals: the dimension-equation solver.

A global integral for GL_m pairs l automorphic representations, the first cuspidal and the last an
Eisenstein series, each on a group G_i carrying a Fourier coefficient with stabilizer GL_m. The integral
can only be nonzero when the dimensions add up:

    Σ (dim π_i − dim U(O_i)) = dim GL_m − dim Z = m² − 1

Every slot's term is a positive integer, so for fixed m there are finitely many patterns, and for each
pattern finitely many orbits per family and parameter. ``enumerate_rows`` walks them all.
'''

from __future__ import annotations
from .catalog import CoefficientConfig, catalog_families, instantiate
from .const import (
    AUTOMORPHIC, CUSPIDAL, DEFAULT_PARAMS, EISENSTEIN, FLAG_LIFTED, FLAG_OPEN_REGIME, FLAG_VANISHING, GE6,
    GE6_CUSPIDAL_EXCLUDED, GL, MAX_SEARCH_LENGTH, OPEN_REGIME_MIN_M, PROCESS_TIMEOUT, STATUS_NONZERO,
    STATUS_NOT_UNIPOTENT, STATUS_UNKNOWN
)
from .errors import DomainError, OpenRegimeError
from .orbits import (
    ClassicalOrbit, ExceptionalOrbit, OrbitLabel, classical_orbit, contribution, exceptional_orbits, half_dim,
    orbits_above, strictly_greater
)
from .partitions import Partition, partitions_dominating, strictly_dominates, valid_partitions
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field, replace
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence
import logging

_logger = logging.getLogger(__name__)

ROLES = (CUSPIDAL, AUTOMORPHIC, EISENSTEIN)
STATUSES = (STATUS_UNKNOWN, STATUS_NONZERO, STATUS_NOT_UNIPOTENT)


@dataclass(frozen=True)
class Slot:
    '''One representation of a global integral: its role, its coefficient, and the orbit it is attached to.'''
    role: str
    config: CoefficientConfig
    orbit: OrbitLabel
    contribution: int = field(init=False, compare=False)

    def __post_init__(self):
        '''Check the role, keep cuspidal GL slots generic, and compute the slot's term.'''
        if self.role not in ROLES:
            raise DomainError(f'Unknown slot role «{self.role}»')
        if self.role == CUSPIDAL and self.config.family == GL:
            # Cuspidal representations of GL are generic
            regular = Partition((self.config.base_orbit.partition.size,))
            if not isinstance(self.orbit, ClassicalOrbit) or self.orbit.partition != regular:
                raise DomainError(f'A cuspidal slot on {self.config.group} must carry {regular}, not {self.orbit}')
        object.__setattr__(self, 'contribution', contribution(self.config.base_orbit, self.orbit))

    def key(self) -> tuple:
        '''Sort key: term first, then family, parameter and orbit.'''
        return (self.contribution, self.config.family, self.config.param or 0, str(self.orbit))

    def to_json(self) -> dict:
        '''Return this slot as a JSON-ready dictionary.'''
        return {
            'role': self.role, 'family': self.config.family, 'param': self.config.param,
            'group': self.config.group, 'orbit': self.orbit.to_json(), 'contribution': self.contribution,
        }

    def __str__(self) -> str:
        return f'{self.orbit}@{self.config}'


@dataclass(frozen=True)
class SolutionRow:
    '''A solution of the dimension equation: slots in order, the first cuspidal and the last Eisenstein.'''
    m: int
    slots: tuple[Slot, ...]
    status: str = STATUS_UNKNOWN
    flags: frozenset[str] = frozenset()

    def __post_init__(self):
        '''Check the slot count, the role order, the status, and that the terms fill the budget.'''
        if len(self.slots) < 2:
            raise DomainError(f'A global integral needs at least two representations, not {len(self.slots)}')
        roles = tuple(slot.role for slot in self.slots)
        expected = (CUSPIDAL,) + (AUTOMORPHIC,) * (len(roles) - 2) + (EISENSTEIN,)
        if roles != expected:
            raise DomainError(f'Slot roles {roles} are not cuspidal, automorphic…, eisenstein')
        if self.status not in STATUSES:
            raise DomainError(f'Unknown row status «{self.status}»')
        if self.total != contribution_budget(self.m):
            raise DomainError(f'Contributions {self.contributions} do not add up to {contribution_budget(self.m)}')

    @property
    def l(self) -> int:
        '''Number of representations in the integral.'''
        return len(self.slots)

    @property
    def contributions(self) -> tuple[int, ...]:
        '''Term of each slot, in order.'''
        return tuple(slot.contribution for slot in self.slots)

    @property
    def total(self) -> int:
        return sum(self.contributions)

    def key(self) -> tuple:
        '''Canonical sort key for rows.'''
        return (self.l, self.contributions, tuple(slot.key() for slot in self.slots))

    def with_status(self, status: str) -> SolutionRow:
        '''A copy of this row with a new status.'''
        return replace(self, status=status)

    def to_json(self) -> dict:
        '''Return this row as a JSON-ready dictionary.'''
        return {
            'm': self.m, 'l': self.l, 'contributions': list(self.contributions), 'total': self.total,
            'status': self.status, 'flags': sorted(self.flags), 'slots': [slot.to_json() for slot in self.slots],
        }

    def __str__(self) -> str:
        return ' ⊗ '.join(str(slot) for slot in self.slots)


def contribution_budget(m: int) -> int:
    '''dim GL_m − dim Z, the right side of the dimension equation.'''
    if m < 2:
        raise DomainError(f'The stabilizer GL_m needs m ≥ 2, not {m}')
    return m * m - 1


def cuspidal_contribution(k: int, m: int) -> int:
    '''Term of a cuspidal representation of GL_km, computed from the orbit dimensions.'''
    config = instantiate(GL, k, m)
    return contribution(config.base_orbit, classical_orbit(GL, k * m, (k * m,)))


def _check_params(params: tuple[int, int]) -> tuple[int, int]:
    '''Return ``params`` as (lo, hi) after making sure the range is non-empty and positive.'''
    lo, hi = params
    if lo < 1 or hi < lo:
        raise DomainError(f'Parameter range {lo}..{hi} must be non-empty and start at 1 or above')
    return lo, hi


@lru_cache(maxsize=None)
def _orbits_above(config: CoefficientConfig) -> tuple[OrbitLabel, ...]:
    '''Every orbit strictly above the base orbit of ``config``.'''
    base = config.base_orbit
    if isinstance(base, ExceptionalOrbit):
        return tuple(orbits_above(base))
    return tuple(ClassicalOrbit(base.family, p) for p in partitions_dominating(base.partition, base.family))


def admissible_orbits(config: CoefficientConfig, c: int) -> list[OrbitLabel]:
    '''Orbits strictly above the base orbit of ``config`` whose term in the dimension equation is ``c``.'''
    if c < 1:
        raise DomainError(f'A slot term must be at least 1, not {c}')
    base = half_dim(config.base_orbit)
    return [orbit for orbit in _orbits_above(config) if half_dim(orbit) - base == c]


def _excluded(config: CoefficientConfig, orbit: OrbitLabel, role: str, cuspidal_exclusion: bool) -> bool:
    '''Cuspidal representations of GE6 never attach to D5 or D5(a1).'''
    return (
        cuspidal_exclusion and role == CUSPIDAL and config.family == GE6 and isinstance(orbit, ExceptionalOrbit)
        and orbit.label in GE6_CUSPIDAL_EXCLUDED
    )


@lru_cache(maxsize=None)
def _options_for(config: CoefficientConfig, role: str, cuspidal_exclusion: bool, cap: int) -> tuple[Slot, ...]:
    '''Slots of one role for ``config`` with terms at most ``cap``, sorted by key.'''
    if role == CUSPIDAL and config.family == GL:
        size = config.base_orbit.partition.size
        candidates = (classical_orbit(GL, size, (size,)),)
    else:
        candidates = _orbits_above(config)
    slots = [Slot(role, config, orbit) for orbit in candidates if not _excluded(config, orbit, role, cuspidal_exclusion)]
    return tuple(sorted((slot for slot in slots if slot.contribution <= cap), key=Slot.key))


def _configs(m: int, params: tuple[int, int]) -> list[CoefficientConfig]:
    '''Every coefficient configuration admitting GL_m, over the parameter range.'''
    lo, hi = params
    configs = []
    for family in catalog_families(m):
        for param in (range(lo, hi + 1) if family.parametric else (None,)):
            configs.append(instantiate(family, param, m))
    return configs


@lru_cache(maxsize=None)
def _slot_options(m: int, role: str, params: tuple[int, int], cuspidal_exclusion: bool) -> tuple[Slot, ...]:
    '''Every slot of the given role over all families and parameters, sorted by ``Slot.key``.'''
    cap = contribution_budget(m) - 1
    slots = [slot for config in _configs(m, params) for slot in _options_for(config, role, cuspidal_exclusion, cap)]
    slots.sort(key=Slot.key)
    _logger.debug('🔍 %d %s slot options for m=%d, params %d..%d', len(slots), role, m, *params)
    return tuple(slots)


def in_open_regime(m: int, cuspidal: Slot) -> bool:
    '''From m = 4 on, a cuspidal GL_m slot leaves (½m + 1)(m − 1) to fill, which the equation cannot pin down.'''
    return m >= OPEN_REGIME_MIN_M and cuspidal.config.family == GL and cuspidal.config.param == 1


def _flags(m: int, cuspidal: Slot) -> frozenset[str]:
    '''Flags for rows whose cuspidal slot is in the open regime or on a lifted GE6 orbit.'''
    flags = set()
    if in_open_regime(m, cuspidal):
        flags.update((FLAG_OPEN_REGIME, FLAG_VANISHING))
    if cuspidal.config.family == GE6 and cuspidal.orbit.label in GE6_CUSPIDAL_EXCLUDED:
        flags.add(FLAG_LIFTED)
    return frozenset(flags)


def _combinations(options: Sequence[Slot], target: int, max_count: int, start: int = 0) -> Iterator[tuple[Slot, ...]]:
    '''Non-decreasing runs of ``options`` with terms adding to ``target``, at most ``max_count`` long.'''
    if target == 0:
        yield ()
        return
    if max_count == 0: return
    for index in range(start, len(options)):
        slot = options[index]
        if slot.contribution > target: break
        for rest in _combinations(options, target - slot.contribution, max_count - 1, index):
            yield (slot,) + rest


def _rows_for(cuspidal: Slot, m: int, params: tuple[int, int], cuspidal_exclusion: bool, l_max: int) -> list[SolutionRow]:
    '''All rows starting with ``cuspidal``; middle slots come out sorted, so each multiset appears once.'''
    remaining = contribution_budget(m) - cuspidal.contribution
    if remaining < 1: return []
    middle = _slot_options(m, AUTOMORPHIC, params, cuspidal_exclusion)
    flags, rows = _flags(m, cuspidal), []
    for last in _slot_options(m, EISENSTEIN, params, cuspidal_exclusion):
        rest = remaining - last.contribution
        if rest < 0: break
        for run in _combinations(middle, rest, l_max - 2):
            rows.append(SolutionRow(m, (cuspidal,) + run + (last,), flags=flags))
    return rows


def _init_worker(loglevel: int):
    '''Configure logging in a worker process to match the parent.'''
    logging.basicConfig(level=loglevel, format='%(levelname)s %(message)s')


def _enumerate_single(cuspidals: Iterable[Slot], *args) -> list[SolutionRow]:
    '''Rows for each cuspidal slot in turn, in this process.'''
    rows = []
    for cuspidal in cuspidals:
        rows.extend(_rows_for(cuspidal, *args))
    return rows


def _enumerate_pool(cuspidals: Iterable[Slot], concurrency: int, *args) -> list[SolutionRow]:
    '''Rows for each cuspidal slot, one task per slot in a pool of ``concurrency`` workers.'''
    rows = []
    with ProcessPoolExecutor(
        max_workers=concurrency, initializer=_init_worker, initargs=(logging.getLogger().getEffectiveLevel(),)
    ) as executor:
        futures = [executor.submit(_rows_for, cuspidal, *args) for cuspidal in cuspidals]
        for future in as_completed(futures, timeout=PROCESS_TIMEOUT):
            rows.extend(future.result())
    return rows


def enumerate_rows(
    m: int, params: tuple[int, int] = DEFAULT_PARAMS, l_max: int | None = None, cuspidal_exclusion: bool = True,
    allow_open_regime: bool = False, concurrency: int = 1
) -> list[SolutionRow]:
    '''Every solution of the dimension equation for GL_m with family parameters in ``params``.

    Rows come back in canonical order whatever ``concurrency`` is. Cuspidal GL_m slots with m ≥ 4 are
    skipped unless ``allow_open_regime``; their rows are then flagged instead of classified.
    '''
    budget = contribution_budget(m)
    params = _check_params(params)
    l_max = min(l_max or MAX_SEARCH_LENGTH, MAX_SEARCH_LENGTH)
    if l_max < 2:
        raise DomainError(f'A global integral needs at least two representations; l_max {l_max} is too small')
    cuspidals, skipped = [], 0
    for slot in _slot_options(m, CUSPIDAL, params, cuspidal_exclusion):
        if in_open_regime(m, slot) and not allow_open_regime:
            skipped += 1
        else:
            cuspidals.append(slot)
    if skipped:
        _logger.info('🤷 Skipping %d cuspidal choice(s) in the open regime for m=%d', skipped, m)
    _logger.info('🔍 Solving for m=%d (budget %d) over %d cuspidal choices, l ≤ %d', m, budget, len(cuspidals), l_max)
    args = (m, params, cuspidal_exclusion, l_max)
    if concurrency > 1 and len(cuspidals) > 1:
        rows = _enumerate_pool(cuspidals, concurrency, *args)
    else:
        rows = _enumerate_single(cuspidals, *args)
    rows.sort(key=SolutionRow.key)
    _logger.info('🧮 Found %d rows for m=%d', len(rows), m)
    return rows


def solve(
    m: int, choices: Sequence[tuple[str, int | None]], cuspidal_exclusion: bool = True, allow_open_regime: bool = False
) -> list[SolutionRow]:
    '''Rows whose slots use exactly the (family, parameter) ``choices``, in order.

    The first choice is the cuspidal slot and the last the Eisenstein slot; anything between is automorphic.
    '''
    if len(choices) < 2:
        raise DomainError(f'A global integral needs at least two representations, not {len(choices)}')
    budget = contribution_budget(m)
    roles = (CUSPIDAL,) + (AUTOMORPHIC,) * (len(choices) - 2) + (EISENSTEIN,)
    configs = [instantiate(family, param, m) for family, param in choices]
    options = [_options_for(config, role, cuspidal_exclusion, budget - 1) for config, role in zip(configs, roles)]
    if m >= OPEN_REGIME_MIN_M and configs[0].family == GL and configs[0].param == 1 and not allow_open_regime:
        raise OpenRegimeError(f'A cuspidal GL_{m} slot leaves the equation open for m={m}; allow the open regime first')
    rows = []

    def _extend(chosen: tuple[Slot, ...], remaining: int):
        index = len(chosen)
        if index == len(options):
            if remaining == 0:
                rows.append(SolutionRow(m, chosen, flags=_flags(m, chosen[0])))
            return
        for slot in options[index]:
            if slot.contribution > remaining - (len(options) - index - 1): break
            _extend(chosen + (slot,), remaining - slot.contribution)

    _extend((), budget)
    return rows


def verify_rows(rows: Iterable[SolutionRow]) -> list[SolutionRow]:
    '''Rows whose orbit dimensions, summed afresh, miss m² − 1; empty when all is well.'''
    bad = []
    for row in rows:
        total = sum(half_dim(slot.orbit) - half_dim(slot.config.base_orbit) for slot in row.slots)
        if total != row.m * row.m - 1: bad.append(row)
    return bad


def max_length(
    m: int, params: tuple[int, int] = DEFAULT_PARAMS, allow_open_regime: bool = False, cuspidal_exclusion: bool = True,
    concurrency: int = 1
) -> int:
    '''The longest integral found; 0 when there are none.'''
    rows = enumerate_rows(m, params, None, cuspidal_exclusion, allow_open_regime, concurrency)
    return max((row.l for row in rows), default=0)


@dataclass
class CuspidalBoundReport:
    '''Outcome of checking that cuspidal GL_km slots force k ≤ 2.'''
    counterexamples: list[SolutionRow] = field(default_factory=list)
    identity_failures: list[tuple[int, int, int]] = field(default_factory=list)  # (k, m, computed term)
    cases: int = 0

    @property
    def ok(self) -> bool:
        '''True if no counterexample turned up and every cuspidal term matched its formula.'''
        return not self.counterexamples and not self.identity_failures


def verify_cuspidal_bound(
    m_range: Iterable[int], k_range: Iterable[int], l_range: Iterable[int], params: tuple[int, int] = DEFAULT_PARAMS
) -> CuspidalBoundReport:
    '''Search for rows with a cuspidal GL_km slot, k in ``k_range``, and check the cuspidal term ½km(m − 1).'''
    report = CuspidalBoundReport()
    k_values, l_values = list(k_range), list(l_range)
    for m in m_range:
        for k in k_values:
            term = cuspidal_contribution(k, m)
            if term != k * m * (m - 1) // 2:
                report.identity_failures.append((k, m, term))
            if k < 3: continue
            cuspidal = Slot(CUSPIDAL, instantiate(GL, k, m), classical_orbit(GL, k * m, (k * m,)))
            for l in l_values:
                report.cases += 1
                rows = [row for row in _rows_for(cuspidal, m, params, True, l) if row.l == l]
                report.counterexamples.extend(rows)
    for row in report.counterexamples:
        _logger.warning('💥 Cuspidal slot with k ≥ 3 solved the equation: %s', row)
    return report


def brute_force_rows(
    m: int, params: tuple[int, int] = DEFAULT_PARAMS, l_max: int = 3, cuspidal_exclusion: bool = True
) -> set[tuple]:
    '''Keys of every row found by trying all valid orbits of every slot, with no pruning or caching.

    Slow; meant as an independent oracle for small m and parameter ranges.
    '''
    budget = contribution_budget(m)
    lo, hi = _check_params(params)
    per_role = {role: [] for role in ROLES}
    for family in catalog_families(m):
        for param in (range(lo, hi + 1) if family.parametric else (None,)):
            config = family.config(param, m)
            base = config.base_orbit
            if isinstance(base, ExceptionalOrbit):
                candidates = [o for o in exceptional_orbits(base.group) if strictly_greater(base, o)]
            else:
                candidates = [
                    ClassicalOrbit(base.family, p) for p in valid_partitions(base.family)
                    if strictly_dominates(p, base.partition)
                ]
            for role in ROLES:
                for orbit in candidates:
                    if _excluded(config, orbit, role, cuspidal_exclusion): continue
                    try:
                        per_role[role].append(Slot(role, config, orbit))
                    except DomainError:
                        continue
    keys = set()
    for l in range(2, l_max + 1):
        pools = [per_role[CUSPIDAL]] + [per_role[AUTOMORPHIC]] * (l - 2) + [per_role[EISENSTEIN]]
        for chosen in product(*pools):
            if sum(slot.contribution for slot in chosen) != budget: continue
            if in_open_regime(m, chosen[0]): continue
            middle = tuple(sorted(chosen[1:-1], key=Slot.key))
            row = SolutionRow(m, (chosen[0],) + middle + (chosen[-1],), flags=_flags(m, chosen[0]))
            keys.add(row.key())
    return keys
