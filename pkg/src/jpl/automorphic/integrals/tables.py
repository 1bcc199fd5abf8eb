# encoding: utf-8

'''🧮 Global Integrals: table fixtures.

The solver works at concrete parameters only. The published tables are parametric families, so each one
is stored in ``data/tables_expected.json`` as affine expressions in the family parameter and m, and the
rows found by the solver are fitted against them here.
'''

from __future__ import annotations
from . import PACKAGE_NAME
from .const import DEFAULT_PARAMS, FLAG_OPEN_REGIME, TABLES_FIXTURE
from .errors import DomainError, FixtureError
from .orbits import ClassicalOrbit, ExceptionalOrbit
from .partitions import Partition, make_partition
from .solver import Slot, SolutionRow, enumerate_rows
from dataclasses import dataclass, field
from functools import lru_cache
import importlib.resources, json, logging

_logger = logging.getLogger(__name__)


def _polynomial(coefficients, m: int) -> int:
    '''Evaluate a polynomial in m given lowest degree first, or a constant.'''
    if isinstance(coefficients, int): return coefficients
    return sum(c * m ** power for power, c in enumerate(coefficients))


def _affine(terms: tuple[tuple[int, str], ...], constant: int) -> str:
    '''Render a linear form such as p+1 or 2m-2.'''
    text = ''
    for coefficient, symbol in terms:
        if coefficient == 0: continue
        sign = '-' if coefficient < 0 else ('+' if text else '')
        size = abs(coefficient)
        text += sign + (symbol if size == 1 else f'{size}{symbol}')
    if constant or not text:
        text += f'{constant:+d}' if text else str(constant)
    return text


def _render_part(part: tuple[int, ...]) -> str:
    '''Render one fixture part, with its repeat count when it has one.'''
    text = _affine(((part[0], 'p'), (part[1], 'm')), part[2])
    if len(part) == 5:
        text = f'({text})^({_affine(((part[3], "m"),), part[4])})'
    return text


@dataclass(frozen=True)
class Alternative:
    '''One orbit family allowed in a table slot.'''
    family: str
    label: str | None = None
    parts: tuple[tuple[int, ...], ...] = ()
    min: int = 1
    max: int | None = None

    @classmethod
    def from_json(cls, item: dict) -> Alternative:
        '''Read an alternative from its fixture entry, raising FixtureError when malformed.'''
        try:
            if 'label' in item:
                return cls(item['family'], label=item['label'])
            parts = tuple(tuple(int(x) for x in part) for part in item['parts'])
            if any(len(part) not in (3, 5) for part in parts):
                raise FixtureError(f'Parts of {item} must have 3 or 5 entries')
            return cls(item['family'], parts=parts, min=int(item.get('min', 1)), max=item.get('max'))
        except (KeyError, TypeError, ValueError) as ex:
            raise FixtureError(f'Malformed table alternative {item}: {ex}')

    @property
    def exceptional(self) -> bool:
        '''True for Bala–Carter alternatives.'''
        return self.label is not None

    def partition_at(self, param: int, m: int) -> Partition | None:
        '''The family member at ``param``; None when some part would be negative.'''
        values = []
        for part in self.parts:
            a, b, c = part[:3]
            count = part[3] * m + part[4] if len(part) == 5 else 1
            if count < 0: return None
            values.extend([a * param + b * m + c] * count)
        if any(value < 0 for value in values): return None
        return make_partition(values)

    def in_range(self, param: int | None) -> bool:
        '''Whether ``param`` lies within this family's bounds.'''
        if param is None: return False
        return param >= self.min and (self.max is None or param <= self.max)

    def available(self, params: tuple[int, int]) -> bool:
        '''Whether some parameter in ``params`` falls in this family's range.'''
        if self.exceptional: return True
        lo, hi = params
        upper = hi if self.max is None else min(hi, self.max)
        return max(lo, self.min) <= upper

    def matches(self, slot: Slot) -> bool:
        '''Whether ``slot`` carries an orbit of this alternative.'''
        if slot.config.family != self.family: return False
        if self.exceptional:
            return isinstance(slot.orbit, ExceptionalOrbit) and slot.orbit.label == self.label
        if not isinstance(slot.orbit, ClassicalOrbit) or not self.in_range(slot.config.param): return False
        return self.partition_at(slot.config.param, slot.config.m) == slot.orbit.partition

    def __str__(self) -> str:
        if self.exceptional: return f'{self.label}_{self.family}'
        bounds = f'p≥{self.min}' if self.max is None else (f'p={self.min}' if self.min == self.max else f'{self.min}≤p≤{self.max}')
        return '(' + ','.join(_render_part(part) for part in self.parts) + f')_{self.family} [{bounds}]'


@dataclass(frozen=True)
class TableFixture:
    '''A table of integrals sharing one contribution pattern.'''
    table: str
    pattern: tuple
    slots: tuple[tuple[Alternative, ...], ...]
    m: int | None = None
    m_min: int | None = None

    @classmethod
    def from_json(cls, item: dict) -> TableFixture:
        '''Read a table from its fixture entry, raising FixtureError when malformed.'''
        try:
            pattern = tuple(p if isinstance(p, int) else tuple(p) for p in item['pattern'])
            slots = tuple(tuple(Alternative.from_json(alt) for alt in slot) for slot in item['slots'])
            fixture = cls(str(item['table']), pattern, slots, item.get('m'), item.get('m_min'))
        except (KeyError, TypeError) as ex:
            raise FixtureError(f'Malformed table fixture {item}: {ex}')
        if (fixture.m is None) == (fixture.m_min is None):
            raise FixtureError(f'Table {fixture.table} needs exactly one of «m» and «m_min»')
        if len(fixture.pattern) != len(fixture.slots):
            raise FixtureError(f'Table {fixture.table} has {len(fixture.pattern)} terms but {len(fixture.slots)} slots')
        return fixture

    def applies(self, m: int) -> bool:
        '''Whether this table covers GL_m.'''
        return m == self.m if self.m is not None else m >= self.m_min

    def pattern_at(self, m: int) -> tuple[int, ...]:
        '''Contribution pattern evaluated at ``m``.'''
        return tuple(_polynomial(term, m) for term in self.pattern)

    def matches(self, row: SolutionRow) -> bool:
        '''Whether ``row`` has this table's pattern and every slot fits one of its alternatives.'''
        if not self.applies(row.m) or row.contributions != self.pattern_at(row.m): return False
        return all(any(alt.matches(slot) for alt in alts) for slot, alts in zip(row.slots, self.slots))

    @property
    def name(self) -> str:
        return f'Table {self.table}'


@lru_cache(maxsize=None)
def load_table_fixtures() -> tuple[TableFixture, ...]:
    '''Read the packaged table fixtures once.'''
    resource = importlib.resources.files(PACKAGE_NAME).joinpath('data').joinpath(TABLES_FIXTURE)
    _logger.debug('📖 Reading table fixtures from %s', resource)
    try:
        return tuple(TableFixture.from_json(item) for item in json.loads(resource.read_text()))
    except json.JSONDecodeError as ex:
        raise FixtureError(f'Cannot parse {TABLES_FIXTURE}: {ex}')


def orbit_name(slot: Slot) -> str:
    '''Orbit with its group family, like (4,2)_GL or E7(a2)_GE7.'''
    if isinstance(slot.orbit, ExceptionalOrbit): return f'{slot.orbit.label}_{slot.config.family}'
    return str(slot.orbit)


def slot_name(index: int, l: int) -> str:
    '''Column heading of slot ``index`` in a row of length ``l``.'''
    if index == 0: return 'O(π1)'
    if index == l - 1: return 'O(E_τ)'
    return f'O(π{index + 1})'


@dataclass
class TableMatch:
    '''Rows fitted to one table fixture, and the fixture's families no row reached.'''
    fixture: TableFixture
    pattern: tuple[int, ...]
    rows: list[SolutionRow] = field(default_factory=list)
    missing: list[tuple[int, Alternative]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        '''True when every family of the fixture was reached.'''
        return not self.missing

    def orbits(self) -> list[list[str]]:
        '''Distinct orbits found in each slot, in row order.'''
        return [list(dict.fromkeys(orbit_name(row.slots[i]) for row in self.rows)) for i in range(len(self.pattern))]

    def to_json(self) -> dict:
        '''Return this match as a JSON-ready dictionary.'''
        return {
            'table': self.fixture.table, 'pattern': list(self.pattern), 'rows': len(self.rows), 'ok': self.ok,
            'missing': [{'slot': slot_name(i, len(self.pattern)), 'family': str(alt)} for i, alt in self.missing],
            'orbits': self.orbits(),
        }


@dataclass
class TableSet:
    '''Solver rows for one m, sorted into the table fixtures.'''
    m: int
    params: tuple[int, int]
    matches: list[TableMatch] = field(default_factory=list)
    unexpected: list[SolutionRow] = field(default_factory=list)
    flagged: list[SolutionRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        '''True when no row was unexpected and every table was fully reached.'''
        return not self.unexpected and all(match.ok for match in self.matches)

    @property
    def rows(self) -> int:
        '''Number of matched rows.'''
        return sum(len(match.rows) for match in self.matches)

    def to_json(self) -> dict:
        '''Return the whole set as a JSON-ready dictionary.'''
        return {
            'm': self.m, 'params': list(self.params), 'ok': self.ok,
            'tables': [match.to_json() for match in self.matches],
            'unexpected': [row.to_json() for row in self.unexpected],
            'flagged': [row.to_json() for row in self.flagged],
        }

    def to_markdown(self) -> str:
        '''Render the tables as Markdown, one section per fixture.'''
        lo, hi = self.params
        lines = [f'# Global integrals for GL_{self.m}, parameters {lo}..{hi}', '']
        for match in self.matches:
            pattern = ','.join(str(c) for c in match.pattern)
            lines.append(f'## {match.fixture.name}, contributions ({pattern})')
            lines.append('')
            lines.append('| Orbit | Contribution | Found |')
            lines.append('| --- | --- | --- |')
            summary = match.orbits()
            for index, c in enumerate(match.pattern):
                lines.append(f'| {slot_name(index, len(match.pattern))} | {c} | {", ".join(summary[index]) or "—"} |')
            lines.append('')
            for index, alt in match.missing:
                lines.append(f'- 💥 Missing {slot_name(index, len(match.pattern))}: {alt}')
            if match.missing: lines.append('')
        for title, rows in (('Unexpected rows', self.unexpected), ('Flagged rows', self.flagged)):
            if not rows: continue
            lines.append(f'## {title}')
            lines.append('')
            for row in rows:
                flags = f' [{", ".join(sorted(row.flags))}]' if row.flags else ''
                lines.append(f'- ({",".join(str(c) for c in row.contributions)}) {row}{flags}')
            lines.append('')
        lines.append(f'**{"✅ All tables matched" if self.ok else "💥 Tables do not match"}**')
        return '\n'.join(lines) + '\n'


def match_tables(rows: list[SolutionRow], m: int, params: tuple[int, int]) -> TableSet:
    '''Fit ``rows`` to the fixtures for ``m``; open-regime rows are set aside as flagged.'''
    fixtures = [fixture for fixture in load_table_fixtures() if fixture.applies(m)]
    tables = TableSet(m, params, [TableMatch(fixture, fixture.pattern_at(m)) for fixture in fixtures])
    for row in rows:
        if row.flags: tables.flagged.append(row)
        if FLAG_OPEN_REGIME in row.flags: continue
        fitted = [match for match in tables.matches if match.fixture.matches(row)]
        for match in fitted:
            match.rows.append(row)
        if not fitted:
            tables.unexpected.append(row)
    for match in tables.matches:
        for index, alts in enumerate(match.fixture.slots):
            for alt in alts:
                if alt.available(params) and not any(alt.matches(row.slots[index]) for row in match.rows):
                    match.missing.append((index, alt))
    for row in tables.unexpected:
        _logger.warning('💥 Row matches no table: %s %s', row.contributions, row)
    return tables


def enumerate_tables(
    m: int, params: tuple[int, int] = DEFAULT_PARAMS, l_max: int | None = None, cuspidal_exclusion: bool = True,
    allow_open_regime: bool = False, concurrency: int = 1
) -> TableSet:
    '''Solve the dimension equation for GL_m and sort the rows into the table fixtures.'''
    if m < 2:
        raise DomainError(f'The stabilizer GL_m needs m ≥ 2, not {m}')
    rows = enumerate_rows(m, params, l_max, cuspidal_exclusion, allow_open_regime, concurrency)
    tables = match_tables(rows, m, params)
    _logger.info('🧮 m=%d: %d rows in %d tables, %d unexpected, %d flagged', m, tables.rows, len(tables.matches), len(tables.unexpected), len(tables.flagged))
    return tables
