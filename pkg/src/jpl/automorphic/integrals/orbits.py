# encoding: utf-8

'''🧮 Global Integrals: orbit dimensions.

A representation attached to a unipotent orbit O has dimension ½ dim O. The dimension equation of a
global integral adds, slot by slot, the excess of that dimension over the dimension of the unipotent
group U(O) of the slot's Fourier coefficient; ``contribution`` computes one such term.

Classical orbits use the partition formula. Exceptional orbits come from ``data/orbits_exceptional.json``
together with the closure relations needed here, assembled into a networkx Hasse diagram.
'''

from __future__ import annotations
from . import PACKAGE_NAME
from .const import ORBITS_FIXTURE, E6, E7
from .errors import DomainError, LabelLookupError
from .partitions import Partition, ClassicalFamily, is_valid, nilpotent_dim, strictly_dominates
from dataclasses import dataclass, field
from functools import lru_cache
import importlib.resources, json, logging, networkx as nx

_logger = logging.getLogger(__name__)

# Half-dimensions pinned independently of the fixture transcription
ANCHORED_HALF_DIMS = {
    (E6, 'D4'): 30,
    (E6, 'D5(a1)'): 32,
    (E6, 'E6(a3)'): 33,
    (E6, 'E6(a1)'): 35,
    (E6, 'E6'): 36,
    (E7, 'E6'): 60,
    (E7, 'E7(a2)'): 61,
    (E7, 'E7(a1)'): 62,
}


@dataclass(frozen=True)
class ClassicalOrbit:
    '''A unipotent orbit of GL, GSp or GSO labeled by a partition.'''
    family: ClassicalFamily
    partition: Partition

    def __post_init__(self):
        '''Reject partitions that label no orbit of the family.'''
        if not is_valid(self.partition, self.family):
            raise DomainError(f'{self.partition} does not label an orbit of {self.family}')

    @property
    def group(self) -> str:
        '''Name of the ambient group, such as GSp_6.'''
        return str(self.family)

    def to_json(self) -> dict:
        '''Return this orbit as a JSON-ready dictionary.'''
        return {'family': self.family.tag, 'size': self.family.size, 'partition': self.partition.to_json()}

    def __str__(self) -> str:
        return f'{self.partition}_{self.family.tag}'


@dataclass(frozen=True)
class ExceptionalOrbit:
    '''A unipotent orbit of E6 or E7 named by its Bala–Carter label.'''
    group: str
    label: str
    dim: int | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        '''Return this orbit, dimension included, as a JSON-ready dictionary.'''
        return {'group': self.group, 'label': self.label, 'dim': orbit_dim(self)}

    def __str__(self) -> str:
        return self.label


OrbitLabel = ClassicalOrbit | ExceptionalOrbit


@dataclass(frozen=True)
class FixtureEntry:
    '''One row of the exceptional orbit fixture.'''
    group: str
    label: str
    dim: int
    greater_than: tuple[str, ...]
    unanchored: bool = False


@lru_cache(maxsize=None)
def fixture_entries() -> dict[tuple[str, str], FixtureEntry]:
    '''Load the exceptional orbit fixture once, keyed by (group, label).'''
    resource = importlib.resources.files(PACKAGE_NAME).joinpath('data').joinpath(ORBITS_FIXTURE)
    _logger.debug('📖 Reading exceptional orbits from %s', resource)
    entries = {}
    for item in json.loads(resource.read_text()):
        entry = FixtureEntry(
            group=item['group'], label=item['label'], dim=int(item['dim']),
            greater_than=tuple(item.get('greater_than', [])), unanchored=bool(item.get('unanchored', False))
        )
        entries[(entry.group, entry.label)] = entry
    return entries


def _entry(group: str, label: str) -> FixtureEntry:
    '''Look up a fixture entry or raise LabelLookupError.'''
    try:
        return fixture_entries()[(group, label)]
    except KeyError:
        raise LabelLookupError(f'No orbit labeled «{label}» in {group}')


def exceptional_orbit(group: str, label: str) -> ExceptionalOrbit:
    '''The fixture orbit ``label`` of ``group`` with its dimension filled in.'''
    return ExceptionalOrbit(group, label, _entry(group, label).dim)


def exceptional_orbits(group: str) -> list[ExceptionalOrbit]:
    '''Every fixture orbit of ``group``, smallest first.'''
    entries = [entry for entry in fixture_entries().values() if entry.group == group]
    return [ExceptionalOrbit(entry.group, entry.label, entry.dim) for entry in sorted(entries, key=lambda e: (e.dim, e.label))]


def classical_orbit(tag: str, size: int, parts) -> ClassicalOrbit:
    '''The orbit of ``tag`` labeled by ``parts``, a Partition or any sequence of integers.'''
    return ClassicalOrbit(ClassicalFamily(tag, size), parts if isinstance(parts, Partition) else Partition(tuple(parts)))


@lru_cache(maxsize=None)
def closure_graph(group: str) -> nx.DiGraph:
    '''Hasse diagram of the fixture orbits of ``group``; every edge points from smaller to larger orbit.'''
    graph = nx.DiGraph()
    for entry in fixture_entries().values():
        if entry.group != group: continue
        graph.add_node(entry.label, dim=entry.dim)
        for lower in entry.greater_than:
            graph.add_edge(lower, entry.label)
    if graph.number_of_nodes() == 0:
        raise LabelLookupError(f'No orbits known for {group}')
    return graph


def orbits_above(base: ExceptionalOrbit) -> list[ExceptionalOrbit]:
    '''Fixture orbits strictly above ``base`` in the closure order, by dimension.'''
    graph = closure_graph(base.group)
    if base.label not in graph:
        raise LabelLookupError(f'No orbit labeled «{base.label}» in {base.group}')
    above = [exceptional_orbit(base.group, label) for label in nx.descendants(graph, base.label)]
    return sorted(above, key=lambda o: (o.dim, o.label))


def orbit_dim(o: OrbitLabel) -> int:
    '''Dimension of the orbit ``o``; always even.'''
    if isinstance(o, ClassicalOrbit):
        return nilpotent_dim(o.partition, o.family)
    if isinstance(o, ExceptionalOrbit):
        entry = _entry(o.group, o.label)
        if o.dim is not None and o.dim != entry.dim:
            raise DomainError(f'{o.label} in {o.group} has dimension {entry.dim}, not {o.dim}')
        return entry.dim
    raise DomainError(f'{o!r} is not an orbit label')


def half_dim(o: OrbitLabel) -> int:
    '''Dimension of a representation attached to ``o``.'''
    return orbit_dim(o) // 2


def strictly_greater(base: OrbitLabel, orbit: OrbitLabel) -> bool:
    '''Closure order within one group: dominance for partitions, the Hasse diagram otherwise.'''
    if isinstance(base, ClassicalOrbit) and isinstance(orbit, ClassicalOrbit):
        if base.family != orbit.family:
            raise DomainError(f'{base} and {orbit} live in different groups')
        return strictly_dominates(orbit.partition, base.partition)
    if isinstance(base, ExceptionalOrbit) and isinstance(orbit, ExceptionalOrbit):
        if base.group != orbit.group:
            raise DomainError(f'{base} and {orbit} live in different groups')
        graph = closure_graph(base.group)
        for o in (base, orbit):
            if o.label not in graph: raise LabelLookupError(f'No orbit labeled «{o.label}» in {o.group}')
        return base.label != orbit.label and nx.has_path(graph, base.label, orbit.label)
    raise DomainError(f'{base} and {orbit} are not comparable')


def contribution(base: OrbitLabel, orbit: OrbitLabel) -> int:
    '''One term of the dimension equation: ½(dim orbit − dim base), for ``orbit`` strictly above ``base``.'''
    if not strictly_greater(base, orbit):
        raise DomainError(f'{orbit} is not strictly greater than {base}')
    return half_dim(orbit) - half_dim(base)


def check_fixture() -> list[str]:
    '''Problems found in the exceptional orbit fixture; empty when it is consistent.'''
    problems = []
    entries = fixture_entries()
    for (group, label), entry in sorted(entries.items()):
        if entry.dim % 2:
            problems.append(f'{label} in {group} has odd dimension {entry.dim}')
        for lower in entry.greater_than:
            below = entries.get((group, lower))
            if below is None:
                problems.append(f'{label} in {group} sits above unknown label {lower}')
            elif below.dim >= entry.dim:
                problems.append(f'{label} in {group} sits above {lower} without a larger dimension')
    for group in sorted({group for group, _ in entries}):
        if not nx.is_directed_acyclic_graph(closure_graph(group)):
            problems.append(f'Closure relations of {group} contain a cycle')
    for (group, label), expected in ANCHORED_HALF_DIMS.items():
        entry = entries.get((group, label))
        if entry is None:
            problems.append(f'Anchored orbit {label} missing from {group}')
        elif entry.unanchored:
            problems.append(f'{label} in {group} is anchored but marked unanchored')
        elif entry.dim // 2 != expected:
            problems.append(f'{label} in {group} has half-dimension {entry.dim // 2}, expected {expected}')
    return problems
