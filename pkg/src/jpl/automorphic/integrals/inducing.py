# encoding: utf-8

'''🧮 Global Integrals: Eisenstein series and their inducing data.

An Eisenstein series induced from τ1 ⊗ τ2 on a Levi GL_a × GL_{n−a} of GL_n is attached to the sum of
the two orbits; on GSp or GSO with Levi GL_a × H' the GL orbit counts twice. This module does that
arithmetic, finds every inducing datum for a two-row target by brute force, checks the result against the
closed forms for the six targets that occur at m = 2, and labels m = 2 integrals as unipotent or not
according to whether an odd Eisenstein series can occur.
'''

from __future__ import annotations
from .const import (
    CUSPIDAL, DYNKIN_EDGES, E6, E7, GE7, GE7_STABILIZER_NODES, GL, GSO, GSP, STATUS_NONZERO, STATUS_NOT_UNIPOTENT,
    STATUS_UNKNOWN
)
from .errors import DomainError, InconsistentDescriptorError
from .orbits import ClassicalOrbit, OrbitLabel, exceptional_orbit, exceptional_orbits, half_dim
from .partitions import ClassicalFamily, Partition, add, double, is_valid, valid_partitions
from .roots import build_root_system, unipotent_radical_dim
from .solver import SolutionRow, Slot
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate, product
from typing import Iterable, Mapping, Sequence
import logging, networkx as nx

_logger = logging.getLogger(__name__)

CLASSICAL_TAGS = (GL, GSP, GSO)
E7_NODES = frozenset(range(1, 8))

# Largest i for the closed forms, keyed by family and half the gap between the two target rows
STATED_CASES = {
    (GL, 1): 2,
    (GL, 2): 4,
    (GSP, 1): 1,
    (GSP, 3): 3,
    (GSO, 1): 1,
    (GSO, 3): 3,
}

# Maximal parabolics of GE7 whose Levi drops one of α2, α5, α7
GE7_ODD_LEVIS = {
    'A6': E7_NODES - {2},
    'A4×A2': E7_NODES - {5},
    'E6': E7_NODES - {7},
}


def _family(group: str | ClassicalFamily, size: int) -> ClassicalFamily:
    '''Return ``group`` as a family taking partitions of ``size``.'''
    if isinstance(group, ClassicalFamily):
        if group.size != size:
            raise DomainError(f'{group} takes partitions of {group.size}, not {size}')
        return group
    return ClassicalFamily(group, size)


def _tag(group: str | ClassicalFamily) -> str:
    '''Return the classical tag of ``group``, refusing the exceptional ones.'''
    tag = group.tag if isinstance(group, ClassicalFamily) else group
    if tag not in CLASSICAL_TAGS:
        raise DomainError(f'Induction is only modeled for {", ".join(CLASSICAL_TAGS)}, not «{tag}»')
    return tag


def induce_with_diagnostics(group: str | ClassicalFamily, tau1: Partition, tau2: Partition) -> tuple[Partition, bool]:
    '''Orbit of the Eisenstein series from τ1 on GL and τ2 on the other Levi factor, and whether it is valid.

    No collapse is applied to the sum; an invalid result is reported, not corrected.
    '''
    tag = _tag(group)
    result = add(tau1, tau2) if tag == GL else add(double(tau1), tau2)
    family = _family(group, result.size)
    valid = is_valid(result, family)
    if not valid:
        _logger.warning('👮 Inducing %s and %s in %s gives %s, which labels no orbit', tau1, tau2, family, result)
    return result, valid


def induce(group: str | ClassicalFamily, tau1: Partition, tau2: Partition) -> Partition:
    '''Orbit of the Eisenstein series induced from τ1 ⊗ τ2; see ``induce_with_diagnostics``.'''
    return induce_with_diagnostics(group, tau1, tau2)[0]


@dataclass(frozen=True)
class InducingDatum:
    '''τ1 on GL_{n1} and τ2 on the second Levi factor, inducing to ``target``.

    For GL the Levi is GL_{n1} × GL_{n − n1}; for GSp_N and GSO_N it is GL_{n1} × H_{N − 2 n1}.
    '''
    family: ClassicalFamily
    target: Partition
    tau1: Partition
    tau2: Partition

    def __post_init__(self):
        '''Reject empty Levi blocks and pairs that do not induce the target.'''
        if self.tau1.size < 1 or (self.family.tag == GL and self.tau2.size < 1):
            raise DomainError(f'Levi blocks of {self.family} must be non-trivial: {self.tau1}, {self.tau2}')
        result = induce(self.family.tag, self.tau1, self.tau2)
        if result != self.target:
            raise DomainError(f'{self.tau1} and {self.tau2} induce {result}, not {self.target}')

    @property
    def n1(self) -> int:
        '''Size of the GL block.'''
        return self.tau1.size

    @property
    def n2(self) -> int:
        return self.tau2.size

    @property
    def blocks(self) -> tuple[int, int]:
        '''The Levi as (n1, n2).'''
        return (self.n1, self.n2)

    @property
    def a(self) -> int:
        '''Largest part of τ1.'''
        return self.tau1[0]

    @property
    def i(self) -> int:
        '''Index i of this datum in the closed forms.'''
        second = self.tau1[1] if len(self.tau1) > 1 else 0
        if self.family.tag == GL:
            return second - self.a + 2 * _half_gap(self.target)
        return self.a - second

    def to_json(self) -> dict:
        '''Return this datum as a JSON-ready dictionary.'''
        return {
            'group': str(self.family), 'target': self.target.to_json(), 'levi': list(self.blocks),
            'a': self.a, 'i': self.i, 'tau1': self.tau1.to_json(), 'tau2': self.tau2.to_json(),
        }

    def __str__(self) -> str:
        return f'{self.tau1} ⊗ {self.tau2} → {self.target}_{self.family.tag}'


def _half_gap(target: Partition) -> int:
    '''Half the gap between the two rows of ``target``.'''
    second = target[1] if len(target) > 1 else 0
    return (target[0] - second) // 2


def _check_target(family: ClassicalFamily, target: Partition):
    '''Accept only valid one- or two-row targets other than the base orbit.'''
    if len(target) == 0 or len(target) > 2:
        raise DomainError(f'Inducing data are classified for targets with one or two rows, not {target}')
    if len(target) == 2 and target[0] == target[1]:
        raise DomainError(f'{target} is the base orbit itself and is not attached to an Eisenstein series here')
    if not is_valid(target, family):
        raise DomainError(f'{target} is not a valid partition for {family}')


def classify_inducing_data(group: str | ClassicalFamily, target: Partition) -> list[InducingDatum]:
    '''Every inducing datum with τ1, τ2 of at most two rows that induces ``target``, found by brute force.

    Parts only add, so a summand with three rows would force a third row in the sum; two rows suffice.
    '''
    family = _family(group, target.size)
    _check_target(family, target)
    tag, data = family.tag, []
    largest = target.size - 1 if tag == GL else target.size // 2
    for n1 in range(1, largest + 1):
        n2 = target.size - n1 if tag == GL else target.size - 2 * n1
        if tag == GSP and n2 % 2: continue
        left = valid_partitions(ClassicalFamily(GL, n1), max_parts=2)
        right = valid_partitions(ClassicalFamily(tag, n2), max_parts=2)
        for tau1, tau2 in product(left, right):
            result = add(tau1, tau2) if tag == GL else add(double(tau1), tau2)
            if result == target:
                data.append(InducingDatum(family, target, tau1, tau2))
    data.sort(key=lambda d: (d.n1, d.tau1.parts, d.tau2.parts))
    _logger.debug('🔍 %d inducing data for %s in %s', len(data), target, family)
    return data


def stated_inducing_data(group: str | ClassicalFamily, target: Partition) -> list[InducingDatum]:
    '''Inducing data from the closed forms.

    GL_2p, target (p+j, p−j): τ1 = (a, a−2j+i), τ2 = (p−a+j, p−a+j−i), 0 ≤ i ≤ 2j.
    GSp_N or GSO_N with N/2 = c, target (c+j, c−j): τ1 = (a, a−i), τ2 = (c+j−2a, c−j−2a+2i), 0 ≤ i ≤ j.
    '''
    family = _family(group, target.size)
    _check_target(family, target)
    tag, j = family.tag, _half_gap(target)
    if (tag, j) not in STATED_CASES or target.size % 2:
        raise DomainError(f'No closed form for {target} in {family}')
    i_max, c, data = STATED_CASES[(tag, j)], target.size // 2, set()
    for a, i in product(range(1, target[0] + 1), range(i_max + 1)):
        if tag == GL:
            raw1, raw2 = (a, a - 2 * j + i), (c - a + j, c - a + j - i)
        else:
            raw1, raw2 = (a, a - i), (c + j - 2 * a, c - j - 2 * a + 2 * i)
        try:
            data.add(InducingDatum(family, target, Partition(raw1), Partition(raw2)))
        except DomainError:
            continue
    return sorted(data, key=lambda d: (d.n1, d.tau1.parts, d.tau2.parts))


def compare_with_stated(group: str | ClassicalFamily, target: Partition) -> tuple[set[InducingDatum], set[InducingDatum]]:
    '''Closed-form data the brute force misses, and brute-force data the closed forms miss.'''
    found = set(classify_inducing_data(group, target))
    stated = set(stated_inducing_data(group, target))
    missing, extra = stated - found, found - stated
    for datum in sorted(missing | extra, key=str):
        _logger.warning('👮 Closed form and brute force disagree on %s', datum)
    return missing, extra


def swap_blocks(datum: InducingDatum) -> InducingDatum:
    '''The datum on the opposite Levi GL_{n2} × GL_{n1}, inducing the same orbit.'''
    if datum.family.tag != GL:
        raise DomainError(f'Only GL Levi blocks can be swapped, not those of {datum.family}')
    return InducingDatum(datum.family, datum.target, datum.tau2, datum.tau1)


@dataclass(frozen=True)
class EisensteinDescriptor:
    '''How an Eisenstein series is induced.

    GL: the chain of GL block sizes. GSp and GSO: the GL blocks followed by the size of the classical block.
    GE7: the simple roots retained in the Levi.
    '''
    family: str
    blocks: tuple[int, ...] = ()
    retained: frozenset[int] | None = None

    def __post_init__(self):
        '''Check the chain is well formed, or that a GE7 Levi retains a proper subset of nodes.'''
        if self.family == GE7:
            if self.retained is None or not self.retained < E7_NODES:
                raise DomainError(f'A GE7 Levi must retain a proper subset of the simple roots, not {self.retained}')
            return
        _tag(self.family)
        gl_blocks = self.blocks if self.family == GL else self.blocks[:-1]
        if len(self.blocks) < 2 or any(b < 1 for b in gl_blocks) or self.blocks[-1] < 0:
            raise DomainError(f'Malformed Levi chain {self.blocks} for {self.family}')

    @property
    def gl_blocks(self) -> tuple[int, ...]:
        '''The GL blocks of the chain, without the trailing classical block.'''
        return self.blocks if self.family == GL else self.blocks[:-1]

    @property
    def size(self) -> int | None:
        '''Size of the ambient classical group; None for GE7.'''
        if self.family == GE7: return None
        if self.family == GL: return sum(self.blocks)
        return 2 * sum(self.gl_blocks) + self.blocks[-1]

    def to_json(self) -> dict:
        '''Return this descriptor as a JSON-ready dictionary.'''
        if self.family == GE7:
            return {'family': GE7, 'retained': sorted(self.retained), 'levi': levi_type(self.retained)}
        return {'family': self.family, 'blocks': list(self.blocks)}

    def __str__(self) -> str:
        if self.family == GE7: return f'GE7[{levi_type(self.retained)}]'
        return f'{self.family}[{"×".join(str(b) for b in self.blocks)}]'


def is_odd(e: EisensteinDescriptor) -> bool:
    '''Whether some induction stage has an odd GL block, or for GE7 the Levi misses one of α2, α5, α7.'''
    if e.family == GE7:
        return not GE7_STABILIZER_NODES <= e.retained
    return any(b % 2 for b in e.gl_blocks)


def levi_type(retained: Iterable[int]) -> str:
    '''Dynkin type of the E7 Levi on ``retained``, such as A4×A2.'''
    return '×'.join(f'{kind}{rank}' for kind, rank in _levi_components(retained)) or 'T'


def _levi_components(retained: Iterable[int]) -> list[tuple[str, int]]:
    '''Simple factors of the E7 Levi on ``retained`` as (kind, rank), largest first.'''
    graph = nx.Graph()
    nodes = set(retained)
    graph.add_nodes_from(nodes)
    graph.add_edges_from((a, b) for a, b in DYNKIN_EDGES[E7] if a in nodes and b in nodes)
    components = []
    for component in nx.connected_components(graph):
        sub = graph.subgraph(component)
        rank = sub.number_of_nodes()
        branch = [node for node in sub if sub.degree(node) == 3]
        if not branch:
            components.append(('A', rank))
            continue
        rest = sub.subgraph(set(sub) - {branch[0]})
        arms = sorted(len(nx.node_connected_component(rest, leaf)) for leaf in sub.neighbors(branch[0]))
        components.append(('D' if arms[:2] == [1, 1] else 'E', rank))
    components.sort(key=lambda c: (-c[1], c[0]))
    return components


def _factor_orbits(kind: str, rank: int) -> list[OrbitLabel]:
    '''Orbits of one simple factor of an E7 Levi: GL partitions for A, SO partitions for D, the fixture for E6.'''
    if kind == 'A':
        family = ClassicalFamily(GL, rank + 1)
    elif kind == 'D':
        family = ClassicalFamily(GSO, 2 * rank)
    elif rank == 6:
        return exceptional_orbits(E6)
    else:
        raise DomainError(f'E{rank} is not a proper Levi factor of E7')
    return [ClassicalOrbit(family, p) for p in valid_partitions(family)]


@lru_cache(maxsize=None)
def levi_tau_options(retained: frozenset[int], target_label: str) -> tuple[tuple[OrbitLabel, ...], ...]:
    '''Orbits on the factors of the GE7 Levi on ``retained`` whose dimensions induce ``target_label``.

    E6 factors only see the orbits in the packaged fixture.
    '''
    needed = half_dim(exceptional_orbit(E7, target_label)) - unipotent_radical_half(GE7, retained)
    if needed < 0: return ()
    factors = [_factor_orbits(kind, rank) for kind, rank in _levi_components(retained)]
    options = [combo for combo in product(*factors) if sum(half_dim(o) for o in combo) == needed]
    if all(isinstance(o, ClassicalOrbit) for combo in options for o in combo):
        options.sort(key=lambda combo: tuple(o.partition.parts for o in combo), reverse=True)
    return tuple(options)


def default_descriptors(slot: Slot) -> list[EisensteinDescriptor]:
    '''Every maximal parabolic that can induce the slot's orbit.'''
    if slot.config.family == GE7:
        maximal = [E7_NODES - {k} for k in sorted(E7_NODES)]
        return [EisensteinDescriptor(GE7, retained=r) for r in maximal if levi_tau_options(r, slot.orbit.label)]
    if not isinstance(slot.orbit, ClassicalOrbit): return []
    try:
        data = classify_inducing_data(slot.orbit.family, slot.orbit.partition)
    except DomainError:
        _logger.debug('🤷 No two-row inducing data for %s', slot.orbit)
        return []
    return list(dict.fromkeys(EisensteinDescriptor(slot.config.family, datum.blocks) for datum in data))


def _check_descriptor(slot: Slot, descriptor: EisensteinDescriptor):
    '''Raise InconsistentDescriptorError unless ``descriptor`` can induce the slot's orbit.'''
    if descriptor.family != slot.config.family:
        raise InconsistentDescriptorError(f'{descriptor} cannot induce a representation of {slot.config.group}')
    if descriptor.family == GE7:
        if not levi_tau_options(frozenset(descriptor.retained), slot.orbit.label):
            raise InconsistentDescriptorError(f'No orbit of {descriptor} induces {slot.orbit}')
        return
    family = slot.orbit.family
    if descriptor.size != family.size:
        raise InconsistentDescriptorError(f'{descriptor} has size {descriptor.size}, but {slot.config.group} needs {family.size}')
    sizes = {datum.n1 for datum in classify_inducing_data(family, slot.orbit.partition)}
    if not sizes.intersection(accumulate(descriptor.gl_blocks)):
        raise InconsistentDescriptorError(f'No inducing datum of {slot.orbit} passes through {descriptor}')


def label_row(row: SolutionRow, descriptors: Mapping[int, Sequence[EisensteinDescriptor]] | None = None) -> SolutionRow:
    '''Mark an m = 2 integral as unipotent when some Eisenstein slot can be an odd Eisenstein series.

    ``descriptors`` maps slot indexes to the inductions to consider; the Eisenstein slot defaults to every
    maximal parabolic compatible with its orbit. Rows for other m are marked unknown.
    '''
    if row.m != 2:
        return row.with_status(STATUS_UNKNOWN)
    options = {len(row.slots) - 1: None}
    options.update(descriptors or {})
    odd = False
    for index, chosen in sorted(options.items()):
        if not 0 <= index < len(row.slots):
            raise InconsistentDescriptorError(f'Row has no slot {index}')
        slot = row.slots[index]
        if slot.role == CUSPIDAL:
            raise InconsistentDescriptorError(f'Slot {index} is cuspidal and cannot be an Eisenstein series')
        chosen = default_descriptors(slot) if chosen is None else chosen
        for descriptor in chosen:
            _check_descriptor(slot, descriptor)
            odd = odd or is_odd(descriptor)
    return row.with_status(STATUS_NONZERO if odd else STATUS_NOT_UNIPOTENT)


def unipotent_radical_half(group: str, levi: Iterable[int]) -> int:
    '''dim U(P) = ½(dim H − dim M) for the parabolic with the given Levi.

    ``levi`` is a block chain for GL, GSp and GSO, and the retained simple roots for GE7.
    '''
    if group == GE7:
        return unipotent_radical_dim(build_root_system(E7), frozenset(levi))
    tag, blocks = _tag(group), tuple(levi)
    if tag == GL:
        n = sum(blocks)
        return (n * n - sum(b * b for b in blocks)) // 2
    gl, last = blocks[:-1], blocks[-1]
    ambient = ClassicalFamily(tag, 2 * sum(gl) + last).group_dim()
    levi_dim = sum(b * b for b in gl) + ClassicalFamily(tag, last).group_dim()
    return (ambient - levi_dim) // 2


def lemex_check(group: str, levi, tau_dims: Iterable[int], expected: OrbitLabel) -> bool:
    '''Whether ½ dim of the Eisenstein orbit equals dim τ plus dim U(P).'''
    return half_dim(expected) == sum(tau_dims) + unipotent_radical_half(group, levi)


def datum_lemex(datum: InducingDatum) -> bool:
    '''The dimension identity for one classical inducing datum.'''
    tag = datum.family.tag
    tau1 = half_dim(ClassicalOrbit(ClassicalFamily(GL, datum.n1), datum.tau1))
    tau2 = half_dim(ClassicalOrbit(ClassicalFamily(tag, datum.n2), datum.tau2)) if datum.n2 else 0
    return lemex_check(tag, datum.blocks, (tau1, tau2), ClassicalOrbit(datum.family, datum.target))


def ge7_tau_options(levi: str, target_label: str) -> list[tuple[OrbitLabel, ...]]:
    '''Orbits of the Levi factors of GE7's odd maximal parabolics that can induce ``target_label``.'''
    try:
        retained = GE7_ODD_LEVIS[levi]
    except KeyError:
        raise DomainError(f'«{levi}» is not one of {", ".join(GE7_ODD_LEVIS)}')
    return list(levi_tau_options(retained, target_label))
