# encoding: utf-8

'''🧮 Global Integrals: partitions.

Unipotent orbits of GL_n, Sp_2N and SO_M are labeled by partitions. This module holds the exact
arithmetic on those labels: normalization, transpose, dominance, componentwise addition, the
symplectic and orthogonal validity rules, and the orbit-dimension formula.

Very even orthogonal partitions (every part even) label two orbits with the same dimension; they are
treated as one label here since nothing downstream distinguishes them.
'''

from __future__ import annotations
from .const import GL, GSP, GSO
from .errors import DomainError
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate, zip_longest
from sympy.utilities.iterables import partitions as _integer_partitions
from typing import Iterable
import logging, operator, re

_logger = logging.getLogger(__name__)
_separators = re.compile(r'[\s,]+')


@dataclass(frozen=True, order=True)
class Partition:
    '''A weakly decreasing sequence of positive integers; zero parts are dropped on construction.'''

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        '''Normalize the parts to a sorted tuple of positive integers.'''
        try:
            parts = tuple(operator.index(part) for part in self.parts)
        except TypeError:
            raise DomainError(f'Partition parts must be integers, not {self.parts!r}')
        if any(part < 0 for part in parts):
            raise DomainError(f'Partition parts must be non-negative: {parts}')
        parts = tuple(part for part in parts if part > 0)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f'Partition parts must be weakly decreasing: {parts}')
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        '''Parse text like ``5,3``, ``(5,3)`` or ``5 3`` into a partition.'''
        text = text.strip().strip('()[]').strip()
        if not text: return cls()
        try:
            return make_partition(int(token) for token in _separators.split(text) if token)
        except ValueError:
            raise DomainError(f'Cannot parse «{text}» as a partition')

    @property
    def size(self) -> int:
        '''Sum of the parts.'''
        return sum(self.parts)

    def to_json(self) -> list[int]:
        '''Return the parts as a JSON-ready list.'''
        return list(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __str__(self) -> str:
        return '(' + ','.join(str(part) for part in self.parts) + ')'


@dataclass(frozen=True)
class ClassicalFamily:
    '''A classical group family (GL, GSp or GSO) together with the size of its partitions.

    GL_n takes partitions of n, GSp_2N partitions of 2N, and GSO_M partitions of M. Similitude groups
    share the nilpotent cone of their derived groups, so the semisimple formulas apply.
    '''

    tag: str
    size: int

    def __post_init__(self):
        '''Reject unknown tags, negative sizes and odd symplectic sizes.'''
        if self.tag not in (GL, GSP, GSO):
            raise DomainError(f'Unknown classical family tag «{self.tag}»')
        if self.size < 0:
            raise DomainError(f'Family size must be non-negative, not {self.size}')
        if self.tag == GSP and self.size % 2:
            raise DomainError(f'Symplectic groups need an even size, not {self.size}')

    def group_dim(self) -> int:
        '''Dimension of the underlying GL_n, Sp_2N or SO_M.'''
        n = self.size
        if self.tag == GL: return n * n
        if self.tag == GSP: return (n // 2) * (n + 1)
        return n * (n - 1) // 2

    def __str__(self) -> str:
        return f'{self.tag}_{self.size}'


def make_partition(raw: Iterable[int]) -> Partition:
    '''Sort ``raw`` into a partition, dropping zeros; negative entries are a domain error.'''
    values = [operator.index(value) for value in raw]
    if any(value < 0 for value in values):
        raise DomainError(f'Negative part in {values}')
    return Partition(tuple(sorted((value for value in values if value), reverse=True)))


def transpose(p: Partition) -> Partition:
    '''Conjugate partition: part i counts the parts of ``p`` that are at least i.'''
    if not p.parts: return Partition()
    return Partition(tuple(sum(1 for part in p.parts if part >= i) for i in range(1, p.parts[0] + 1)))


def _check_same_size(a: Partition, b: Partition):
    '''Raise DomainError unless ``a`` and ``b`` partition the same number.'''
    if a.size != b.size:
        raise DomainError(f'Partitions {a} and {b} have different sizes {a.size} and {b.size}')


def dominates(a: Partition, b: Partition) -> bool:
    '''True when every prefix sum of ``a`` is at least the matching prefix sum of ``b``.'''
    _check_same_size(a, b)
    pairs = zip_longest(accumulate(a.parts), accumulate(b.parts), fillvalue=a.size)
    return all(x >= y for x, y in pairs)


def strictly_dominates(a: Partition, b: Partition) -> bool:
    '''True when ``a`` dominates ``b`` and differs from it.'''
    return a != b and dominates(a, b)


def add(b1: Partition, b2: Partition) -> Partition:
    '''Componentwise sum, padding the shorter partition with zeros.'''
    return make_partition(x + y for x, y in zip_longest(b1.parts, b2.parts, fillvalue=0))


def double(b: Partition) -> Partition:
    '''Every part multiplied by two.'''
    return Partition(tuple(2 * part for part in b.parts))


def _check_family_size(p: Partition, family: ClassicalFamily):
    '''Raise DomainError unless ``p`` partitions the family's size.'''
    if p.size != family.size:
        raise DomainError(f'{p} is a partition of {p.size}, but {family} needs partitions of {family.size}')


def is_valid(p: Partition, family: ClassicalFamily) -> bool:
    '''Whether ``p`` labels a unipotent orbit of ``family``.

    Symplectic: odd parts occur with even multiplicity. Orthogonal: even parts occur with even multiplicity.
    '''
    _check_family_size(p, family)
    if family.tag == GL: return True
    parity = 1 if family.tag == GSP else 0
    return all(count % 2 == 0 for part, count in Counter(p.parts).items() if part % 2 == parity)


def nilpotent_dim(p: Partition, family: ClassicalFamily) -> int:
    '''Dimension of the orbit labeled ``p`` in ``family``, by the column-length formula.'''
    _check_family_size(p, family)
    columns = transpose(p).parts
    squares = sum(s * s for s in columns)
    odd = sum(1 for part in p.parts if part % 2)
    n = family.size
    if family.tag == GL:
        return n * n - squares
    if family.tag == GSP:
        return (n * n + n - squares - odd) // 2
    return (n * n - n - squares + odd) // 2


def valid_partitions(family: ClassicalFamily, max_parts: int | None = None) -> list[Partition]:
    '''All partitions valid for ``family``, optionally with at most ``max_parts`` parts.'''
    result = []
    for multiplicities in _integer_partitions(family.size, m=max_parts):
        p = make_partition(part for part, count in multiplicities.items() for _ in range(count))
        if is_valid(p, family): result.append(p)
    return result


@lru_cache(maxsize=None)
def _dominating(base: Partition, family: ClassicalFamily) -> tuple[Partition, ...]:
    '''Valid partitions of ``family`` strictly dominating ``base``, smallest orbit first.'''
    if not base.parts: return ()
    # Dominating partitions never have more parts than the base
    candidates = [p for p in valid_partitions(family, max_parts=len(base)) if strictly_dominates(p, base)]
    candidates.sort(key=lambda p: (nilpotent_dim(p, family), p.parts))
    _logger.debug('🔍 %d partitions of %s strictly dominate %s', len(candidates), family, base)
    return tuple(candidates)


def partitions_dominating(base: Partition, family: ClassicalFamily) -> list[Partition]:
    '''Valid partitions strictly dominating ``base``, by dimension then lexicographically.'''
    if not is_valid(base, family):
        raise DomainError(f'{base} is not a valid partition for {family}')
    return list(_dominating(base, family))
