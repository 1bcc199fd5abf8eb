# encoding: utf-8

'''🧮 Global Integrals: root systems.

Integer-exact E6 and E7 root systems in Bourbaki numbering. Roots are tuples of coefficients over the
simple roots, so ``(1, 2, 2, 3, 2, 1)`` is the highest root of E6 and prints as ``122321``. Weyl words
act rightmost letter first.
'''

from __future__ import annotations
from .const import DYNKIN_EDGES, DIGIT_NODES, E6, E7, GE7_STABILIZER_NODES
from .errors import DomainError
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence
import logging, re, numpy as np, sympy

_logger = logging.getLogger(__name__)

Root = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class RootSystem:
    '''Positive roots of a simply-laced root system with its Cartan matrix.'''
    type: str
    cartan: np.ndarray
    positive_roots: tuple[Root, ...]
    _positive: frozenset = field(init=False, repr=False)

    def __post_init__(self):
        '''Index the positive roots for membership tests.'''
        object.__setattr__(self, '_positive', frozenset(self.positive_roots))

    @property
    def rank(self) -> int:
        '''Number of simple roots.'''
        return self.cartan.shape[0]

    def simple_root(self, i: int) -> Root:
        '''The simple root α_i as a coefficient vector.'''
        self._check_index(i)
        return tuple(int(j == i - 1) for j in range(self.rank))

    def is_positive_root(self, v: Sequence[int]) -> bool:
        '''True if ``v`` is a positive root.'''
        return tuple(v) in self._positive

    def is_root(self, v: Sequence[int]) -> bool:
        '''True if ``v`` or its negative is a positive root.'''
        v = tuple(v)
        return v in self._positive or tuple(-c for c in v) in self._positive

    def _check_index(self, i: int):
        '''Raise DomainError unless ``i`` names a simple root.'''
        if not 1 <= i <= self.rank:
            raise DomainError(f'{self.type} has no simple root {i}')


@dataclass(frozen=True)
class WeylWord:
    '''A product of simple reflections w_{i1} w_{i2} … written left to right, applied right to left.'''
    word: tuple[int, ...] = ()

    @classmethod
    def parse(cls, text: str) -> WeylWord:
        '''Parse ``w6w5w4`` or ``6 5 4`` or ``6,5,4``.'''
        return cls(tuple(int(token) for token in re.findall(r'\d+', text)))

    def __str__(self) -> str:
        return ''.join(f'w{i}' for i in self.word) or '1'


@dataclass(frozen=True)
class CharacterSupport:
    '''Roots (with unit coefficients) on which an additive character of a unipotent group is supported.'''
    entries: tuple[tuple[Root, int], ...]

    @classmethod
    def from_digits(cls, group: str, labels: Iterable[str], coefficient: int = 1) -> CharacterSupport:
        '''Build a support from digit labels such as ``0101000``, all with the same coefficient.'''
        return cls(tuple((root_from_digits(group, label), coefficient) for label in labels))

    @property
    def roots(self) -> tuple[Root, ...]:
        '''The support roots without their coefficients.'''
        return tuple(root for root, _ in self.entries)


def _reflect(cartan: np.ndarray, index: int, root: Root) -> Root:
    '''Apply the simple reflection s_index to ``root`` using the Cartan matrix.'''
    vector = np.array(root, dtype=int)
    pairing = int(vector @ cartan[:, index])
    vector[index] -= pairing
    return tuple(int(c) for c in vector)


@lru_cache(maxsize=None)
def build_root_system(type: str) -> RootSystem:
    '''Generate the positive roots of E6 or E7 by closing the simple roots under simple reflections.'''
    if type not in DYNKIN_EDGES:
        raise DomainError(f'Unsupported root system «{type}»')
    edges = DYNKIN_EDGES[type]
    rank = max(max(edge) for edge in edges)
    cartan = 2 * np.eye(rank, dtype=int)
    for i, j in edges:
        cartan[i - 1, j - 1] = cartan[j - 1, i - 1] = -1

    simple = [tuple(int(j == i) for j in range(rank)) for i in range(rank)]
    found, frontier = set(simple), list(simple)
    while frontier:
        fresh = []
        for root in frontier:
            for i in range(rank):
                image = _reflect(cartan, i, root)
                if min(image) >= 0 and image not in found:
                    found.add(image)
                    fresh.append(image)
        frontier = fresh

    ordered = tuple(sorted(found, key=lambda r: (sum(r), r)))
    _logger.debug('🧮 Built %s with %d positive roots', type, len(ordered))
    cartan.setflags(write=False)
    return RootSystem(type, cartan, ordered)


def reflect(rs: RootSystem, i: int, root: Sequence[int]) -> Root:
    '''Image of ``root`` under the simple reflection w_i.'''
    rs._check_index(i)
    return _reflect(rs.cartan, i - 1, tuple(root))


def apply_weyl_word(rs: RootSystem, w: WeylWord, root: Sequence[int]) -> Root:
    '''Image of ``root`` under ``w``, applying the rightmost reflection first.'''
    root = tuple(root)
    if len(root) != rs.rank or not rs.is_root(root):
        raise DomainError(f'{root} is not a root of {rs.type}')
    for i in w.word:
        rs._check_index(i)
    for i in reversed(w.word):
        root = _reflect(rs.cartan, i - 1, root)
    return root


def height(root: Sequence[int]) -> int:
    '''Sum of the simple-root coefficients.'''
    return sum(root)


def highest_root(rs: RootSystem) -> Root:
    '''The positive root of greatest height.'''
    return max(rs.positive_roots, key=lambda r: (height(r), r))


def root_from_digits(group: str, text: str) -> Root:
    '''Read a digit string such as ``0101000``; position k holds the coefficient of ``DIGIT_NODES[group][k]``.'''
    nodes = DIGIT_NODES.get(group)
    if nodes is None:
        raise DomainError(f'No digit convention for «{group}»')
    text = text.strip().strip('()')
    if len(text) != len(nodes) or not text.isdigit():
        raise DomainError(f'«{text}» is not a {len(nodes)}-digit root label for {group}')
    vector = [0] * len(nodes)
    for digit, node in zip(text, nodes):
        vector[node - 1] = int(digit)
    return tuple(vector)


def digits(group: str, root: Sequence[int]) -> str:
    '''Write ``root`` as a digit string, the inverse of ``root_from_digits``.'''
    nodes = DIGIT_NODES[group]
    if any(c < 0 for c in root):
        return '-' + digits(group, tuple(-c for c in root))
    return ''.join(str(root[node - 1]) for node in nodes)


def levi_roots(rs: RootSystem, generators: Iterable[int | Sequence[int]]) -> frozenset[Root]:
    '''Positive roots of the Levi subsystem spanned by ``generators``.

    Generators are simple-root indices or root vectors. Simple-root subsets are handled by support;
    anything else by an exact rank test over the rationals.
    '''
    generators = list(generators)
    if all(isinstance(g, (int, np.integer)) for g in generators):
        nodes = {int(g) for g in generators}
        for node in nodes: rs._check_index(node)
        return frozenset(r for r in rs.positive_roots if all(c == 0 or i + 1 in nodes for i, c in enumerate(r)))

    vectors = []
    for g in generators:
        vector = rs.simple_root(int(g)) if isinstance(g, (int, np.integer)) else tuple(g)
        if not rs.is_root(vector):
            raise DomainError(f'Levi generator {vector} is not a root of {rs.type}')
        vectors.append(vector)
    span = sympy.Matrix(vectors)
    base_rank = span.rank()
    return frozenset(r for r in rs.positive_roots if sympy.Matrix.vstack(span, sympy.Matrix([r])).rank() == base_rank)


def unipotent_radical_dim(rs: RootSystem, levi: Iterable[int | Sequence[int]]) -> int:
    '''Number of positive roots outside the Levi subsystem generated by ``levi``.'''
    return len(rs.positive_roots) - len(levi_roots(rs, levi))


def verify_character_support(rs: RootSystem, support: CharacterSupport) -> bool:
    '''True iff every support vector is a positive root of ``rs``.'''
    return all(len(root) == rs.rank and rs.is_positive_root(root) for root in support.roots)


# Fixture identities reported by ``verify_root_fixtures``

D5_WORD = WeylWord((6, 5, 4, 3, 2, 4, 5, 1, 3))
D5A1_WORD = WeylWord((6, 5, 4, 3, 2, 4, 5, 1))

WEYL_IMAGES = (
    # (group, word, source, image, strict)
    (E6, D5_WORD, '100000', '010000', True),
    (E6, D5_WORD, '001100', '000100', True),
    (E6, D5_WORD, '000110', '100000', True),
    (E6, D5_WORD, '000011', '000010', True),
    (E6, D5_WORD, '010000', '001000', True),
    (E6, D5A1_WORD, '010000', '001000', False),
    (E6, D5A1_WORD, '010100', '001100', False),
    (E6, D5A1_WORD, '101100', '010100', False),
    (E6, D5A1_WORD, '000011', '000010', False),
    (E6, D5A1_WORD, '001110', '100000', False),
)

RADICAL_DIMS = (
    # (group, Levi simple roots, expected dimension, what it is)
    (E7, tuple(sorted(GE7_STABILIZER_NODES)), 60, 'E6 coefficient of GE7'),
    (E6, (4,), 35, 'T·SL2 at α4 in E6'),
    (E6, (1, 2, 3, 4, 5, 6), 0, 'E6 itself'),
    (E6, (1, 2, 3, 4, 5), 16, 'abelian radical of the Spin10 parabolic'),
    (E7, (1, 3, 4, 5, 6, 7), 42, 'A6 maximal parabolic of E7'),
    (E7, (1, 2, 3, 4, 6, 7), 50, 'A4×A2 maximal parabolic of E7'),
    (E7, (1, 2, 3, 4, 5, 6), 27, 'E6 maximal parabolic of E7'),
)

SUPPORTS = (
    # (group, name, digit labels, expected)
    (E7, 'E6 coefficient of GE7', ('1000000', '0010000', '0101000', '0001100', '0000110', '0000011'), True),
    (E6, 'D5 coefficient', ('100000', '001100', '000110', '000011', '010000'), True),
    (E6, 'D5(a1) coefficient', ('010000', '101100', '000011', '000111', '001110'), True),
    (E6, 'positive conjugated roots', ('111211', '011221', '112211', '111221', '112221', '112321', '122321'), True),
    (E6, 'negative conjugated roots', ('101111', '011111', '001111', '010111', '000111', '000011', '000001'), True),
    (E6, 'non-root', ('200000',), False),
)

# Roots of U' removed to reach the D5(a1) unipotent group
D5A1_OMITTED = ('001100', '000010', '000110')

# Coset representatives of U/[U, U] outside the {α3, α5} Levi
ABELIANIZATION_REPRESENTATIVES = (
    '100000', '101000', '000001', '000011', '000100', '001100', '000110', '001110', '010000'
)

# Roots of the Spin10 radical left out of the conjugated group
SPIN10_RADICAL_OMITTED = ('000001', '000011', '000111', '010111')


@dataclass(frozen=True)
class RootCheck:
    '''The outcome of one root-system identity.'''
    name: str
    passed: bool
    detail: str
    strict: bool = True


def _weyl_checks() -> list[RootCheck]:
    '''Images of roots under the packaged Weyl words.'''
    checks = []
    for group, word, source, expected, strict in WEYL_IMAGES:
        rs = build_root_system(group)
        image = digits(group, apply_weyl_word(rs, word, root_from_digits(group, source)))
        checks.append(RootCheck(
            f'{word} ({source}) = ({expected})', image == expected, f'computed ({image})', strict
        ))
    return checks


def _radical_checks() -> list[RootCheck]:
    '''Unipotent radical dimensions, and the D5(a1) and Spin10 radicals after omitting roots.'''
    checks = []
    for group, levi, expected, what in RADICAL_DIMS:
        computed = unipotent_radical_dim(build_root_system(group), levi)
        checks.append(RootCheck(f'dim U = {expected} for {what}', computed == expected, f'computed {computed}'))

    e6 = build_root_system(E6)
    radical = set(e6.positive_roots) - levi_roots(e6, (4,))
    omitted = [root_from_digits(E6, label) for label in D5A1_OMITTED]
    inside = all(root in radical for root in omitted)
    remaining = len(radical) - len(omitted)
    checks.append(RootCheck('dim U = 32 for D5(a1) in E6', inside and remaining == 32, f'computed {remaining}'))

    kept = set(radical) - set(omitted)
    support = [root_from_digits(E6, label) for label in SUPPORTS[2][2]]
    checks.append(RootCheck(
        'D5(a1) support inside U', all(root in kept for root in support), 'five roots checked'
    ))

    spin10 = set(e6.positive_roots) - levi_roots(e6, (1, 2, 3, 4, 5))
    left_out = [root_from_digits(E6, label) for label in SPIN10_RADICAL_OMITTED]
    conjugated = len(spin10) - len(left_out) if all(root in spin10 for root in left_out) else -1
    checks.append(RootCheck('dim V = 12 inside the Spin10 radical', conjugated == 12, f'computed {conjugated}'))
    return checks


def _support_checks() -> list[RootCheck]:
    checks = []
    for group, name, labels, expected in SUPPORTS:
        rs = build_root_system(group)
        vectors = []
        for label in labels:
            try:
                vectors.append(root_from_digits(group, label))
            except DomainError:
                vectors.append(tuple())
        verdict = verify_character_support(rs, CharacterSupport(tuple((v, 1) for v in vectors)))
        checks.append(RootCheck(f'{name} support', verdict == expected, f'all roots: {verdict}'))

    e7 = build_root_system(E7)
    levi = levi_roots(e7, GE7_STABILIZER_NODES)
    support = [root_from_digits(E7, label) for label in SUPPORTS[0][2]]
    checks.append(RootCheck(
        'E6 coefficient support inside U(O)', not any(root in levi for root in support), 'six roots checked'
    ))

    e6 = build_root_system(E6)
    levi = levi_roots(e6, (3, 5))
    representatives = [root_from_digits(E6, label) for label in ABELIANIZATION_REPRESENTATIVES]
    outside = all(e6.is_positive_root(root) and root not in levi for root in representatives)
    checks.append(RootCheck('U/[U,U] representatives avoid the {α3, α5} Levi', outside, 'nine roots checked'))
    return checks


def verify_root_fixtures() -> list[RootCheck]:
    '''Evaluate every root-system identity; non-strict failures are recorded discrepancies.'''
    checks = []
    for group, expected in ((E6, 36), (E7, 63)):
        count = len(build_root_system(group).positive_roots)
        checks.append(RootCheck(f'{group} has {expected} positive roots', count == expected, f'computed {count}'))
    for group, expected in ((E6, '122321'), (E7, '2234321')):
        top = digits(group, highest_root(build_root_system(group)))
        checks.append(RootCheck(f'{group} highest root ({expected})', top == expected, f'computed ({top})'))
    checks.extend(_weyl_checks())
    checks.extend(_radical_checks())
    checks.extend(_support_checks())
    for check in checks:
        if not check.passed:
            _logger.warning('👮 %s: %s', 'Failed' if check.strict else 'Discrepancy', check.name)
    return checks
