# encoding: utf-8

'''🧮 Global Integrals: admissible Weyl elements.

Unfolding a global integral of GL_2p against an Eisenstein series induced from the parabolic P with Levi
GL_r × GL_{2p−r} runs over the double cosets P\\GL_2p/V, where V = U_{p,2} is the block upper unipotent
group with 2×2 blocks and ψ_V(v) = ψ(tr(X_1 + ⋯ + X_{p−1})). A representative γ is admissible when ψ_V
is trivial on V ∩ γ⁻¹U(P)γ; only admissible ones survive.

Permutations are in one-line notation: row i of the matrix has its 1 in column σ(i), counting from 1.
For a permutation matrix w, w e_{a,b} w⁻¹ = e_{σ⁻¹(a),σ⁻¹(b)}, so V ∩ w⁻¹U(P)w is the coordinate subgroup
on the (a, b) with σ⁻¹(a) ≤ r < σ⁻¹(b), and admissibility is a check on the support of ψ_V.
'''

from __future__ import annotations
from .const import ORACLE_MAX_P, ORACLE_PRIME, PROCESS_TIMEOUT, WEYL_MAX_P
from .errors import DomainError
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from itertools import permutations, product
from sympy.combinatorics import Permutation
from typing import Iterable
import logging, numpy as np, re

_logger = logging.getLogger(__name__)
_separators = re.compile(r'[\s,]+')


@dataclass(frozen=True, order=True)
class PermutationMatrix:
    '''A permutation of 1..n; ``images[i − 1]`` is σ(i).'''
    images: tuple[int, ...]

    def __post_init__(self):
        '''Normalize the images to ints and check they permute 1..n.'''
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DomainError(f'{list(images)} is not a permutation of 1..{len(images)}')
        object.__setattr__(self, 'images', images)

    @classmethod
    def parse(cls, text: str) -> PermutationMatrix:
        '''Parse ``[1,3,4,2]``, ``1 3 4 2`` or ``1,3,4,2``.'''
        text = text.strip().strip('[]()').strip()
        try:
            return cls(tuple(int(token) for token in _separators.split(text) if token))
        except ValueError:
            raise DomainError(f'Cannot parse «{text}» as a permutation')

    @property
    def n(self) -> int:
        '''Size of the permutation.'''
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> PermutationMatrix:
        '''The inverse permutation.'''
        inverse = [0] * self.n
        for row, column in enumerate(self.images, start=1):
            inverse[column - 1] = row
        return PermutationMatrix(tuple(inverse))

    def matrix(self) -> np.ndarray:
        '''Permutation matrix with a one at (i, σ(i)).'''
        m = np.zeros((self.n, self.n), dtype=np.int64)
        m[np.arange(self.n), np.array(self.images) - 1] = 1
        return m

    def to_json(self) -> list[int]:
        return list(self.images)

    def __str__(self) -> str:
        return '[' + ','.join(str(i) for i in self.images) + ']'


@dataclass(frozen=True)
class Gamma:
    '''A double coset representative w·z(r_1, …, r_p) with z = I + r_1 e_{1,2} + r_2 e_{3,4} + ⋯.'''
    w: PermutationMatrix
    r: tuple[int, ...] | None = None

    def __post_init__(self):
        '''Require an even size and one parameter per 2×2 block.'''
        if self.w.n % 2:
            raise DomainError(f'Representatives live in GL_2p, not GL_{self.w.n}')
        if self.r is not None and len(self.r) != self.w.n // 2:
            raise DomainError(f'z needs {self.w.n // 2} parameters, not {len(self.r)}')

    def z_matrix(self) -> np.ndarray:
        '''The unipotent matrix z with r_j at (2j − 1, 2j).'''
        z = np.eye(self.w.n, dtype=np.int64)
        for j, value in enumerate(self.r or (), start=1):
            z[2 * j - 2, 2 * j - 1] = value
        return z


@dataclass(frozen=True)
class AdmissibilityContext:
    '''GL_2p with P of Levi GL_r × GL_{2p−r}, p ≤ r < 2p, and V = U_{p,2}.'''
    p: int
    r: int

    def __post_init__(self):
        '''Reject pairs outside 1 ≤ p ≤ r < 2p.'''
        if self.p < 1 or not self.p <= self.r < 2 * self.p:
            raise DomainError(f'Need 1 ≤ p ≤ r < 2p, not p={self.p}, r={self.r}')

    @property
    def n(self) -> int:
        return 2 * self.p

    @property
    def v_coordinates(self) -> tuple[tuple[int, int], ...]:
        '''Entries (a, b) of V, those above the 2×2 block diagonal.'''
        block = lambda i: (i + 1) // 2
        return tuple((a, b) for a in range(1, self.n + 1) for b in range(a + 1, self.n + 1) if block(a) < block(b))

    @property
    def psi_support(self) -> tuple[tuple[int, int], ...]:
        '''Diagonal entries of each X_j, the (j, j+1) block of V.'''
        return tuple(pair for j in range(1, self.p) for pair in ((2 * j - 1, 2 * j + 1), (2 * j, 2 * j + 2)))

    def in_radical(self, row: int, column: int) -> bool:
        '''Whether (row, column) is an entry of U(P).'''
        return row <= self.r < column


def psi_coefficients(ctx: AdmissibilityContext, r: Iterable[int] | None = None) -> dict[tuple[int, int], int]:
    '''The functional v ↦ ψ_V(z⁻¹vz) on V's coordinates.

    Conjugating by z(r_1, …, r_p) turns tr X_j into tr X_j + (r_{j+1} − r_j)·v_{2j,2j+1}.
    '''
    coefficients = {pair: 1 for pair in ctx.psi_support}
    values = tuple(r) if r is not None else ()
    if values and len(values) != ctx.p:
        raise DomainError(f'z needs {ctx.p} parameters, not {len(values)}')
    for j in range(1, len(values)):
        shift = values[j] - values[j - 1]
        if shift: coefficients[(2 * j, 2 * j + 1)] = shift
    return coefficients


def is_admissible(ctx: AdmissibilityContext, gamma: Gamma | PermutationMatrix) -> bool:
    '''Whether ψ_V is trivial on V ∩ γ⁻¹U(P)γ.'''
    gamma = gamma if isinstance(gamma, Gamma) else Gamma(gamma)
    if gamma.w.n != ctx.n:
        raise DomainError(f'{gamma.w} is not in S_{ctx.n}')
    inverse = gamma.w.inverse()
    for (a, b), c in psi_coefficients(ctx, gamma.r).items():
        if c and ctx.in_radical(inverse(a), inverse(b)):
            return False
    return True


def canonicalize(ctx: AdmissibilityContext, w: PermutationMatrix) -> PermutationMatrix:
    '''Shortest element of the coset (W_r × W_{2p−r})·w: sort σ within rows 1..r and rows r+1..2p.

    V is unipotent, so there is no Weyl group to reduce by on the right.
    '''
    top, bottom = w.images[:ctx.r], w.images[ctx.r:]
    return PermutationMatrix(tuple(sorted(top)) + tuple(sorted(bottom)))


def bruhat_length(w: PermutationMatrix) -> int:
    '''Number of inversions of ``w``.'''
    return Permutation([i - 1 for i in w.images]).inversions()


def _scan(p: int, r: int, first: int) -> list[PermutationMatrix]:
    '''Admissible canonical representatives with σ(1) = ``first``.'''
    ctx, found = AdmissibilityContext(p, r), []
    rest = [i for i in range(1, 2 * p + 1) if i != first]
    for tail in permutations(rest):
        w = PermutationMatrix((first,) + tail)
        if canonicalize(ctx, w) == w and is_admissible(ctx, w):
            found.append(w)
    return found


def _init_worker(loglevel: int):
    '''Configure logging in a worker process to match the parent.'''
    logging.basicConfig(level=loglevel, format='%(levelname)s %(message)s')


def admissible_set(ctx: AdmissibilityContext, concurrency: int = 1) -> list[PermutationMatrix]:
    '''Every admissible double coset, by its shortest representative, found by trying all of S_2p.'''
    if ctx.p > WEYL_MAX_P:
        raise DomainError(f'The exhaustive scan stops at p={WEYL_MAX_P}, not {ctx.p}')
    firsts = range(1, ctx.n + 1)
    if concurrency > 1:
        found = []
        with ProcessPoolExecutor(
            max_workers=concurrency, initializer=_init_worker, initargs=(logging.getLogger().getEffectiveLevel(),)
        ) as executor:
            futures = [executor.submit(_scan, ctx.p, ctx.r, first) for first in firsts]
            for future in as_completed(futures, timeout=PROCESS_TIMEOUT):
                found.extend(future.result())
    else:
        found = [w for first in firsts for w in _scan(ctx.p, ctx.r, first)]
    found.sort(key=lambda w: (bruhat_length(w), w.images))
    _logger.debug('🔍 %d admissible cosets for p=%d, r=%d', len(found), ctx.p, ctx.r)
    return found


def build_wq(p: int, r: int, q: int) -> PermutationMatrix:
    '''The representative w_q, 0 ≤ q ≤ 2p − r.

    With s = 2p − r − q: rows 1..s go to columns q+1, q+3, …; the next 2(r−p)+q rows fill the columns after
    q+2s; rows r+1..r+q go to columns 1..q; the last s rows to columns q+2, q+4, ….
    '''
    ctx = AdmissibilityContext(p, r)
    if not 0 <= q <= 2 * p - r:
        raise DomainError(f'q must lie in 0..{2 * p - r}, not {q}')
    s = 2 * p - r - q
    images = [q + 2 * i - 1 for i in range(1, s + 1)]
    images += [q + 2 * s + j for j in range(1, 2 * (r - p) + q + 1)]
    images += list(range(1, q + 1))
    images += [q + 2 * i for i in range(1, s + 1)]
    w = PermutationMatrix(tuple(images))
    assert w.n == ctx.n
    return w


def admissible_subsets(ctx: AdmissibilityContext) -> list[frozenset[int]]:
    '''The sets σ({r+1, …, 2p}) of admissible cosets.

    ψ_V links column b to b − 2, so such a set holds the first x odd and the first y even columns.
    '''
    size, subsets = 2 * ctx.p - ctx.r, []
    for odd in range(max(0, size - ctx.p), min(size, ctx.p) + 1):
        even = size - odd
        subsets.append(frozenset(range(1, 2 * odd, 2)) | frozenset(range(2, 2 * even + 1, 2)))
    return subsets


def coset_from_subset(ctx: AdmissibilityContext, columns: frozenset[int]) -> PermutationMatrix:
    '''The shortest representative whose last 2p − r rows land in ``columns``.'''
    top = sorted(set(range(1, ctx.n + 1)) - columns)
    return PermutationMatrix(tuple(top) + tuple(sorted(columns)))


def finite_field_oracle(ctx: AdmissibilityContext, gamma: Gamma | PermutationMatrix, prime: int = ORACLE_PRIME) -> bool:
    '''Admissibility by trying every v in V over F_prime; slow, for small p.'''
    if ctx.p > ORACLE_MAX_P:
        raise DomainError(f'The finite-field oracle stops at p={ORACLE_MAX_P}, not {ctx.p}')
    gamma = gamma if isinstance(gamma, Gamma) else Gamma(gamma)
    w, z = gamma.w.matrix(), gamma.z_matrix()
    forward = w @ z % prime
    backward = (2 * np.eye(ctx.n, dtype=np.int64) - z) @ w.T % prime
    outside = np.array([[not ctx.in_radical(i, j) for j in range(1, ctx.n + 1)] for i in range(1, ctx.n + 1)])
    coordinates = ctx.v_coordinates
    for values in product(range(prime), repeat=len(coordinates)):
        v = np.eye(ctx.n, dtype=np.int64)
        psi = 0
        for (a, b), value in zip(coordinates, values):
            v[a - 1, b - 1] = value
            if (a, b) in ctx.psi_support: psi += value
        if psi % prime == 0: continue
        conjugate = (forward @ v % prime) @ backward % prime
        if not np.any((conjugate - np.eye(ctx.n, dtype=np.int64)) % prime * outside):
            return False
    return True


@dataclass
class AdmissibilityReport:
    '''Exhaustive admissible cosets against the w_q family for one (p, r).'''
    p: int
    r: int
    found: list[PermutationMatrix] = field(default_factory=list)
    expected: list[PermutationMatrix] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        '''True if the scan found exactly the w_q, 2p − r + 1 of them.'''
        return set(self.found) == set(self.expected) and len(self.found) == 2 * self.p - self.r + 1

    def to_json(self) -> dict:
        '''Return this report as a JSON-ready dictionary.'''
        return {
            'p': self.p, 'r': self.r, 'ok': self.ok,
            'found': [w.to_json() for w in self.found], 'expected': [w.to_json() for w in self.expected],
        }


def check_admissibility(p: int, r: int, concurrency: int = 1) -> AdmissibilityReport:
    '''Compare the exhaustive scan for (p, r) with the w_q, logging any difference.'''
    ctx = AdmissibilityContext(p, r)
    report = AdmissibilityReport(p, r, admissible_set(ctx, concurrency), [build_wq(p, r, q) for q in range(2 * p - r + 1)])
    if not report.ok:
        _logger.warning('💥 Admissible cosets for p=%d, r=%d differ from the w_q: %s', p, r, [str(w) for w in report.found])
    return report


def twist_problems(ctx: AdmissibilityContext, prime: int = ORACLE_PRIME) -> list[str]:
    '''Check z(r_1, …, r_p) over F_prime against w alone, and against the oracle when p is small.

    An inadmissible w stays inadmissible for every z; with r_1 = ⋯ = r_p nothing changes at all.
    '''
    problems = []
    use_oracle = ctx.p <= ORACLE_MAX_P
    for images in permutations(range(1, ctx.n + 1)):
        w = PermutationMatrix(images)
        plain = is_admissible(ctx, w)
        for r in product(range(prime), repeat=ctx.p):
            twisted = is_admissible(ctx, Gamma(w, r))
            if not plain and twisted:
                problems.append(f'{w} is inadmissible but {w}·z{r} is admissible')
            if len(set(r)) == 1 and twisted != plain:
                problems.append(f'{w}·z{r} with equal parameters changes admissibility')
            if use_oracle and twisted != finite_field_oracle(ctx, Gamma(w, r), prime):
                problems.append(f'{w}·z{r}: the oracle over F_{prime} disagrees')
    return problems
