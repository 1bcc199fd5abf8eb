# encoding: utf-8

'''🧮 Global Integrals: tests for admissible Weyl elements.'''

from jpl.automorphic.integrals.errors import DomainError
from jpl.automorphic.integrals.weyl import (
    AdmissibilityContext, Gamma, PermutationMatrix, admissible_set, admissible_subsets, bruhat_length, build_wq,
    canonicalize, check_admissibility, coset_from_subset, finite_field_oracle, is_admissible, psi_coefficients,
    twist_problems
)
from itertools import permutations
import numpy as np, pytest


def test_permutation_parsing():
    assert PermutationMatrix.parse('[1,3,4,2]') == PermutationMatrix((1, 3, 4, 2))
    assert str(PermutationMatrix((2, 1))) == '[2,1]'
    with pytest.raises(DomainError):
        PermutationMatrix((1, 1))
    with pytest.raises(DomainError):
        PermutationMatrix.parse('one,two')


def test_inverse_and_matrix():
    w = PermutationMatrix((2, 3, 1))
    assert w.inverse() == PermutationMatrix((3, 1, 2))
    assert np.array_equal(w.matrix() @ w.inverse().matrix(), np.eye(3, dtype=np.int64))
    assert w.matrix()[0, 1] == 1


@pytest.mark.parametrize('images, length', [((1, 2, 3, 4), 0), ((2, 1), 1), ((4, 3, 2, 1), 6), ((1, 3, 4, 2), 2)])
def test_bruhat_length(images, length):
    assert bruhat_length(PermutationMatrix(images)) == length


def test_context_bounds():
    with pytest.raises(DomainError):
        AdmissibilityContext(2, 4)
    with pytest.raises(DomainError):
        AdmissibilityContext(2, 1)


def test_gamma_needs_even_size_and_p_parameters():
    with pytest.raises(DomainError):
        Gamma(PermutationMatrix((1, 2, 3)))
    with pytest.raises(DomainError):
        Gamma(PermutationMatrix((1, 2, 3, 4)), (0,))


def test_psi_support():
    ctx = AdmissibilityContext(2, 2)
    assert ctx.psi_support == ((1, 3), (2, 4))
    assert len(ctx.v_coordinates) == 4


def test_twist_shifts_the_character():
    ctx = AdmissibilityContext(2, 2)
    assert psi_coefficients(ctx, (0, 1)) == {(1, 3): 1, (2, 4): 1, (2, 3): 1}
    assert psi_coefficients(ctx, (1, 1)) == {(1, 3): 1, (2, 4): 1}


def test_identity_is_not_admissible():
    assert not is_admissible(AdmissibilityContext(2, 2), PermutationMatrix((1, 2, 3, 4)))


def test_canonicalize():
    ctx = AdmissibilityContext(2, 3)
    assert canonicalize(ctx, PermutationMatrix((4, 3, 2, 1))) == PermutationMatrix((2, 3, 4, 1))


@pytest.mark.parametrize('q, images', [(0, (1, 3, 4, 2)), (1, (2, 3, 4, 1))])
def test_wq(q, images):
    assert build_wq(2, 3, q) == PermutationMatrix(images)


def test_wq_range():
    with pytest.raises(DomainError):
        build_wq(2, 3, 2)


def test_trivial_v():
    assert admissible_set(AdmissibilityContext(1, 1)) == [PermutationMatrix((1, 2)), PermutationMatrix((2, 1))]


@pytest.mark.parametrize('p, r', [(p, r) for p in (1, 2, 3) for r in range(p, 2 * p)])
def test_admissible_cosets_are_the_wq(p, r):
    report = check_admissibility(p, r)
    assert report.ok
    assert len(report.found) == 2 * p - r + 1


def test_largest_scan():
    assert check_admissibility(4, 7).ok


def test_scan_stops_at_p4():
    with pytest.raises(DomainError):
        admissible_set(AdmissibilityContext(5, 5))


def test_subsets_describe_the_cosets():
    ctx = AdmissibilityContext(2, 3)
    assert set(admissible_subsets(ctx)) == {frozenset({1}), frozenset({2})}
    assert {coset_from_subset(ctx, c) for c in admissible_subsets(ctx)} == set(admissible_set(ctx))


@pytest.mark.parametrize('r', [2, 3])
def test_oracle_agrees(r):
    ctx = AdmissibilityContext(2, r)
    for images in permutations(range(1, 5)):
        w = PermutationMatrix(images)
        assert finite_field_oracle(ctx, w) == is_admissible(ctx, w)


def test_oracle_stops_at_p2():
    with pytest.raises(DomainError):
        finite_field_oracle(AdmissibilityContext(3, 3), PermutationMatrix((1, 2, 3, 4, 5, 6)))


@pytest.mark.parametrize('p, r', [(1, 1), (2, 2), (2, 3)])
def test_twists(p, r):
    assert twist_problems(AdmissibilityContext(p, r)) == []


def test_concurrent_scan():
    ctx = AdmissibilityContext(3, 4)
    assert admissible_set(ctx, concurrency=2) == admissible_set(ctx)
