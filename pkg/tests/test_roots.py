# encoding: utf-8

'''🧮 Global Integrals: tests for E6 and E7 root arithmetic.'''

from jpl.automorphic.integrals.const import E6, E7, GE7_STABILIZER_NODES
from jpl.automorphic.integrals.errors import DomainError
from jpl.automorphic.integrals.roots import (
    D5_WORD, CharacterSupport, WeylWord, apply_weyl_word, build_root_system, digits, highest_root, levi_roots,
    reflect, root_from_digits, unipotent_radical_dim, verify_character_support, verify_root_fixtures
)
import pytest


def test_root_counts():
    assert len(build_root_system(E6).positive_roots) == 36
    assert len(build_root_system(E7).positive_roots) == 63


def test_highest_roots():
    assert digits(E6, highest_root(build_root_system(E6))) == '122321'
    assert digits(E7, highest_root(build_root_system(E7))) == '2234321'


def test_unsupported_type():
    with pytest.raises(DomainError):
        build_root_system('F4')


def test_simple_reflection_negates():
    e6 = build_root_system(E6)
    assert reflect(e6, 3, e6.simple_root(3)) == (0, 0, -1, 0, 0, 0)
    assert reflect(e6, 3, e6.simple_root(1)) == (1, 0, 1, 0, 0, 0)


def test_weyl_word_parsing():
    assert WeylWord.parse('w6w5w4') == WeylWord((6, 5, 4))
    assert str(WeylWord((6, 5, 4))) == 'w6w5w4'
    assert str(WeylWord()) == '1'


@pytest.mark.parametrize('source, image', [
    ('100000', '010000'),
    ('001100', '000100'),
    ('000110', '100000'),
    ('000011', '000010'),
    ('010000', '001000'),
])
def test_d5_conjugation(source, image):
    e6 = build_root_system(E6)
    assert digits(E6, apply_weyl_word(e6, D5_WORD, root_from_digits(E6, source))) == image


def test_apply_weyl_word_rejects_non_roots():
    with pytest.raises(DomainError):
        apply_weyl_word(build_root_system(E6), D5_WORD, (2, 0, 0, 0, 0, 0))


def test_bad_digit_labels():
    with pytest.raises(DomainError):
        root_from_digits(E6, '10000')
    with pytest.raises(DomainError):
        root_from_digits('G2', '10')


@pytest.mark.parametrize('group, levi, expected', [
    (E7, tuple(GE7_STABILIZER_NODES), 60),
    (E6, (4,), 35),
    (E6, (1, 2, 3, 4, 5), 16),
    (E7, (1, 3, 4, 5, 6, 7), 42),
    (E7, (1, 2, 3, 4, 6, 7), 50),
    (E7, (1, 2, 3, 4, 5, 6), 27),
])
def test_radical_dimensions(group, levi, expected):
    assert unipotent_radical_dim(build_root_system(group), levi) == expected


def test_levi_from_root_vectors():
    e6 = build_root_system(E6)
    levi = levi_roots(e6, [e6.simple_root(1), e6.simple_root(3)])
    assert levi == frozenset({(1, 0, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0), (1, 0, 1, 0, 0, 0)})


def test_character_support():
    e7 = build_root_system(E7)
    support = CharacterSupport.from_digits(E7, ('1000000', '0010000', '0101000', '0001100', '0000110', '0000011'))
    assert verify_character_support(e7, support)
    assert not verify_character_support(build_root_system(E6), CharacterSupport((((2, 0, 0, 0, 0, 0), 1),)))


def test_strict_fixtures_hold():
    failed = [check.name for check in verify_root_fixtures() if check.strict and not check.passed]
    assert failed == []
