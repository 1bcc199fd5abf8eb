# encoding: utf-8

'''🧮 Global Integrals: tests for the coefficient catalog.'''

from jpl.automorphic.integrals.catalog import CoefficientFamily, catalog_families, family, instantiate
from jpl.automorphic.integrals.const import GE6, GE7, GL, GSO, GSP
from jpl.automorphic.integrals.errors import DomainError, LabelLookupError
from jpl.automorphic.integrals.partitions import Partition
import pytest


@pytest.mark.parametrize('m, tags', [
    (2, [GL, GSP, GSO, GE7]),
    (3, [GL, GE6]),
    (4, [GL]),
    (7, [GL]),
])
def test_families_by_m(m, tags):
    assert [f.tag for f in catalog_families(m)] == tags


def test_m_below_two():
    with pytest.raises(DomainError):
        catalog_families(1)


def test_gl_coefficient():
    config = instantiate(GL, 2, 3)
    assert config.base_orbit.partition == Partition((2, 2, 2))
    assert config.group == 'GL_6'
    assert config.dim_U == 9
    assert str(config) == 'GL[2]'


@pytest.mark.parametrize('tag, param, m, dim_U', [
    (GSP, 1, 2, 7),
    (GSO, 2, 2, 10),
    (GE6, None, 3, 30),
    (GE7, None, 2, 60),
])
def test_dim_U(tag, param, m, dim_U):
    assert instantiate(tag, param, m).dim_U == dim_U


@pytest.mark.parametrize('tag, param, m', [(GL, 3, 4), (GSP, 2, 2), (GSO, 3, 2), (GE7, None, 2)])
def test_dim_U_is_the_parabolic_radical(tag, param, m):
    chosen = family(tag)
    assert chosen.levi_radical_dim(param, m) == instantiate(tag, param, m).dim_U


def test_exceptional_families_ignore_the_parameter():
    assert instantiate(GE7, 5, 2).param is None
    assert instantiate(GE7, 5, 2) == instantiate(GE7, None, 2)


def test_family_must_admit_m():
    with pytest.raises(DomainError):
        instantiate(GSP, 1, 3)


def test_parametric_families_need_a_parameter():
    with pytest.raises(DomainError):
        instantiate(GL, 0, 2)
    with pytest.raises(DomainError):
        instantiate(GSO, None, 2)


def test_unknown_family():
    with pytest.raises(LabelLookupError):
        instantiate('GU', 1, 2)


def test_subclass_needs_tag():
    with pytest.raises(TypeError):
        class Untagged(CoefficientFamily):
            description = 'no tag'
