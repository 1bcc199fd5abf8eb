# encoding: utf-8

'''🧮 Global Integrals: the catalog of Fourier coefficients with stabilizer GL_m.

Only five families have a GL_m stabilizer whose center is the center of the ambient group. Others can be
registered through ``EXTRA_FAMILIES``, which ships empty.
'''

from ._base import CoefficientConfig, CoefficientFamily
from ._classical import GLFamily, GSpFamily, GSOFamily
from ._exceptional import GE6Family, GE7Family
from ..errors import DomainError, LabelLookupError
from functools import lru_cache
import logging

_logger = logging.getLogger(__name__)

FAMILIES = {
    'GL': GLFamily,
    'GSp': GSpFamily,
    'GSO': GSOFamily,
    'GE6': GE6Family,
    'GE7': GE7Family,
}

EXTRA_FAMILIES: dict[str, type[CoefficientFamily]] = {}

DEFAULT_FAMILY = 'GL'


def registry() -> dict[str, type[CoefficientFamily]]:
    '''Every registered family, the standard ones first.'''
    return {**FAMILIES, **EXTRA_FAMILIES}


def family(name: str | CoefficientFamily) -> CoefficientFamily:
    '''The family registered under ``name``.'''
    if isinstance(name, CoefficientFamily): return name
    try:
        return registry()[name]()
    except KeyError:
        raise LabelLookupError(f'No coefficient family named «{name}»')


def catalog_families(m: int) -> list[CoefficientFamily]:
    '''Families having a coefficient with stabilizer GL_m.'''
    if m < 2:
        raise DomainError(f'The stabilizer GL_m needs m ≥ 2, not {m}')
    return [cls() for cls in registry().values() if cls().admits(m)]


@lru_cache(maxsize=None)
def _instantiate(tag: str, param: int | None, m: int) -> CoefficientConfig:
    '''Build and cache the configuration of ``tag``, rejecting unsupported m and parameters.'''
    chosen = family(tag)
    if m < 2 or not chosen.admits(m):
        raise DomainError(f'{tag} has no coefficient with stabilizer GL_{m}')
    if chosen.parametric and (param is None or param < 1):
        raise DomainError(f'{tag} needs a parameter ≥ 1, not {param}')
    config = chosen.config(param if chosen.parametric else None, m)
    _logger.debug('🧮 Instantiated %s at m=%d with base %s, dim U = %d', tag, m, config.base_orbit, config.dim_U)
    return config


def instantiate(family_: str | CoefficientFamily, param: int | None, m: int) -> CoefficientConfig:
    '''Concrete coefficient of ``family_`` at ``param`` with stabilizer GL_m.'''
    tag = family_.tag if isinstance(family_, CoefficientFamily) else family_
    family(tag)
    chosen_param = param if registry()[tag].parametric else None
    return _instantiate(tag, chosen_param, m)


__all__ = [
    CoefficientConfig, CoefficientFamily, FAMILIES, EXTRA_FAMILIES, DEFAULT_FAMILY,
    catalog_families, instantiate, family, registry,
]
