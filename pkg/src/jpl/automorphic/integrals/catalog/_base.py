# encoding: utf-8

'''🧮 Global Integrals: coefficient family base classes.'''

from __future__ import annotations
from ..orbits import OrbitLabel, half_dim
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import ClassVar


@dataclass(frozen=True)
class CoefficientConfig:
    '''A Fourier coefficient whose character has stabilizer GL_m, at concrete parameters.'''
    family: str                 # Registry tag of the family
    param: int | None           # k for GL_km, n for GSp_2(2n+1) and GSO_4n, None for exceptional groups
    m: int                      # Rank of the stabilizer GL_m
    base_orbit: OrbitLabel      # Orbit O of the coefficient
    dim_U: int                  # Dimension of U(O), half the dimension of O

    @property
    def group(self) -> str:
        '''Name of the ambient group, such as GSp_6 or E7.'''
        return self.base_orbit.group if self.param is None else str(self.base_orbit.family)

    def to_json(self) -> dict:
        '''Return this configuration as a JSON-ready dictionary.'''
        return {
            'family': self.family, 'param': self.param, 'm': self.m,
            'base_orbit': self.base_orbit.to_json(), 'dim_U': self.dim_U,
        }

    def __str__(self) -> str:
        return self.family if self.param is None else f'{self.family}[{self.param}]'


class CoefficientFamily(ABC):
    '''A family of Fourier coefficients whose stabilizer is GL_m with the same center as the ambient group.'''

    description: ClassVar[str]
    tag: ClassVar[str]
    parametric: ClassVar[bool] = True

    def __init_subclass__(cls, **kwargs):
        '''Initialize the subclass.'''
        super().__init_subclass__(**kwargs)
        for attr in ('description', 'tag'):
            if not hasattr(cls, attr):
                raise TypeError(f'{cls.__name__} must define a «{attr}» class attribute')

    @abstractmethod
    def admits(self, m: int) -> bool:
        '''Whether this family has a coefficient with stabilizer GL_m.'''
        raise NotImplementedError(f'{self.__class__.__name__} must implement the «admits» method')

    @abstractmethod
    def base_orbit(self, param: int | None, m: int) -> OrbitLabel:
        '''The orbit of the coefficient at the given parameters.'''
        raise NotImplementedError(f'{self.__class__.__name__} must implement the «base_orbit» method')

    def group_size(self, param: int | None, m: int) -> int | None:
        '''Size of the classical group's partitions, or None for exceptional groups.'''
        return None

    def levi_radical_dim(self, param: int | None, m: int) -> int | None:
        '''Dimension of U(O) from the parabolic it sits in, or None when that parabolic is not modeled.'''
        return None

    def config(self, param: int | None, m: int) -> CoefficientConfig:
        '''Build the concrete configuration at the given parameters.'''
        base = self.base_orbit(param, m)
        return CoefficientConfig(self.tag, param if self.parametric else None, m, base, half_dim(base))
