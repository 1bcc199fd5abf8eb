# encoding: utf-8

'''🧮 Global Integrals: exceptional coefficient families.'''

from ._base import CoefficientFamily
from ..const import E6, E7, GE6, GE7, GE7_STABILIZER_NODES
from ..orbits import ExceptionalOrbit, exceptional_orbit
from ..roots import build_root_system, unipotent_radical_dim


class GE6Family(CoefficientFamily):
    '''The D4 coefficient of GE6, whose stabilizer inside a Levi is of type A_2.'''

    description = 'GE6 with orbit D4; m = 3 only'
    tag = GE6
    parametric = False

    def admits(self, m: int) -> bool:
        return m == 3

    def base_orbit(self, param: int | None, m: int) -> ExceptionalOrbit:
        return exceptional_orbit(E6, 'D4')


class GE7Family(CoefficientFamily):
    '''The E6 coefficient of GE7 with Levi containing GL_2 × GL_2 × GL_2.'''

    description = 'GE7 with orbit E6 and Levi through α2, α5, α7; m = 2 only'
    tag = GE7
    parametric = False

    def admits(self, m: int) -> bool:
        return m == 2

    def base_orbit(self, param: int | None, m: int) -> ExceptionalOrbit:
        return exceptional_orbit(E7, 'E6')

    def levi_radical_dim(self, param: int | None, m: int) -> int:
        '''Radical of the parabolic whose Levi retains α2, α5 and α7.'''
        return unipotent_radical_dim(build_root_system(E7), GE7_STABILIZER_NODES)
