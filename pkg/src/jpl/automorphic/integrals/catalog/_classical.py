# encoding: utf-8

'''🧮 Global Integrals: classical coefficient families.'''

from ._base import CoefficientFamily
from ..const import GL, GSP, GSO
from ..orbits import ClassicalOrbit
from ..partitions import ClassicalFamily, Partition


class GLFamily(CoefficientFamily):
    '''Coefficients of GL_km attached to (k^m), with block-upper unipotent group U_{k,m}.'''

    description = 'GL_km with orbit (k^m) and character ψ(tr(X_1 + ⋯ + X_{k−1})); any m ≥ 2'
    tag = GL

    def admits(self, m: int) -> bool:
        return m >= 2

    def group_size(self, k: int, m: int) -> int:
        return k * m

    def base_orbit(self, k: int, m: int) -> ClassicalOrbit:
        return ClassicalOrbit(ClassicalFamily(GL, self.group_size(k, m)), Partition((k,) * m))

    def levi_radical_dim(self, k: int, m: int) -> int:
        # Levi GL_m × ⋯ × GL_m, k times
        n = k * m
        return (n * n - k * m * m) // 2


class GSpFamily(CoefficientFamily):
    '''Coefficients of GSp_2(2n+1) attached to ((2n+1)²).'''

    description = 'GSp_2(2n+1) with orbit ((2n+1)^2) and Levi GL_2 × ⋯ × GL_2 (n times); m = 2 only'
    tag = GSP

    def admits(self, m: int) -> bool:
        return m == 2

    def group_size(self, n: int, m: int) -> int:
        return 2 * (2 * n + 1)

    def base_orbit(self, n: int, m: int) -> ClassicalOrbit:
        return ClassicalOrbit(ClassicalFamily(GSP, self.group_size(n, m)), Partition((2 * n + 1, 2 * n + 1)))

    def levi_radical_dim(self, n: int, m: int) -> int:
        # Levi GL_2^n × Sp_2 inside Sp_{4n+2}
        levi = 4 * n + ClassicalFamily(GSP, 2).group_dim()
        return (ClassicalFamily(GSP, 4 * n + 2).group_dim() - levi) // 2


class GSOFamily(CoefficientFamily):
    '''Coefficients of GSO_4n attached to ((2n)²).'''

    description = 'GSO_4n with orbit ((2n)^2) and Levi GL_2 × ⋯ × GL_2 (n times); m = 2 only'
    tag = GSO

    def admits(self, m: int) -> bool:
        return m == 2

    def group_size(self, n: int, m: int) -> int:
        return 4 * n

    def base_orbit(self, n: int, m: int) -> ClassicalOrbit:
        return ClassicalOrbit(ClassicalFamily(GSO, self.group_size(n, m)), Partition((2 * n, 2 * n)))

    def levi_radical_dim(self, n: int, m: int) -> int:
        return (ClassicalFamily(GSO, 4 * n).group_dim() - 4 * n) // 2
