# encoding: utf-8

'''🧮 Global Integrals: suites over inducing data.'''

from .._classes import Check, Finding
from ..const import E7, GE7, GL, GSO, GSP
from ..inducing import (
    GE7_ODD_LEVIS, classify_inducing_data, compare_with_stated, datum_lemex, ge7_tau_options, lemex_check,
    swap_blocks, unipotent_radical_half
)
from ..orbits import ClassicalOrbit, exceptional_orbit
from ..partitions import ClassicalFamily, make_partition
from typing import Iterator
import logging

_logger = logging.getLogger(__name__)

MAX_P = 8

# Radical dimensions of the odd maximal parabolics of GE7
GE7_RADICALS = {'A6': 42, 'A4×A2': 50, 'E6': 27}

# τ orbits each odd Levi must offer for the Eisenstein series on E7(a2) and E7(a1)
GE7_ANCHORS = {
    ('A6', 'E7(a2)'): {('(5,2)',)},
    ('A6', 'E7(a1)'): {('(6,1)',)},
    ('E6', 'E7(a2)'): {('D5',)},
    ('E6', 'E7(a1)'): {('E6(a1)',)},
    ('A4×A2', 'E7(a2)'): {('(4,1)', '(2,1)'), ('(3,2)', '(3)')},
    ('A4×A2', 'E7(a1)'): {('(5)', '(2,1)'), ('(4,1)', '(3)')},
}


def closed_form_targets(max_p: int = MAX_P) -> Iterator[tuple[ClassicalFamily, int]]:
    '''Groups and half-gaps j of every target (c + j, c − j) that has a closed form, up to ``max_p``.'''
    for p in range(1, max_p + 1):
        gl = ClassicalFamily(GL, 2 * p)
        yield gl, 1
        if p >= 2: yield gl, 2
        for tag, c in ((GSP, 2 * p + 1), (GSO, 2 * p)):
            family = ClassicalFamily(tag, 2 * c)
            yield family, 1
            if c >= 3: yield family, 3


def target_for(family: ClassicalFamily, j: int):
    '''Two-row target (c + j, c − j) of ``family``.'''
    c = family.size // 2
    return make_partition((c + j, c - j))


def _names(combo) -> tuple[str, ...]:
    '''Partitions or labels of the orbits in ``combo``.'''
    return tuple(str(o.partition) if isinstance(o, ClassicalOrbit) else o.label for o in combo)


class InducingCheck(Check):
    '''Brute-force inducing data against the closed forms, GL_2p, GSp and GSO up to p = 8.'''

    description = 'Inducing data of two-row Eisenstein orbits'

    def run(self) -> list[Finding]:
        disagreements, swaps, count = [], [], 0
        for family, j in closed_form_targets():
            target = target_for(family, j)
            missing, extra = compare_with_stated(family, target)
            count += 1
            if missing or extra:
                disagreements.append(f'{target} in {family}: {len(missing)} missing, {len(extra)} extra')
            if family.tag == GL and j == 2:
                data = classify_inducing_data(family, target)
                first = {swap_blocks(d) for d in data if d.i == 1}
                third = {d for d in data if d.i == 3}
                if first != third: swaps.append(f'{target} in {family}')
        return [
            self.outcome(not disagreements, 'Closed forms equal the brute force', '; '.join(disagreements) or f'{count} targets'),
            self.outcome(not swaps, 'Swapping blocks maps i = 1 onto i = 3', '; '.join(swaps) or 'bijective'),
        ]


class LemexCheck(Check):
    '''½ dim of the induced orbit is dim τ plus dim U(P).'''

    description = 'Dimension identity for Eisenstein series'

    def run(self) -> list[Finding]:
        failures, count = [], 0
        for family, j in closed_form_targets():
            if family.tag != GL: continue
            for datum in classify_inducing_data(family, target_for(family, j)):
                count += 1
                if not datum_lemex(datum): failures.append(str(datum))
        findings = [self.outcome(not failures, 'GL inducing data up to p = 8', '; '.join(failures) or f'{count} data')]
        for levi, expected in GE7_RADICALS.items():
            computed = unipotent_radical_half(GE7, GE7_ODD_LEVIS[levi])
            findings.append(self.outcome(computed == expected, f'dim U = {expected} for the {levi} parabolic', f'computed {computed}'))
        for (levi, label), expected in GE7_ANCHORS.items():
            found = {_names(combo) for combo in ge7_tau_options(levi, label)}
            findings.append(self.outcome(
                found == expected, f'τ on {levi} inducing {label}', ', '.join(' × '.join(c) for c in sorted(found)) or 'none'
            ))
        anchors = (('A6', 19, 'E7(a2)'), ('E6', 35, 'E7(a1)'))
        for levi, tau, label in anchors:
            passed = lemex_check(GE7, GE7_ODD_LEVIS[levi], (tau,), exceptional_orbit(E7, label))
            findings.append(self.outcome(passed, f'{GE7_RADICALS[levi]} + {tau} = ½ dim {label}'))
        return findings
