# encoding: utf-8

'''🧮 Global Integrals: suites over Weyl groups, root systems and orbit fixtures.'''

from .._classes import Check, Finding, WarningFinding
from ..catalog import catalog_families
from ..const import ORACLE_MAX_P, WEYL_MAX_P
from ..orbits import check_fixture
from ..roots import verify_root_fixtures
from ..weyl import AdmissibilityContext, admissible_subsets, check_admissibility, coset_from_subset, twist_problems
import logging

_logger = logging.getLogger(__name__)


class AdmissibilityCheck(Check):
    '''Exhaustive admissible double cosets in GL_2p against the w_q, p ≤ 4.'''

    description = 'Admissible Weyl elements for V = U_{p,2} and Levi GL_r × GL_{2p−r}'

    def run(self) -> list[Finding]:
        findings = []
        for p in range(1, WEYL_MAX_P + 1):
            for r in range(p, 2 * p):
                report = check_admissibility(p, r, self.config.concurrency)
                ctx = AdmissibilityContext(p, r)
                described = {coset_from_subset(ctx, columns) for columns in admissible_subsets(ctx)}
                findings.append(self.outcome(
                    report.ok and described == set(report.found), f'p={p}, r={r}',
                    f'{len(report.found)} admissible: {" ".join(str(w) for w in report.found)}'
                ))
        for p in range(1, ORACLE_MAX_P + 1):
            for r in range(p, 2 * p):
                problems = twist_problems(AdmissibilityContext(p, r))
                findings.append(self.outcome(
                    not problems, f'Unipotent part and finite-field oracle, p={p}, r={r}', '; '.join(problems[:3]) or 'consistent'
                ))
        return findings


class RootsCheck(Check):
    '''Weyl-word images, radical dimensions and character supports in E6 and E7; loose identities only warn.'''
    description = 'Root-system identities in E6 and E7'

    def run(self) -> list[Finding]:
        findings = []
        for check in verify_root_fixtures():
            if check.passed or check.strict:
                findings.append(self.outcome(check.passed, check.name, check.detail))
            else:
                findings.append(WarningFinding(self.name, check.name, check.detail))
        return findings


class OrbitFixtureCheck(Check):
    '''The exceptional orbit fixture, and each family's U(O) against the radical of its parabolic.'''

    description = 'Orbit fixture consistency and coefficient dimensions'

    def run(self) -> list[Finding]:
        problems = check_fixture()
        findings = [self.outcome(not problems, 'Exceptional orbit fixture', '; '.join(problems) or 'consistent')]
        lo, hi = self.config.params
        for m in (2, 3, 4):
            for family in catalog_families(m):
                mismatches = []
                for param in (range(lo, hi + 1) if family.parametric else (None,)):
                    config = family.config(param, m)
                    radical = family.levi_radical_dim(param, m)
                    if radical is not None and radical != config.dim_U:
                        mismatches.append(f'{config}: {config.dim_U} ≠ {radical}')
                findings.append(self.outcome(not mismatches, f'dim U(O) for {family.tag} at m={m}', '; '.join(mismatches) or 'matches'))
        return findings
