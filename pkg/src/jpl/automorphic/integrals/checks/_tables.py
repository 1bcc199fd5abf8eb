# encoding: utf-8

'''🧮 Global Integrals: suites over the dimension-equation solver.'''

from .._classes import Check, Finding, WarningFinding
from ..catalog import instantiate
from ..const import FLAG_VANISHING, GL, OPEN_REGIME_MIN_M
from ..partitions import make_partition
from ..solver import admissible_orbits, max_length, verify_cuspidal_bound, verify_rows
from ..tables import enumerate_tables
import logging

_logger = logging.getLogger(__name__)

TABLE_MS = (2, 3, 4, 5, 6)


class TablesCheck(Check):
    '''Regenerate the tables of integrals and match them against the packaged fixtures.'''

    description = 'Tables of global integrals for m = 2, 3 and the closed regime 4 ≤ m ≤ 6'

    def _minimal_orbit(self, m: int) -> list[Finding]:
        '''For m ≥ 4 the cheapest Eisenstein series sits on (k+1, k^{m−2}, k−1) at exactly m − 1.'''
        findings = []
        lo, hi = self.config.params
        for k in range(lo, hi + 1):
            config = instantiate(GL, k, m)
            below = [orbit for c in range(1, m - 1) for orbit in admissible_orbits(config, c)]
            at = admissible_orbits(config, m - 1)
            expected = make_partition([k + 1] + [k] * (m - 2) + [k - 1])
            passed = not below and [orbit.partition for orbit in at] == [expected]
            findings.append(self.outcome(
                passed, f'Smallest term above {config.base_orbit} at m={m}',
                f'{len(below)} orbit(s) below m − 1; at m − 1: {", ".join(str(o) for o in at) or "none"}'
            ))
        return findings

    def run(self) -> list[Finding]:
        findings = []
        for m in ((self.config.m,) if self.config.m else TABLE_MS):
            tables = enumerate_tables(
                m, self.config.params, self.config.l_max, self.config.cuspidal_exclusion,
                self.config.allow_open_regime, self.config.concurrency
            )
            missing = sum(len(match.missing) for match in tables.matches)
            findings.append(self.outcome(
                tables.ok, f'Tables for m={m}',
                f'{tables.rows} rows in {len(tables.matches)} tables, {len(tables.unexpected)} unexpected, {missing} missing'
            ))
            bad = verify_rows([row for match in tables.matches for row in match.rows] + tables.flagged)
            findings.append(self.outcome(not bad, f'Row sums for m={m}', f'{len(bad)} row(s) off the budget'))
            vanishing = [row for row in tables.flagged if FLAG_VANISHING in row.flags]
            if vanishing:
                findings.append(WarningFinding(
                    self.name, f'Open regime for m={m}', f'{len(vanishing)} row(s) with nonvanishing undecided'
                ))
            if m >= OPEN_REGIME_MIN_M:
                findings.extend(self._minimal_orbit(m))
        return findings


class LengthCheck(Check):
    '''No global integral for m = 2 or 3 has more than three representations.'''

    description = 'Longest global integral for m = 2 and m = 3'
    expected = 3

    def run(self) -> list[Finding]:
        findings = []
        for m in (2, 3):
            found = max_length(
                m, self.config.params, cuspidal_exclusion=self.config.cuspidal_exclusion,
                concurrency=self.config.concurrency
            )
            findings.append(self.outcome(found == self.expected, f'Longest integral for m={m}', f'l = {found}'))
        return findings


class CuspidalBoundCheck(Check):
    '''Exhaustive search showing no row holds a cuspidal GL_km slot with k ≥ 3.'''
    description = 'Cuspidal GL_km slots need k ≤ 2, and contribute ½km(m − 1)'

    def run(self) -> list[Finding]:
        report = verify_cuspidal_bound(range(2, 7), range(1, 7), range(2, 5), self.config.params)
        return [
            self.outcome(
                not report.counterexamples, 'No solutions with k ≥ 3',
                f'{report.cases} cases searched, {len(report.counterexamples)} solution(s)'
            ),
            self.outcome(
                not report.identity_failures, 'Cuspidal term is ½km(m − 1) for k, m ≤ 6',
                ', '.join(f'k={k} m={m}: {term}' for k, m, term in report.identity_failures) or 'exact'
            ),
        ]
