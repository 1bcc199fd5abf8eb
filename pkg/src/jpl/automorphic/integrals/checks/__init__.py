# encoding: utf-8

'''🧮 Global Integrals: verification suites.'''

from .._classes import Check, ErrorFinding, Finding, Report, RunConfig
from ..errors import LabelLookupError
from ._inducing import InducingCheck, LemexCheck
from ._structure import AdmissibilityCheck, OrbitFixtureCheck, RootsCheck
from ._tables import CuspidalBoundCheck, LengthCheck, TablesCheck
from typing import Iterable
import logging, traceback

_logger = logging.getLogger(__name__)

CHECKS = {
    'tables': TablesCheck,
    'length': LengthCheck,
    'cuspidal-bound': CuspidalBoundCheck,
    'inducing': InducingCheck,
    'lemex': LemexCheck,
    'admissibility': AdmissibilityCheck,
    'roots': RootsCheck,
    'orbits': OrbitFixtureCheck,
}

DEFAULT_CHECKS = tuple(CHECKS)


def run_checks(config: RunConfig, names: Iterable[str] = DEFAULT_CHECKS) -> Report:
    '''Run the named suites in order; a suite that blows up becomes an error finding.'''
    findings: list[Finding] = []
    for name in names:
        try:
            check = CHECKS[name](config)
        except KeyError:
            raise LabelLookupError(f'No verification suite named «{name}»')
        _logger.info('🔍 Running %s: %s', name, check.description)
        try:
            results = check.run()
        except Exception as ex:
            _logger.error('💥 Suite %s raised %s', name, ex)
            _logger.debug(traceback.format_exc())
            results = [ErrorFinding(check.name, check.description, error_message=str(ex))]
        failed = sum(1 for finding in results if finding.failed)
        if failed:
            _logger.warning('💥 %s: %d of %d findings failed', name, failed, len(results))
        else:
            _logger.info('✅ %s: %d findings', name, len(results))
        findings.extend(results)
    return Report(findings)


__all__ = [CHECKS, DEFAULT_CHECKS, Check, run_checks]
