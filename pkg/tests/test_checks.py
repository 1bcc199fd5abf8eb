# encoding: utf-8

'''🧮 Global Integrals: tests for verification suites and reports.'''

from jpl.automorphic.integrals import checks
from jpl.automorphic.integrals._classes import (
    Check, ErrorFinding, FailFinding, PassFinding, Report, RunConfig, WarningFinding
)
from jpl.automorphic.integrals.const import EMIT_JSON, EMIT_MARKDOWN
from jpl.automorphic.integrals.errors import DomainError, LabelLookupError
import argparse, json, pytest


def test_config_defaults_from_sparse_args():
    cfg = RunConfig.from_args(argparse.Namespace(command='verify-roots', emit=EMIT_MARKDOWN))
    assert cfg.m is None
    assert cfg.params == (1, 6)
    assert cfg.cuspidal_exclusion
    assert cfg.concurrency == 1


def test_config_cuspidal_exclusion_switch():
    cfg = RunConfig.from_args(argparse.Namespace(command='tables', m=3, lift_cuspidal_exclusion=True))
    assert not cfg.cuspidal_exclusion


@pytest.mark.parametrize('kwargs', [
    {'params': (0, 3)}, {'params': (4, 2)}, {'m': 1}, {'emit': 'yaml'}, {'concurrency': 0},
])
def test_config_validation(kwargs):
    with pytest.raises(DomainError):
        RunConfig('tables', **kwargs)


def test_findings():
    assert not PassFinding('A', 'x').failed
    assert not WarningFinding('A', 'x').failed
    assert FailFinding('A', 'x').failed
    error = ErrorFinding('A', 'x', error_message='boom')
    assert error.failed
    assert error.report() == ['x', 'boom']
    assert error.to_json()['error'] == 'boom'


def test_report_markdown():
    report = Report([PassFinding('A', 'x', 'fine'), WarningFinding('A', 'y', 'odd')])
    text = report.to_markdown()
    assert report.ok
    assert '| ✅ Pass | x | fine |' in text
    assert '| 👮 Discrepancy | y | odd |' in text
    assert text.endswith('**✅ All suites passed**\n')


def test_report_failures():
    report = Report([PassFinding('A', 'x'), FailFinding('B', 'y'), ErrorFinding('C', 'z', error_message='e')])
    assert not report.ok
    assert report.to_markdown().endswith('**💥 Failed: B, C**\n')
    payload = json.loads(report.generate_report(EMIT_JSON))
    assert payload['failures'] == ['B', 'C']
    assert len(payload['findings']) == 3


def test_report_is_reproducible():
    report = Report([PassFinding('A', 'x')])
    assert report.generate_report(EMIT_MARKDOWN) == report.generate_report(EMIT_MARKDOWN)


def test_check_needs_description():
    with pytest.raises(TypeError):
        class Nameless(Check):
            def run(self):
                return []


def test_cheap_suites_pass():
    report = checks.run_checks(RunConfig('verify-all', params=(1, 3)), ('roots', 'orbits', 'lemex'))
    assert report.ok, [f.value for f in report.failures]


def test_inducing_suite_passes():
    report = checks.run_checks(RunConfig('verify-all'), ('inducing',))
    assert report.ok, [f.value for f in report.failures]


def test_length_and_cuspidal_bound_suites_pass():
    report = checks.run_checks(RunConfig('verify-all', params=(1, 4)), ('length', 'cuspidal-bound'))
    assert report.ok, [f.value for f in report.failures]


def test_tables_suite_for_one_m():
    report = checks.run_checks(RunConfig('verify-all', m=4), ('tables',))
    assert report.ok, [f.value for f in report.failures]


def test_tables_suite_fails_without_the_cuspidal_exclusion():
    report = checks.run_checks(RunConfig('verify-all', m=3, cuspidal_exclusion=False), ('tables',))
    assert not report.ok


def test_unknown_suite():
    with pytest.raises(LabelLookupError):
        checks.run_checks(RunConfig('verify-all'), ('nonesuch',))


def test_exploding_suite_becomes_an_error(monkeypatch):
    class Exploding(Check):
        description = 'Always raises'

        def run(self):
            raise RuntimeError('kaboom')

    monkeypatch.setitem(checks.CHECKS, 'exploding', Exploding)
    report = checks.run_checks(RunConfig('verify-all'), ('exploding',))
    assert not report.ok
    assert isinstance(report.findings[0], ErrorFinding)
    assert report.findings[0].error_message == 'kaboom'
