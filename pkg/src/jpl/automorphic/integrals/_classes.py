# encoding: utf-8

'''🧮 Global Integrals: classes.'''

from __future__ import annotations
from . import PACKAGE_NAME, VERSION
from .const import DEFAULT_PARAMS, EMIT_FORMATS, EMIT_JSON, EMIT_MARKDOWN
from .errors import DomainError
from abc import ABC, abstractmethod
from collections import defaultdict
from dataclasses import dataclass
from typing import ClassVar
import argparse, json, logging, networkx, numpy, sympy

_logger = logging.getLogger(__name__)


@dataclass
class RunConfig:
    '''What the command line asked for.'''
    command: str
    m: int | None = None
    params: tuple[int, int] = DEFAULT_PARAMS
    emit: str = EMIT_JSON
    allow_open_regime: bool = False
    cuspidal_exclusion: bool = True
    concurrency: int = 1
    l_max: int | None = None

    def __post_init__(self):
        '''Reject ranges, sizes, formats and pool sizes the solver cannot use.'''
        lo, hi = self.params
        if lo < 1 or hi < lo:
            raise DomainError(f'Parameter range {lo}..{hi} must be non-empty and positive')
        if self.m is not None and self.m < 2:
            raise DomainError(f'm must be at least 2, not {self.m}')
        if self.emit not in EMIT_FORMATS:
            raise DomainError(f'Unknown output format «{self.emit}»')
        if self.concurrency < 1:
            raise DomainError(f'Concurrency must be at least 1, not {self.concurrency}')

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        '''Build a config from parsed arguments; options a subcommand lacks keep their defaults.'''
        return cls(
            command=args.command,
            m=getattr(args, 'm', None),
            params=getattr(args, 'params', DEFAULT_PARAMS),
            emit=getattr(args, 'emit', EMIT_JSON),
            allow_open_regime=getattr(args, 'allow_open_regime', False),
            cuspidal_exclusion=not getattr(args, 'lift_cuspidal_exclusion', False),
            concurrency=getattr(args, 'concurrency', 1),
            l_max=getattr(args, 'l_max', None),
        )


@dataclass
class Finding:
    '''One outcome of a verification suite.'''
    check: str                    # Name of the suite that produced this finding
    value: str                    # What was checked
    detail: str = ''              # What was computed

    @abstractmethod
    def kind(self) -> str:
        '''Return the kind of this finding.'''
        raise NotImplementedError(f'{self.__class__.__name__} must implement the «kind» method')

    def report(self) -> list[str]:
        '''Return the value and detail columns of this finding.'''
        return [self.value, self.detail]

    @property
    def failed(self) -> bool:
        '''Return True if this finding fails its suite.'''
        return False

    def to_json(self) -> dict:
        '''Return this finding as a JSON-ready dictionary.'''
        return {'check': self.check, 'kind': self.__class__.__name__, 'value': self.value, 'detail': self.detail}


@dataclass
class PassFinding(Finding):
    '''A check that came out as expected.'''
    def kind(self) -> str:
        return '✅ Pass'


@dataclass
class WarningFinding(Finding):
    '''A recorded discrepancy that does not fail its suite.'''
    def kind(self) -> str:
        return '👮 Discrepancy'


@dataclass
class FailFinding(Finding):
    '''A check whose computed value contradicts the expected one.'''
    def kind(self) -> str:
        return '💥 Fail'

    @property
    def failed(self) -> bool:
        '''Return True if this finding fails its suite.'''
        return True


@dataclass
class ErrorFinding(Finding):
    '''A suite that could not run to the end.'''
    error_message: str | None = None

    def kind(self) -> str:
        return '❌ Error'

    def report(self) -> list[str]:
        '''Return the value and the error message, falling back to the detail.'''
        return [self.value, self.error_message or self.detail]

    @property
    def failed(self) -> bool:
        '''Return True if this finding fails its suite.'''
        return True

    def to_json(self) -> dict:
        '''Return this error finding, message included, as a JSON-ready dictionary.'''
        return {**super().to_json(), 'error': self.error_message}


class Check(ABC):
    '''Base class for verification suites.'''

    description: ClassVar[str]

    def __init__(self, config: RunConfig):
        '''Initialize the suite with the run configuration it should honor.'''
        self.config = config

    def __init_subclass__(cls, **kwargs):
        '''Make sure every suite describes itself.'''
        super().__init_subclass__(**kwargs)
        if not hasattr(cls, 'description'):
            raise TypeError(f'{cls.__name__} must define a «description» class attribute')

    @property
    def name(self) -> str:
        '''Return the name findings are filed under.'''
        return self.__class__.__name__

    def outcome(self, passed: bool, value: str, detail: str = '') -> Finding:
        '''Return a pass or fail finding depending on ``passed``.'''
        return (PassFinding if passed else FailFinding)(self.name, value, detail)

    @abstractmethod
    def run(self) -> list[Finding]:
        '''Run the suite and return what it found.'''
        raise NotImplementedError(f'{self.__class__.__name__} must implement the «run» method')


def versions() -> dict[str, str]:
    '''Return the versions of this package and the libraries it computes with.'''
    return {
        PACKAGE_NAME: VERSION, 'numpy': numpy.__version__, 'sympy': sympy.__version__,
        'networkx': networkx.__version__,
    }


class Report:
    '''Findings of one or more suites, rendered without timestamps so reruns compare byte for byte.'''

    def __init__(self, findings: list[Finding]):
        '''Initialize the report with the findings to render.'''
        self.findings = findings

    @property
    def ok(self) -> bool:
        '''Return True if no finding failed.'''
        return not any(finding.failed for finding in self.findings)

    @property
    def failures(self) -> list[Finding]:
        '''Return the findings that failed.'''
        return [finding for finding in self.findings if finding.failed]

    def _organize_report(self) -> dict[str, list[Finding]]:
        '''Group the findings by suite, keeping their order.'''
        organized: defaultdict[str, list[Finding]] = defaultdict(list)
        for finding in self.findings:
            organized[finding.check].append(finding)
        return organized

    def header(self) -> str:
        '''Return the provenance line that heads the report.'''
        return ' · '.join(f'{name} {version}' for name, version in versions().items())

    def to_json(self) -> dict:
        '''Return this finding as a JSON-ready dictionary.'''
        return {
            'versions': versions(), 'ok': self.ok,
            'failures': sorted({finding.check for finding in self.failures}),
            'findings': [finding.to_json() for finding in self.findings],
        }

    def to_markdown(self) -> str:
        '''Render the report as Markdown, one table per suite.'''
        lines = ['# Verification report', '', f'_{self.header()}_', '']
        for check, findings in self._organize_report().items():
            lines.append(f'## {check}')
            lines.append('')
            lines.append('| Finding | Value | Details |')
            lines.append('| --- | --- | --- |')
            for finding in findings:
                value, details = finding.report()
                lines.append(f'| {finding.kind()} | {value} | {details} |')
            lines.append('')
        failed = sorted({finding.check for finding in self.failures})
        lines.append('**✅ All suites passed**' if self.ok else f'**💥 Failed: {", ".join(failed)}**')
        return '\n'.join(lines) + '\n'

    def generate_report(self, emit: str) -> str:
        '''Render the report in the requested format.'''
        _logger.info('📝 Generating %s report of %d findings', emit, len(self.findings))
        if emit == EMIT_MARKDOWN: return self.to_markdown()
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + '\n'
