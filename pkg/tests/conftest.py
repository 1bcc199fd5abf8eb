# encoding: utf-8

'''🧮 Global Integrals: test configuration.'''

import hypothesis, os, pytest


hypothesis.settings.register_profile('ci', max_examples=100, deadline=None)
hypothesis.settings.register_profile('fast', max_examples=5, deadline=None)
hypothesis.settings.register_profile('debugger', report_multiple_bugs=False, deadline=None)
hypothesis.settings.load_profile(os.getenv('HYPOTHESIS_PROFILE', 'ci'))


@pytest.fixture
def argv(monkeypatch):
    '''Set the command line for ``main``.'''
    def _set(*args):
        monkeypatch.setattr('sys.argv', ['classify-global-integrals', *args])
    return _set
