# encoding: utf-8

'''🧮 Global Integrals: errors.'''


class IntegralsError(Exception):
    '''Base class for errors raised on purpose by this package.'''
    pass


class DomainError(IntegralsError, ValueError):
    '''An argument falls outside the domain of an operation.'''
    pass


class LabelLookupError(IntegralsError, LookupError):
    '''An orbit label or family name is not known.'''
    pass


class OpenRegimeError(DomainError):
    '''The unconstrained m ≥ 4, k = 1 regime was requested without opting in.'''
    pass


class InconsistentDescriptorError(DomainError):
    '''An Eisenstein descriptor cannot arise from any inducing datum of its slot.'''
    pass


class FixtureError(IntegralsError):
    '''A packaged fixture contradicts itself.'''
    pass
