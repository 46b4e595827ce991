# The error module
# Exceptions raised across the lab; cli maps them to exit codes


class LabError(Exception):
    '''Base of every error raised deliberately by the lab'''


class ValidationError(LabError, ValueError):
    '''Parameters or a file failed validation'''


class TowerMismatchError(LabError, ValueError):
    '''Operands belong to different field towers'''

    def __init__(self, msg='tower mismatch'):
        super().__init__(msg)


class ConstructionError(LabError):
    '''A code, torsion space or module could not be constructed'''


class NoPrimeFoundError(ConstructionError):
    pass


class InseparableError(ConstructionError):
    def __init__(self, msg='inseparable division polynomial'):
        super().__init__(msg)


class DirectSumError(ConstructionError):
    def __init__(self, msg='direct sum violated'):
        super().__init__(msg)


class MooreMatrixSingularError(LabError, ValueError):
    def __init__(self, msg='Moore matrix singular'):
        super().__init__(msg)


class InsufficientSurvivorsError(LabError):
    pass


class GuardExceededError(LabError):
    '''An exhaustive computation would exceed its guard'''
