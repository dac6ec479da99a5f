"""Errors raised across specsim; each one knows its command exit code"""


class SpecsimError(ValueError):
    """Base class of every specsim error"""
    exit_code = 1


class ParseError(SpecsimError):
    """Input document could not be read"""
    exit_code = 2

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f'line {line}: {message}'
        super().__init__(message)


class DomainError(SpecsimError):
    """Argument outside the domain of an operation"""
    exit_code = 3


class DegenerateInputError(SpecsimError):
    """Input carries no usable probability mass"""
    exit_code = 3


class CoverageError(SpecsimError):
    """Query past the covered mass of a truncated spectrum"""
    exit_code = 3


class PreconditionError(SpecsimError):
    """Hypothesis of a construction does not hold"""
    exit_code = 3


class EnumerationLimitError(PreconditionError):
    """Brute-force enumeration refused above the configured cap"""

    def __init__(self, required, cap):
        self.required = required
        self.cap = cap
        super().__init__(
            f'enumeration needs {required} maps, cap is {cap}'
        )


class AlphabetMismatchError(SpecsimError):
    """Channel, coupling and input alphabets disagree"""
    exit_code = 4

    def __init__(self, message, row=None):
        self.row = row
        super().__init__(message)


class ExampleConstraintError(SpecsimError):
    """Example parameters violate the ordering the example requires"""
    exit_code = 5

    def __init__(self, constraint):
        self.constraint = constraint
        super().__init__(f'constraint violated: {constraint}')
