"""Exceptions raised by tuttekit.

Each exception carries the exit status the command line reports for it.
"""


class TuttekitError(Exception):
    exit_code = 1


class UsageError(TuttekitError):
    exit_code = 1


class ParseError(TuttekitError):
    """Malformed graph or matroid file.

    Args:
        message: What went wrong.
        line: 1-based line number of the offending line, if known.

    """
    exit_code = 2

    def __init__(self, message: str, line: int = None):
        self.line = line
        if line is not None:
            message = f'line {line}: {message}'
        super().__init__(message)


class InvalidParameters(TuttekitError):
    exit_code = 3


class InvalidBases(TuttekitError):
    """Base list that does not define a matroid.

    Args:
        message: What went wrong.
        certificate: The violating bases (and exchange element) if any.

    """
    exit_code = 3

    def __init__(self, message: str, certificate=None):
        self.certificate = certificate
        super().__init__(message)


class PreconditionError(TuttekitError):
    exit_code = 3


class ValidityRangeError(PreconditionError):
    pass


class NotApplicable(PreconditionError):
    pass


class VerificationFailure(TuttekitError):
    exit_code = 4


class SizeLimitError(TuttekitError):
    exit_code = 5
