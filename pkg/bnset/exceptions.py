class BnsetException(Exception):
    """BnsetException"""


class ConfigurationError(BnsetException):
    """ConfigurationError"""


class TupleFormatError(BnsetException):
    """TupleFormatError"""


class RelationFormatError(BnsetException):
    """RelationFormatError"""


class ArityMismatchError(BnsetException):
    """ArityMismatchError"""


class DomainError(BnsetException):
    """DomainError"""


class ZeroDivisorError(BnsetException):
    """ZeroDivisorError"""


class WitnessError(BnsetException):
    """WitnessError"""


class MissingVariableError(BnsetException):
    """MissingVariableError"""


class EquationError(BnsetException):
    """EquationError"""


class UnknownEmitterError(BnsetException):
    """UnknownEmitterError"""


class ExpressionFormatError(BnsetException):
    """ExpressionFormatError"""


class InputEncodingError(BnsetException):
    """InputEncodingError"""
