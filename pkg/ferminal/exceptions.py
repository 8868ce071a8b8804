"""
Errors raised by :mod:`ferminal`.

Every concrete error also derives from the builtin it refines, so
code that already catches :class:`ValueError` or :class:`TypeError`
keeps working.
"""

from typing import Optional


class FerminalError(Exception):
    """
    Base class for every error raised on purpose by this package.
    """


class TermParseError(FerminalError, ValueError):
    """
    A term string has a token the grammar does not accept.
    """

    def __init__(self, message: str, offset: int) -> None:
        super().__init__("%s (at offset %d)" % (message, offset))
        self.offset: int = offset
        """
        Character offset of the offending token within the term string.
        """


class InvalidTermError(FerminalError, ValueError):
    """
    A term is well-formed text but not a valid operator, e.g. a
    repeated qubit in a Pauli string or a negative mode index.
    """


class VariantMismatchError(FerminalError, TypeError):
    """
    Arithmetic between operators of different variants.
    """


class UnsupportedVariantError(FerminalError, TypeError):
    """
    The operation is not defined for this operator variant.
    """


class NonQuadraticError(FerminalError, ValueError):
    """
    An operator holds terms beyond quadratic order.
    """


class HermiticityError(FerminalError, ValueError):
    """
    A matrix or operator that must be Hermitian is not.
    """


class NonUnitaryError(FerminalError, ValueError):
    """
    A basis rotation is not unitary within tolerance.
    """


class NormalizationError(FerminalError, ValueError):
    """
    A state vector does not have unit norm.
    """


class InconsistentResultError(FerminalError, ValueError):
    """
    A computed quantity violates a property it must have,
    e.g. a complex energy.
    """


class SizeLimitError(FerminalError, ValueError):
    """
    The request exceeds a configured dense or sparse size limit.
    """


class SchemaError(FerminalError, ValueError):
    """
    A JSON document does not follow the expected layout.
    """

    def __init__(self, path: str, message: str) -> None:
        super().__init__("%s: %s" % (path, message))
        self.path: str = path
        """
        Dotted path of the offending field, e.g. ``integrals.two_body``.
        """


class VersionMismatchError(FerminalError, ValueError):
    """
    An archive was written by an incompatible format version.
    """


class FcidumpError(FerminalError, ValueError):
    """
    An FCIDUMP file is malformed or inconsistent.
    """

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line: Optional[int] = line
        """
        1-based line number, when the problem is tied to one.
        """
