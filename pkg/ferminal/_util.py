"""
This is for internal use; shared helpers that do not belong
to any one subpackage.
"""

from enum import Enum
from typing import Any, cast

import numpy
from numpy.typing import NDArray


class EnumShowNameOnly(Enum):
    """
    Just an Enum, except its string repr is
    just the enum's name
    """

    def __repr__(self) -> str:
        return self.name

    def __str__(self) -> str:
        return self.__repr__()


class EnumValueEquals(Enum):
    """
    Enum that can be compared to its raw value. Hashes like
    the raw value too, so a member and its value find the same
    dictionary slot.
    """

    def __eq__(self, other: Any) -> bool:
        return cast(bool, self.value == other)

    def __hash__(self) -> int:
        return hash(self.value)


def format_float(value: float) -> str:
    """
    Shortest decimal text that reads back as the same double.

    :param value: any real number
    """
    return repr(float(value))


def format_complex(value: complex) -> str:
    """
    Parenthesized complex literal accepted by :func:`complex`.

    :param value: any number
    """
    return repr(complex(value))


def max_abs(matrix: NDArray[Any]) -> float:
    """
    Largest entry magnitude, 0 for empty arrays.
    """
    if matrix.size == 0:
        return 0.0
    return float(numpy.max(numpy.abs(matrix)))


def is_hermitian_matrix(matrix: NDArray[Any], tolerance: float) -> bool:
    """
    :param matrix: square array
    :param tolerance: largest allowed entry of M - M^dagger
    """
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    return max_abs(matrix - matrix.conj().T) <= tolerance


def is_antisymmetric_matrix(matrix: NDArray[Any], tolerance: float) -> bool:
    """
    :param matrix: square array
    :param tolerance: largest allowed entry of M + M^T
    """
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    return max_abs(matrix + matrix.T) <= tolerance


def is_unitary_matrix(matrix: NDArray[Any], tolerance: float) -> bool:
    """
    :param matrix: square array
    :param tolerance: largest allowed entry of U^dagger U - I
    """
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    identity = numpy.eye(matrix.shape[0])
    return max_abs(matrix.conj().T @ matrix - identity) <= tolerance
