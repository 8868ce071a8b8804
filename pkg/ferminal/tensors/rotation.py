"""
Single-particle basis rotations of interaction tensors.
"""

import logging
from typing import Any, Optional, Union

import numpy
import scipy.linalg
from numpy.typing import NDArray

from ferminal._util import is_unitary_matrix, max_abs
from ferminal.config import get_settings
from ferminal.exceptions import NonUnitaryError
from .interaction import InteractionTensor

logger = logging.getLogger(__name__)


class BasisRotation:
    """
    Unitary U acting on spin-orbitals, optionally generated as U = exp(-kappa).
    """

    def __init__(
        self,
        matrix: NDArray[Any],
        generator: Optional[NDArray[Any]] = None,
        tolerance: Optional[float] = None,
    ) -> None:
        if tolerance is None:
            tolerance = get_settings().unitarity_tolerance
        self.matrix: NDArray[numpy.complex128] = numpy.array(matrix, dtype=complex)
        self.generator: Optional[NDArray[numpy.complex128]] = (
            None if generator is None else numpy.array(generator, dtype=complex)
        )
        if not is_unitary_matrix(self.matrix, tolerance):
            raise NonUnitaryError("basis rotation is not unitary within %g" % tolerance)
        if self.generator is not None:
            if max_abs(scipy.linalg.expm(-self.generator) - self.matrix) > tolerance:
                raise NonUnitaryError("basis rotation does not match exp(-kappa)")

    @classmethod
    def from_generator(cls, kappa: NDArray[Any]) -> "BasisRotation":
        """
        :param kappa: anti-Hermitian generator
        """
        kappa = numpy.asarray(kappa, dtype=complex)
        if max_abs(kappa + kappa.conj().T) > 1e-10:
            raise ValueError("kappa must be anti-Hermitian")
        return cls(scipy.linalg.expm(-kappa), kappa)

    @property
    def n_modes(self) -> int:
        return int(self.matrix.shape[0])

    def __matmul__(self, other: "BasisRotation") -> "BasisRotation":
        return BasisRotation(self.matrix @ other.matrix)


def rotate_basis(
    tensor: InteractionTensor,
    rotation: Union[BasisRotation, NDArray[Any]],
    tolerance: Optional[float] = None,
) -> InteractionTensor:
    """
    Change the single-particle basis: h' = U h U^dagger on the one-body
    part, and on the two-body part U on the two creation indices and U*
    on the two annihilation indices. Four single-index contractions keep
    the cost at O(N^5).

    :param rotation: :class:`BasisRotation` or a unitary matrix
    :param tolerance: unitarity check, defaults to ``unitarity_tolerance``
    """
    if not isinstance(rotation, BasisRotation):
        rotation = BasisRotation(rotation, tolerance=tolerance)
    u = rotation.matrix
    if u.shape[0] != tensor.n_modes:
        raise ValueError(
            "rotation acts on %d modes, tensor has %d" % (u.shape[0], tensor.n_modes)
        )
    uc = u.conj()
    one_body = u @ tensor.one_body @ u.conj().T
    two_body = numpy.einsum("sd,abcd->abcs", uc, tensor.two_body)
    two_body = numpy.einsum("rc,abcs->abrs", uc, two_body)
    two_body = numpy.einsum("qb,abrs->aqrs", u, two_body)
    two_body = numpy.einsum("pa,aqrs->pqrs", u, two_body)
    logger.debug("rotated %d-mode tensor", tensor.n_modes)
    return InteractionTensor(tensor.constant, one_body, two_body)
