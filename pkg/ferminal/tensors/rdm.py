"""
Reduced density matrices and energy contraction.
"""

import logging
from typing import Any

import numpy
from numpy.typing import NDArray

from ferminal._util import max_abs
from ferminal.exceptions import InconsistentResultError, NormalizationError
from ferminal.linalg import sparse
from .interaction import InteractionTensor

logger = logging.getLogger(__name__)


class RDMTensor:
    """
    One- and two-particle reduced density matrices,
    D1_pq = <a_p^ a_q> and D2_pqrs = <a_p^ a_q^ a_r a_s>.
    """

    def __init__(self, one_rdm: NDArray[Any], two_rdm: NDArray[Any]) -> None:
        self.one_rdm: NDArray[numpy.complex128] = numpy.array(one_rdm, dtype=complex)
        self.two_rdm: NDArray[numpy.complex128] = numpy.array(two_rdm, dtype=complex)
        n = self.one_rdm.shape[0]
        if self.one_rdm.shape != (n, n) or self.two_rdm.shape != (n, n, n, n):
            raise ValueError(
                "rdm shapes %s and %s do not match" % (self.one_rdm.shape, self.two_rdm.shape)
            )

    @property
    def n_modes(self) -> int:
        return int(self.one_rdm.shape[0])

    def particle_number(self) -> float:
        return float(numpy.trace(self.one_rdm).real)

    def __mul__(self, factor: complex) -> "RDMTensor":
        return RDMTensor(self.one_rdm * factor, self.two_rdm * factor)

    __rmul__ = __mul__


def rdm_from_state(state: NDArray[Any], n_modes: int, tolerance: float = 1e-10) -> RDMTensor:
    """
    Density matrices of a state vector in the Jordan-Wigner basis.

    :param state: normalized vector of length 2 ** n_modes
    """
    state = numpy.asarray(state, dtype=complex)
    if state.shape != (1 << n_modes,):
        raise ValueError("state of shape %s is not a %d-mode vector" % (state.shape, n_modes))
    norm = float(numpy.linalg.norm(state))
    if abs(norm - 1.0) > tolerance:
        raise NormalizationError("state norm is %r" % norm)
    lowering = sparse.lowering_matrices(n_modes)
    singles = numpy.array([a @ state for a in lowering])
    one_rdm = singles.conj() @ singles.T
    # pairs[r, s] = a_r a_s |state>
    pairs = numpy.array([[a_r @ single for single in singles] for a_r in lowering])
    flat = pairs.reshape(n_modes * n_modes, -1)
    # <a_q a_p state | a_r a_s state>
    overlaps = (flat.conj() @ flat.T).reshape(n_modes, n_modes, n_modes, n_modes)
    two_rdm = overlaps.transpose(1, 0, 2, 3)
    return RDMTensor(one_rdm, two_rdm)


def rdm_energy(rdm: RDMTensor, tensor: InteractionTensor, tolerance: float = 1e-9) -> float:
    """
    h0 + sum D1_pq h_pq + 1/2 sum D2_pqrs h_pqrs.

    :raise InconsistentResultError: when the imaginary part exceeds ``tolerance``
    """
    if rdm.n_modes != tensor.n_modes:
        raise ValueError("rdm over %d modes, tensor over %d" % (rdm.n_modes, tensor.n_modes))
    energy = (
        tensor.constant
        + numpy.sum(rdm.one_rdm * tensor.one_body)
        + 0.5 * numpy.sum(rdm.two_rdm * tensor.two_body)
    )
    if abs(energy.imag) > tolerance:
        raise InconsistentResultError("energy has imaginary part %g" % energy.imag)
    return float(energy.real)


def is_antisymmetric_rdm(rdm: RDMTensor, tolerance: float = 1e-10) -> bool:
    two = rdm.two_rdm
    return (
        max_abs(two + two.transpose(1, 0, 2, 3)) <= tolerance
        and max_abs(two + two.transpose(0, 1, 3, 2)) <= tolerance
    )
