"""
Dense storage of two-body fermionic Hamiltonians,

    H = h0 + sum_pq h_pq a_p^ a_q + 1/2 sum_pqrs h_pqrs a_p^ a_q^ a_r a_s,

over spin-orbitals with alpha on even and beta on odd indices.
"""

import logging
from typing import Any, Iterator, List, Optional, Sequence, Tuple

import numpy
from numpy.typing import NDArray

from ferminal._util import is_hermitian_matrix, max_abs

logger = logging.getLogger(__name__)


class InteractionTensor:
    """
    Constant, one-body and two-body coefficients of a fermionic Hamiltonian.
    The arrays are copied on construction and should be treated as read-only.
    """

    def __init__(
        self,
        constant: complex,
        one_body: NDArray[Any],
        two_body: NDArray[Any],
    ) -> None:
        """
        :param constant: h0
        :param one_body: N x N array h_pq
        :param two_body: N x N x N x N array h_pqrs
        """
        one_body = numpy.array(one_body, dtype=complex)
        two_body = numpy.array(two_body, dtype=complex)
        n = one_body.shape[0] if one_body.ndim == 2 else -1
        if one_body.shape != (n, n):
            raise ValueError("one_body must be square, got shape %s" % (one_body.shape,))
        if two_body.shape != (n, n, n, n):
            raise ValueError(
                "two_body must have shape %s, got %s" % ((n, n, n, n), two_body.shape)
            )
        self.constant: complex = complex(constant)
        """
        Identity coefficient h0.
        """
        self.one_body: NDArray[numpy.complex128] = one_body
        self.two_body: NDArray[numpy.complex128] = two_body
        """
        Coefficient of a_p^ a_q^ a_r a_s, times two.
        """

    @property
    def n_modes(self) -> int:
        return int(self.one_body.shape[0])

    @classmethod
    def zero(cls, n_modes: int) -> "InteractionTensor":
        return cls(
            0.0,
            numpy.zeros((n_modes, n_modes)),
            numpy.zeros((n_modes,) * 4),
        )

    @classmethod
    def from_spatial(
        cls,
        constant: complex,
        one_body: NDArray[Any],
        two_body: NDArray[Any],
    ) -> "InteractionTensor":
        """
        Spin-expand spatial-orbital integrals. ``two_body`` is in the same
        physicist order as the spin-orbital tensor: h_pqrs = (ps|qr).

        :return: tensor over 2 x norb spin-orbitals
        """
        one_body = numpy.asarray(one_body, dtype=complex)
        two_body = numpy.asarray(two_body, dtype=complex)
        norb = one_body.shape[0]
        n = 2 * norb
        h1 = numpy.zeros((n, n), dtype=complex)
        h2 = numpy.zeros((n, n, n, n), dtype=complex)
        for spin in (0, 1):
            h1[spin::2, spin::2] = one_body
        for outer in (0, 1):
            for inner in (0, 1):
                h2[outer::2, inner::2, inner::2, outer::2] = two_body
        return cls(constant, h1, h2)

    def is_hermitian(self, tolerance: float = 1e-10) -> bool:
        if not is_hermitian_matrix(self.one_body, tolerance):
            return False
        adjoint = self.two_body.transpose(3, 2, 1, 0).conj()
        return abs(self.constant.imag) <= tolerance and max_abs(self.two_body - adjoint) <= tolerance

    def isclose(self, other: "InteractionTensor", tolerance: float = 1e-12) -> bool:
        if self.n_modes != other.n_modes:
            return False
        return (
            abs(self.constant - other.constant) <= tolerance
            and max_abs(self.one_body - other.one_body) <= tolerance
            and max_abs(self.two_body - other.two_body) <= tolerance
        )

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, InteractionTensor):
            return NotImplemented
        return self.isclose(other, 0.0)

    def __add__(self, other: "InteractionTensor") -> "InteractionTensor":
        if self.n_modes != other.n_modes:
            raise ValueError("cannot add tensors over %d and %d modes" % (self.n_modes, other.n_modes))
        return InteractionTensor(
            self.constant + other.constant,
            self.one_body + other.one_body,
            self.two_body + other.two_body,
        )

    def __mul__(self, factor: complex) -> "InteractionTensor":
        return InteractionTensor(
            self.constant * factor, self.one_body * factor, self.two_body * factor
        )

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return "InteractionTensor(n_modes=%d, constant=%r)" % (self.n_modes, self.constant)


def unique_two_body_indices(n: int) -> Iterator[Tuple[int, int, int, int]]:
    """
    Chemist-order quadruples (i, j, k, l) unique under the eight-fold
    symmetry of real integrals: i >= j, k >= l and ij >= kl.
    """
    for i in range(n):
        for j in range(i + 1):
            ij = i * (i + 1) // 2 + j
            for k in range(n):
                for l in range(k + 1):
                    if ij >= k * (k + 1) // 2 + l:
                        yield i, j, k, l


def spin_orbitals(spatial: Sequence[int]) -> List[int]:
    return [2 * i + spin for i in spatial for spin in (0, 1)]


def active_space(
    tensor: InteractionTensor,
    occupied: Sequence[int],
    active: Sequence[int],
) -> Tuple[complex, InteractionTensor]:
    """
    Freeze doubly occupied spatial orbitals and drop the ones that are
    neither occupied nor active.

    :param tensor: spin-orbital Hamiltonian
    :param occupied: spatial orbitals kept doubly occupied
    :param active: spatial orbitals that stay in the problem
    :return: (core constant including h0, tensor over the active
        spin-orbitals with zero constant)
    """
    norb = tensor.n_modes // 2
    for index in list(occupied) + list(active):
        if not 0 <= index < norb:
            raise ValueError("orbital %d is out of range for %d spatial orbitals" % (index, norb))
    overlap = set(occupied) & set(active)
    if overlap:
        raise ValueError("orbitals %s are both occupied and active" % sorted(overlap))

    occ = spin_orbitals(occupied)
    act = spin_orbitals(active)
    h1 = tensor.one_body
    h2 = tensor.two_body
    ix = numpy.ix_

    core = tensor.constant
    one_body = numpy.array(h1[ix(act, act)])
    if occ:
        block = h2[ix(occ, occ, occ, occ)]
        core += numpy.trace(h1[ix(occ, occ)])
        core += 0.5 * (numpy.einsum("ijji->", block) - numpy.einsum("ijij->", block))
        if act:
            one_body += 0.5 * (
                numpy.einsum("ipqi->pq", h2[ix(occ, act, act, occ)])
                + numpy.einsum("piiq->pq", h2[ix(act, occ, occ, act)])
                - numpy.einsum("ipiq->pq", h2[ix(occ, act, occ, act)])
                - numpy.einsum("piqi->pq", h2[ix(act, occ, act, occ)])
            )
    two_body = h2[ix(act, act, act, act)]
    logger.debug(
        "active space: %d frozen and %d active spin-orbitals of %d",
        len(occ),
        len(act),
        tensor.n_modes,
    )
    return complex(core), InteractionTensor(0.0, one_body, two_body)


def measurement_bound(tensor: InteractionTensor, epsilon: float) -> float:
    """
    Estimate of the number of measurements needed to reach precision
    ``epsilon``: ((sum |h_pq| + 1/2 sum |h_pqrs|) / epsilon) ** 2.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive, got %r" % epsilon)
    weight = numpy.abs(tensor.one_body).sum() + 0.5 * numpy.abs(tensor.two_body).sum()
    return float((weight / epsilon) ** 2)


def single_determinant_energy(
    tensor: InteractionTensor, occupied: Optional[Sequence[int]] = None
) -> complex:
    """
    Energy of the Slater determinant filling the given spin-orbitals
    (all of them by default).
    """
    occ = list(range(tensor.n_modes)) if occupied is None else list(occupied)
    ix = numpy.ix_
    block = tensor.two_body[ix(occ, occ, occ, occ)]
    return complex(
        tensor.constant
        + numpy.trace(tensor.one_body[ix(occ, occ)])
        + 0.5 * (numpy.einsum("ijji->", block) - numpy.einsum("ijij->", block))
    )
