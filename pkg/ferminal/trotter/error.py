"""
Leading-order error of the symmetric (second-order) Trotter step.

For H = sum_l H_l the step

    U(dt) = prod_{l=L..1} exp(-i H_l dt/2) prod_{l=1..L} exp(-i H_l dt/2)

evolves under H - dt^2 V + O(dt^4), where

    V = -1/12 sum_{a <= b} sum_{c < b} [H_a (1 - delta_ab / 2), [H_b, H_c]].
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Iterator, List, Optional

import numpy
import scipy.linalg
import scipy.sparse.linalg
from numpy.typing import NDArray

from ferminal.config import get_settings
from ferminal.exceptions import HermiticityError, SizeLimitError, UnsupportedVariantError
from ferminal.linalg import to_sparse
from ferminal.ops import (
    FermionOperator,
    TermOperator,
    Variant,
    commutator,
    is_hermitian,
    normal_order,
    term_sort_key,
)

logger = logging.getLogger(__name__)


@dataclass
class TermSequence:
    """
    Ordered Hermitian pieces H_1 ... H_L of a Hamiltonian.
    """

    terms: List[TermOperator]

    @classmethod
    def from_operator(cls, op: TermOperator) -> "TermSequence":
        """
        Split an operator into its terms, each paired with its adjoint term,
        ordered by the smaller normal-ordered key. The identity is dropped.

        :raises HermiticityError: a piece is not Hermitian
        """
        if op.variant not in (Variant.FERMION, Variant.QUBIT):
            raise UnsupportedVariantError("trotter sequences need fermion or qubit terms, got %s" % op.variant)
        if op.variant is Variant.FERMION:
            op = normal_order(op)
        remaining = dict(op.terms)
        remaining.pop((), None)
        pieces = []
        for key in sorted(remaining, key=term_sort_key):
            if key not in remaining:
                continue
            piece = op._from_terms({key: remaining.pop(key)})
            adjoint = piece.hermitian_conjugate()
            if op.variant is Variant.FERMION:
                adjoint = normal_order(adjoint)
            (adjoint_key,) = adjoint.terms
            if adjoint_key != key and adjoint_key in remaining:
                piece = piece + op._from_terms({adjoint_key: remaining.pop(adjoint_key)})
            if not is_hermitian(piece):
                raise HermiticityError("term %s has no Hermitian partner" % op.term_string(key))
            pieces.append(piece)
        return cls(pieces)

    @property
    def variant(self) -> Variant:
        return self.terms[0].variant if self.terms else Variant.FERMION

    def n_modes(self) -> int:
        return max((term.max_modes() for term in self.terms), default=0)

    def total(self) -> TermOperator:
        result = None
        for term in self.terms:
            result = term if result is None else result + term
        if result is None:
            raise ValueError("empty term sequence")
        return result

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[TermOperator]:
        return iter(self.terms)


def _error_slice(terms: List[TermOperator], beta: int) -> Optional[TermOperator]:
    # sum_{c < b} [H_b, H_c] = [H_b, sum_{c < b} H_c], and likewise for the outer sum
    earlier = terms[0]
    for term in terms[1:beta]:
        earlier = earlier + term
    inner = commutator(terms[beta], earlier)
    if not inner.terms:
        return None
    return commutator(earlier + 0.5 * terms[beta], inner)


def trotter_error_v1(
    sequence: TermSequence, workers: Optional[int] = None, tolerance: float = 1e-12
) -> TermOperator:
    """
    Leading Trotter error operator V of a fermionic term sequence.

    The outer sum over b is split across ``workers`` threads; slices are
    summed in order of b, so the result does not depend on the thread count.

    :param workers: defaults to the configured ``workers``
    :param tolerance: compression of the normal-ordered result
    """
    if sequence.terms and sequence.variant is not Variant.FERMION:
        raise UnsupportedVariantError("trotter error operators need fermion terms, got %s" % sequence.variant)
    if workers is None:
        workers = get_settings().workers
    terms = list(sequence.terms)
    betas = range(1, len(terms))
    if workers > 1 and len(terms) > 2:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            slices = list(executor.map(lambda beta: _error_slice(terms, beta), betas))
    else:
        slices = [_error_slice(terms, beta) for beta in betas]

    result = FermionOperator()
    for piece in slices:
        if piece is not None:
            result = result + piece
    result = normal_order(result * (-1.0 / 12.0)).compress(tolerance)
    logger.debug("trotter error operator of %d terms: %d terms", len(terms), len(result))
    return result


def trotter_error_bound(error: TermOperator) -> float:
    """
    Triangle-inequality bound on the norm of an error operator.
    """
    return float(sum(abs(value) for value in error.terms.values()))


def second_order_trotter_unitary(
    sequence: TermSequence,
    dt: float,
    n_modes: Optional[int] = None,
    limit: Optional[int] = None,
) -> NDArray[numpy.complex128]:
    """
    Dense matrix of one symmetric Trotter step,

        U = e_L ... e_2 e_1 e_1 e_2 ... e_L,  e_k = exp(-i dt H_k / 2)

    for the terms H_1 ... H_L of ``sequence`` in order. The first term sits
    at the centre and H_L is applied first and last. With this
    ordering ``effective_hamiltonian`` is H - dt**2 V + O(dt**4), V being
    ``trotter_error_v1`` of the same sequence.

    :param limit: largest mode count, defaults to ``trotter_mode_limit``
    """
    if limit is None:
        limit = get_settings().trotter_mode_limit
    if n_modes is None:
        n_modes = sequence.n_modes()
    if n_modes > limit:
        raise SizeLimitError("%d modes exceed the trotter limit of %d" % (n_modes, limit))
    half_steps = [
        scipy.sparse.linalg.expm(-0.5j * dt * to_sparse(term, n_modes).tocsc())
        for term in sequence.terms
    ]
    unitary = numpy.eye(1 << n_modes, dtype=complex)
    for step in half_steps[::-1]:
        unitary = step @ unitary
    for step in half_steps:
        unitary = step @ unitary
    return numpy.asarray(unitary)


def effective_hamiltonian(
    sequence: TermSequence, dt: float, n_modes: Optional[int] = None
) -> NDArray[Any]:
    """
    (i / dt) log U(dt) on the principal branch.
    """
    unitary = second_order_trotter_unitary(sequence, dt, n_modes)
    return 1j / dt * scipy.linalg.logm(unitary)
