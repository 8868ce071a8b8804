"""
Sparse matrices of qubit and fermion operators, and the small-scale
numerics run on them.

Basis convention: qubit 0 is the most significant bit of the
computational basis index, and |0> is the empty mode.
"""

import logging
from functools import lru_cache
from typing import Any, List, Optional, Sequence, Tuple, Union

import numpy
import scipy.linalg
import scipy.sparse
import scipy.sparse.linalg
from numpy.typing import NDArray

from ferminal.config import get_settings
from ferminal.exceptions import (
    HermiticityError,
    NormalizationError,
    SizeLimitError,
    UnsupportedVariantError,
)
from ferminal.ops import Action, FermionOperator, PauliAxis, TermKey, TermOperator, Variant
from ferminal.transforms.encodings import jordan_wigner

logger = logging.getLogger(__name__)

Matrix = Union[scipy.sparse.spmatrix, NDArray[Any]]


def _pauli_action(term: TermKey, n_qubits: int) -> Tuple[NDArray[Any], NDArray[Any]]:
    """
    A Pauli string maps |i> to phase(i) |i ^ flip>.

    :return: (row of each column, phase of each column)
    """
    index = numpy.arange(1 << n_qubits, dtype=numpy.int64)
    phase = numpy.ones(1 << n_qubits, dtype=complex)
    flip = 0
    n_y = 0
    for qubit, axis in term:
        bit = 1 << (n_qubits - 1 - qubit)
        occupied = (index & bit) != 0
        if axis is PauliAxis.X:
            flip |= bit
            continue
        if axis is PauliAxis.Y:
            flip |= bit
            n_y += 1
        phase[occupied] *= -1
    return index ^ flip, phase * (1j**n_y)


def _check_size(n_qubits: int, limit: Optional[int]) -> None:
    if limit is None:
        limit = get_settings().sparse_qubit_limit
    if n_qubits > limit:
        raise SizeLimitError("%d qubits exceed the sparse limit of %d" % (n_qubits, limit))


def to_sparse(
    op: TermOperator, n_qubits: Optional[int] = None, limit: Optional[int] = None
) -> scipy.sparse.csr_matrix:
    """
    Matrix of a qubit operator, or of a fermion operator after the
    Jordan-Wigner transform.

    :param op: qubit or fermion operator
    :param n_qubits: defaults to the number of qubits ``op`` touches
    :param limit: largest allowed qubit count, defaults to ``sparse_qubit_limit``
    :return: 2^n x 2^n CSR matrix
    """
    if op.variant is Variant.FERMION:
        op = jordan_wigner(op)
    elif op.variant is not Variant.QUBIT:
        raise UnsupportedVariantError("%s operators have no finite matrix" % op.variant)
    needed = op.max_modes()
    if n_qubits is None:
        n_qubits = needed
    if n_qubits < needed:
        raise ValueError("operator acts on %d qubits, asked for %d" % (needed, n_qubits))
    _check_size(n_qubits, limit)

    dim = 1 << n_qubits
    rows: List[NDArray[Any]] = []
    values: List[NDArray[Any]] = []
    for term, coefficient in op.items():
        row, phase = _pauli_action(term, n_qubits)
        rows.append(row)
        values.append(coefficient * phase)
    if not rows:
        return scipy.sparse.csr_matrix((dim, dim), dtype=complex)
    columns = numpy.tile(numpy.arange(dim, dtype=numpy.int64), len(rows))
    matrix = scipy.sparse.coo_matrix(
        (numpy.concatenate(values), (numpy.concatenate(rows), columns)),
        shape=(dim, dim),
    ).tocsr()
    matrix.eliminate_zeros()
    logger.debug("sparse matrix on %d qubits: %d terms, %d nonzeros", n_qubits, len(op), matrix.nnz)
    return matrix


@lru_cache(maxsize=32)
def _lowering_matrices(n_modes: int) -> Tuple[scipy.sparse.csr_matrix, ...]:
    return tuple(
        to_sparse(FermionOperator(((p, Action.LOWER),)), n_modes) for p in range(n_modes)
    )


def lowering_matrices(n_modes: int) -> List[scipy.sparse.csr_matrix]:
    """
    Jordan-Wigner matrices of a_0 ... a_{n-1}.
    """
    return list(_lowering_matrices(n_modes))


def n_qubits_of(matrix: Matrix) -> int:
    dim = matrix.shape[0]
    if matrix.shape != (dim, dim) or dim < 1 or dim & (dim - 1):
        raise ValueError("matrix dimension %s is not a power of two" % (matrix.shape,))
    return int(dim).bit_length() - 1


def is_hermitian(matrix: Matrix, tolerance: Optional[float] = None) -> bool:
    if tolerance is None:
        tolerance = get_settings().hermiticity_tolerance
    difference = matrix - matrix.conj().T
    if scipy.sparse.issparse(difference):
        if difference.nnz == 0:
            return True
        return bool(abs(difference).max() <= tolerance)
    return bool(difference.size == 0 or numpy.max(numpy.abs(difference)) <= tolerance)


def eigenspectrum(matrix: Matrix, k: Optional[int] = None, return_vectors: bool = False) -> Any:
    """
    Ascending eigenvalues of a Hermitian matrix.

    Up to ``dense_eigen_crossover`` qubits the matrix is diagonalized
    densely; above that only the lowest ``k`` eigenpairs are computed
    iteratively.

    :param k: number of lowest eigenvalues, all when None
    :param return_vectors: also return eigenvectors as columns
    """
    settings = get_settings()
    if not is_hermitian(matrix, settings.hermiticity_tolerance):
        raise HermiticityError("matrix is not Hermitian")
    dim = matrix.shape[0]
    if k is not None and not 1 <= k <= dim:
        raise ValueError("k must be between 1 and %d, got %d" % (dim, k))
    n = n_qubits_of(matrix)
    if n <= settings.dense_eigen_crossover:
        dense = matrix.toarray() if scipy.sparse.issparse(matrix) else numpy.asarray(matrix)
        values, vectors = scipy.linalg.eigh(dense)
        if k is not None:
            values, vectors = values[:k], vectors[:, :k]
    else:
        if k is None or k >= dim - 1:
            raise SizeLimitError(
                "%d qubits is above the dense crossover; ask for the lowest k eigenvalues" % n
            )
        values, vectors = scipy.sparse.linalg.eigsh(
            scipy.sparse.csr_matrix(matrix), k=k, which="SA"
        )
        order = numpy.argsort(values)
        values, vectors = values[order], vectors[:, order]
        logger.debug("iterative eigensolve on %d qubits for %d eigenvalues", n, k)
    if return_vectors:
        return values, vectors
    return values


def ground_state(matrix: Matrix) -> Tuple[float, NDArray[numpy.complex128]]:
    """
    :return: (lowest eigenvalue, normalized eigenvector)
    """
    values, vectors = eigenspectrum(matrix, k=1, return_vectors=True)
    return float(values[0]), numpy.asarray(vectors[:, 0], dtype=complex)


def expectation(matrix: Matrix, state: NDArray[Any], tolerance: float = 1e-10) -> complex:
    """
    <state| matrix |state> for a normalized state.
    """
    state = numpy.asarray(state)
    if state.shape != (matrix.shape[0],):
        raise ValueError(
            "state of shape %s does not match a %s matrix" % (state.shape, matrix.shape)
        )
    if abs(numpy.linalg.norm(state) - 1.0) > tolerance:
        raise NormalizationError("state norm is %r" % float(numpy.linalg.norm(state)))
    return complex(numpy.vdot(state, matrix @ state))


def basis_state(occupied: Sequence[int], n_modes: int) -> NDArray[numpy.complex128]:
    """
    Computational basis vector with the given modes occupied.
    """
    index = 0
    for mode in occupied:
        if not 0 <= mode < n_modes:
            raise ValueError("mode %d is outside %d modes" % (mode, n_modes))
        index |= 1 << (n_modes - 1 - mode)
    state = numpy.zeros(1 << n_modes, dtype=complex)
    state[index] = 1.0
    return state


def particle_number_indices(n_modes: int, n_particles: int) -> NDArray[numpy.int64]:
    """
    Basis indices holding exactly ``n_particles`` occupied modes.
    """
    index = numpy.arange(1 << n_modes, dtype=numpy.int64)
    counts = numpy.zeros_like(index)
    for q in range(n_modes):
        counts += (index >> q) & 1
    return index[counts == n_particles]


def restrict_to_particle_number(
    matrix: Matrix, n_modes: int, n_particles: int
) -> scipy.sparse.csr_matrix:
    """
    Block of a number-conserving matrix in one particle-number sector.
    """
    keep = particle_number_indices(n_modes, n_particles)
    return scipy.sparse.csr_matrix(matrix)[keep][:, keep]
