"""
Quadratic fermionic Hamiltonians

    H = sum_pq (M_pq - mu delta_pq) a_p^ a_q
        + 1/2 sum_pq (Delta_pq a_p^ a_q^ + Delta_pq^* a_q a_p) + constant

and their free-fermion form H = sum_j e_j b_j^ b_j + constant'.
"""

import logging
from dataclasses import dataclass
from typing import Any, Optional, Tuple

import numpy
import scipy.linalg
from numpy.typing import NDArray

from ferminal._util import is_antisymmetric_matrix, is_hermitian_matrix, max_abs
from ferminal.config import get_settings
from ferminal.exceptions import HermiticityError
from ferminal.ops import Action, FermionOperator

logger = logging.getLogger(__name__)

CONSERVING_TOLERANCE = 1e-12
OCCUPATION_THRESHOLD = -1e-12


class QuadraticHamiltonian:
    """
    Mean-field Hamiltonian with Hermitian part M, antisymmetric pairing
    part Delta, chemical potential mu and a real constant.
    """

    def __init__(
        self,
        hermitian_part: NDArray[Any],
        antisymmetric_part: Optional[NDArray[Any]] = None,
        chemical_potential: float = 0.0,
        constant: float = 0.0,
        tolerance: Optional[float] = None,
    ) -> None:
        """
        :param hermitian_part: N x N Hermitian matrix M
        :param antisymmetric_part: N x N antisymmetric matrix Delta, zero if omitted
        :param chemical_potential: mu
        :param constant: real energy offset
        :param tolerance: symmetry checks, defaults to ``hermiticity_tolerance``
        """
        if tolerance is None:
            tolerance = get_settings().hermiticity_tolerance
        self.hermitian_part: NDArray[numpy.complex128] = numpy.array(hermitian_part, dtype=complex)
        n = self.hermitian_part.shape[0]
        if antisymmetric_part is None:
            antisymmetric_part = numpy.zeros((n, n))
        self.antisymmetric_part: NDArray[numpy.complex128] = numpy.array(
            antisymmetric_part, dtype=complex
        )
        if not is_hermitian_matrix(self.hermitian_part, tolerance):
            raise HermiticityError("hermitian part is not Hermitian")
        if self.antisymmetric_part.shape != (n, n) or not is_antisymmetric_matrix(
            self.antisymmetric_part, tolerance
        ):
            raise HermiticityError("pairing part is not an antisymmetric %d x %d matrix" % (n, n))
        self.chemical_potential: float = float(chemical_potential)
        self.constant: float = float(constant)

    @property
    def n_modes(self) -> int:
        return int(self.hermitian_part.shape[0])

    @property
    def combined_hermitian_part(self) -> NDArray[numpy.complex128]:
        """
        M - mu I.
        """
        return self.hermitian_part - self.chemical_potential * numpy.eye(self.n_modes)

    @property
    def conserves_particle_number(self) -> bool:
        return max_abs(self.antisymmetric_part) <= CONSERVING_TOLERANCE

    def to_fermion_operator(self) -> FermionOperator:
        result = FermionOperator((), self.constant)
        k = self.combined_hermitian_part
        delta = self.antisymmetric_part
        for p in range(self.n_modes):
            for q in range(self.n_modes):
                if k[p, q] != 0:
                    result += FermionOperator(((p, Action.RAISE), (q, Action.LOWER)), k[p, q])
                if delta[p, q] != 0:
                    result += FermionOperator(
                        ((p, Action.RAISE), (q, Action.RAISE)), 0.5 * delta[p, q]
                    )
                    result += FermionOperator(
                        ((q, Action.LOWER), (p, Action.LOWER)), 0.5 * delta[p, q].conjugate()
                    )
        return result

    def majorana_form(self) -> Tuple[NDArray[numpy.float64], float]:
        """
        Real antisymmetric A and constant c with
        H = (i/4) sum_jk A_jk g_j g_k + c, where g_q = a_q + a_q^ and
        g_{N+q} = i (a_q^ - a_q).
        """
        n = self.n_modes
        k = self.combined_hermitian_part
        delta = self.antisymmetric_part
        matrix = numpy.zeros((2 * n, 2 * n))
        matrix[:n, :n] = numpy.imag(k + delta)
        matrix[n:, n:] = numpy.imag(k - delta)
        matrix[:n, n:] = numpy.real(k - delta)
        matrix[n:, :n] = -numpy.real(k + delta)
        return matrix, self.constant + 0.5 * float(numpy.real(numpy.trace(k)))

    def diagonalize(self) -> "DiagonalForm":
        return diagonalize(self)

    def orbital_energies(self) -> Tuple[NDArray[numpy.float64], float]:
        form = diagonalize(self)
        return form.orbital_energies, form.constant

    def ground_energy(self) -> float:
        return diagonalize(self).ground_energy()

    def __repr__(self) -> str:
        return "QuadraticHamiltonian(n_modes=%d, conserving=%s)" % (
            self.n_modes,
            self.conserves_particle_number,
        )


@dataclass
class DiagonalForm:
    """
    H = sum_j orbital_energies[j] b_j^ b_j + constant.
    """

    orbital_energies: NDArray[numpy.float64]
    constant: float
    transform: NDArray[numpy.complex128]
    """
    N x N matrix T with b_j = sum_q T_jq a_q when the Hamiltonian conserves
    particle number, otherwise the 2N x 2N matrix [[B, A], [A*, B*]] with
    b_j = sum_q B_jq a_q + A_jq a_q^.
    """

    @property
    def n_modes(self) -> int:
        return len(self.orbital_energies)

    @property
    def conserving(self) -> bool:
        return self.transform.shape[0] == self.n_modes

    def occupied(self) -> NDArray[numpy.int64]:
        """
        Free-fermion modes filled in the ground state.
        """
        return numpy.flatnonzero(self.orbital_energies < OCCUPATION_THRESHOLD)

    def ground_energy(self) -> float:
        return float(self.constant + self.orbital_energies[self.occupied()].sum())

    def annihilators(self) -> Tuple[NDArray[numpy.complex128], NDArray[numpy.complex128]]:
        """
        :return: (B, A) with b_j = sum_q B_jq a_q + A_jq a_q^
        """
        n = self.n_modes
        if self.conserving:
            return self.transform, numpy.zeros((n, n), dtype=complex)
        return self.transform[:n, :n], self.transform[:n, n:]

    def to_fermion_operator(self) -> FermionOperator:
        b_matrix, a_matrix = self.annihilators()
        result = FermionOperator((), self.constant)
        for j, energy in enumerate(self.orbital_energies):
            lowering = FermionOperator()
            for q in range(self.n_modes):
                if b_matrix[j, q] != 0:
                    lowering += FermionOperator(((q, Action.LOWER),), b_matrix[j, q])
                if a_matrix[j, q] != 0:
                    lowering += FermionOperator(((q, Action.RAISE),), a_matrix[j, q])
            result += energy * (lowering.hermitian_conjugate() * lowering)
        return result


def diagonalize(qh: QuadraticHamiltonian) -> DiagonalForm:
    """
    Bring a quadratic Hamiltonian into free-fermion form.

    Particle-conserving Hamiltonians are diagonalized as M - mu I, giving
    signed orbital energies. Otherwise the Majorana matrix is put into
    real Schur form; every 2 x 2 block yields one non-negative energy.
    """
    n = qh.n_modes
    if qh.conserves_particle_number:
        energies, vectors = scipy.linalg.eigh(qh.combined_hermitian_part)
        return DiagonalForm(
            numpy.asarray(energies, dtype=float), qh.constant, vectors.conj().T
        )

    matrix, constant = qh.majorana_form()
    schur, z = scipy.linalg.schur(matrix, output="real")
    rows = z.T
    pairs = []
    singles = []
    i = 0
    while i < 2 * n:
        if i + 1 < 2 * n and schur[i + 1, i] != 0:
            t = 0.5 * (schur[i, i + 1] - schur[i + 1, i])
            pairs.append((t, i, i + 1) if t >= 0 else (-t, i + 1, i))
            i += 2
        else:
            singles.append(i)
            i += 1
    for u, v in zip(singles[0::2], singles[1::2]):
        pairs.append((0.0, u, v))
    if len(pairs) != n:
        raise HermiticityError("majorana matrix did not split into %d blocks" % n)
    pairs.sort(key=lambda pair: pair[0])

    energies = numpy.array([pair[0] for pair in pairs])
    b_matrix = numpy.zeros((n, n), dtype=complex)
    a_matrix = numpy.zeros((n, n), dtype=complex)
    for j, (_, u, v) in enumerate(pairs):
        w = 0.5 * (rows[u] + 1j * rows[v])
        b_matrix[j] = w[:n] - 1j * w[n:]
        a_matrix[j] = w[:n] + 1j * w[n:]
    transform = numpy.block([[b_matrix, a_matrix], [a_matrix.conj(), b_matrix.conj()]])
    logger.debug("bogoliubov diagonalization of %d modes, energies %s", n, energies)
    return DiagonalForm(energies, constant - 0.5 * float(energies.sum()), transform)
