"""
Preparation circuits for fermionic Gaussian states.

A circuit is a list of nearest-neighbour Givens rotations and
particle-hole transforms applied, in order, to a computational basis
state. The synthesis peels operations off the ground state one at a
time: if psi = T phi, then phi is the state annihilated (or created) by
the transformed operators T^dagger b T. Peeling stops at a basis state,
so the circuit is the recorded operations in reverse order.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy
import scipy.linalg
import scipy.sparse.linalg
from numpy.typing import NDArray

from ferminal.config import get_settings
from ferminal.exceptions import SizeLimitError
from ferminal.linalg import sparse
from ferminal.ops import Action, FermionOperator, PauliAxis, QubitOperator
from .hamiltonian import DiagonalForm, QuadraticHamiltonian, diagonalize

logger = logging.getLogger(__name__)

NEGLIGIBLE = 1e-14


@dataclass(frozen=True)
class GivensRotation:
    """
    exp(theta (e^{i phi} a_j^ a_i - e^{-i phi} a_i^ a_j)) on modes j = i + 1,
    mapping a_i^ to cos(theta) a_i^ + e^{i phi} sin(theta) a_j^.
    """

    i: int
    j: int
    theta: float
    phi: float

    def __post_init__(self) -> None:
        if self.j != self.i + 1 or self.i < 0:
            raise ValueError("givens rotations act on adjacent modes, got (%d, %d)" % (self.i, self.j))

    @property
    def modes(self) -> Tuple[int, ...]:
        return (self.i, self.j)

    def generator(self) -> FermionOperator:
        phase = numpy.exp(1j * self.phi)
        return FermionOperator(
            ((self.j, Action.RAISE), (self.i, Action.LOWER)), self.theta * phase
        ) - FermionOperator(((self.i, Action.RAISE), (self.j, Action.LOWER)), self.theta * phase.conjugate())

    def to_json(self) -> Dict[str, Any]:
        return {"kind": "givens", "i": self.i, "j": self.j, "theta": self.theta, "phi": self.phi}


@dataclass(frozen=True)
class ParticleHoleTransform:
    """
    X_mode Z_{mode+1} ... Z_{N-1} after Jordan-Wigner; exchanges a_mode and a_mode^.
    """

    mode: int

    @property
    def modes(self) -> Tuple[int, ...]:
        return (self.mode,)

    def qubit_operator(self, n_modes: int) -> QubitOperator:
        factors = [(self.mode, PauliAxis.X)] + [(q, PauliAxis.Z) for q in range(self.mode + 1, n_modes)]
        return QubitOperator(factors)

    def to_json(self) -> Dict[str, Any]:
        return {"kind": "particle_hole", "mode": self.mode}


CircuitOperation = Union[GivensRotation, ParticleHoleTransform]


@dataclass
class CircuitDescription:
    operations: List[CircuitOperation] = field(default_factory=list)
    """
    Operations in time order.
    """
    start_orbitals: List[int] = field(default_factory=list)
    """
    Modes occupied in the initial computational basis state.
    """

    @property
    def givens_count(self) -> int:
        return sum(1 for op in self.operations if isinstance(op, GivensRotation))

    def layers(self) -> List[List[CircuitOperation]]:
        """
        Group operations into layers acting on disjoint modes, each placed
        as early as the operations sharing its modes allow.
        """
        result: List[List[CircuitOperation]] = []
        depth: Dict[int, int] = {}
        for op in self.operations:
            layer = max((depth.get(mode, 0) for mode in op.modes), default=0)
            if layer == len(result):
                result.append([])
            result[layer].append(op)
            for mode in op.modes:
                depth[mode] = layer + 1
        return result

    @property
    def depth(self) -> int:
        return len(self.layers())

    def to_json(self) -> Dict[str, Any]:
        return {
            "operations": [op.to_json() for op in self.operations],
            "start_orbitals": list(self.start_orbitals),
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "CircuitDescription":
        operations: List[CircuitOperation] = []
        for entry in data["operations"]:
            if entry["kind"] == "givens":
                operations.append(
                    GivensRotation(int(entry["i"]), int(entry["j"]), float(entry["theta"]), float(entry["phi"]))
                )
            elif entry["kind"] == "particle_hole":
                operations.append(ParticleHoleTransform(int(entry["mode"])))
            else:
                raise ValueError("unknown circuit operation %r" % entry["kind"])
        return cls(operations, [int(mode) for mode in data["start_orbitals"]])


def _zeroing_rotation(x: complex, y: complex, mode: int) -> Tuple[GivensRotation, NDArray[Any]]:
    """
    Rotation whose column action g on (mode, mode + 1) sends the row [x, y]
    to [0, *].
    """
    theta = float(numpy.arctan2(abs(x), abs(y)))
    phi = 0.0 if y == 0 else float(numpy.angle(-x * numpy.conj(y)))
    c, s = numpy.cos(theta), numpy.sin(theta)
    g = numpy.array([[c, -numpy.exp(-1j * phi) * s], [numpy.exp(1j * phi) * s, c]])
    return GivensRotation(mode, mode + 1, theta, phi), g


def _slater_circuit(rows: NDArray[Any], n_modes: int) -> CircuitDescription:
    """
    :param rows: eta x N annihilation coefficients of the occupied orbitals
    """
    eta = rows.shape[0]
    magnitudes = numpy.abs(rows)
    if eta == 0 or numpy.all(numpy.isclose(magnitudes.max(axis=1), 1.0, atol=1e-12)):
        # every orbital is already a single mode
        return CircuitDescription([], sorted(int(q) for q in magnitudes.argmax(axis=1)))

    work = numpy.array(rows, dtype=complex)
    peeled: List[CircuitOperation] = []
    for j in range(eta):
        for c in range(n_modes - 1 - j):
            if abs(work[j, c]) < NEGLIGIBLE:
                continue
            rotation, g = _zeroing_rotation(work[j, c], work[j, c + 1], c)
            work[:, c : c + 2] = work[:, c : c + 2] @ g
            peeled.append(rotation)
    return CircuitDescription(peeled[::-1], list(range(n_modes - eta, n_modes)))


def _bogoliubov_circuit(b_matrix: NDArray[Any], a_matrix: NDArray[Any]) -> CircuitDescription:
    """
    Circuit preparing the common vacuum of b_j = sum_q B_jq a_q + A_jq a_q^
    from the empty state.
    """
    b_work = numpy.array(b_matrix, dtype=complex)
    a_work = numpy.array(a_matrix, dtype=complex)
    peeled: List[CircuitOperation] = []
    for m in range(b_work.shape[1], 0, -1):
        # a row combination with no creation part outside the last mode
        if m == 1:
            combination = numpy.ones(1, dtype=complex)
        else:
            combination = scipy.linalg.null_space(a_work[:, : m - 1].T)[:, 0]
        unitary = scipy.linalg.qr(numpy.column_stack([combination, numpy.eye(m)]))[0].T
        b_work = unitary @ b_work
        a_work = unitary @ a_work

        if abs(a_work[0, m - 1]) > abs(b_work[0, m - 1]):
            peeled.append(ParticleHoleTransform(m - 1))
            b_last = b_work[:, m - 1].copy()
            b_work[:, m - 1] = a_work[:, m - 1]
            a_work[:, m - 1] = b_last

        for q in range(m - 1):
            if abs(b_work[0, q]) < NEGLIGIBLE:
                continue
            rotation, g = _zeroing_rotation(b_work[0, q], b_work[0, q + 1], q)
            b_work[:, q : q + 2] = b_work[:, q : q + 2] @ g
            a_work[:, q : q + 2] = a_work[:, q : q + 2] @ g.conj()
            peeled.append(rotation)

        b_work = b_work[1:, : m - 1]
        a_work = a_work[1:, : m - 1]
    return CircuitDescription(peeled[::-1], [])


def gaussian_circuit(
    qh: QuadraticHamiltonian, form: Optional[DiagonalForm] = None
) -> CircuitDescription:
    """
    Circuit preparing the ground state of a quadratic Hamiltonian.

    Particle-conserving Hamiltonians give a Slater determinant built from
    the occupied orbitals with at most N(N-1)/2 Givens rotations; the
    general case starts from the vacuum and adds up to N particle-hole
    transforms.

    :param form: precomputed :func:`diagonalize` result
    """
    if form is None:
        form = diagonalize(qh)
    b_matrix, a_matrix = form.annihilators()
    if form.conserving:
        circuit = _slater_circuit(b_matrix[form.occupied()], qh.n_modes)
    else:
        circuit = _bogoliubov_circuit(b_matrix, a_matrix)
    logger.debug(
        "gaussian circuit on %d modes: %d operations, depth %d",
        qh.n_modes,
        len(circuit.operations),
        circuit.depth,
    )
    return circuit


def simulate_circuit(circuit: CircuitDescription, n_modes: int) -> NDArray[numpy.complex128]:
    """
    Apply the circuit to its start state in the Jordan-Wigner basis.
    """
    state = sparse.basis_state(circuit.start_orbitals, n_modes)
    for op in circuit.operations:
        if isinstance(op, GivensRotation):
            generator = sparse.to_sparse(op.generator(), n_modes).tocsc()
            state = scipy.sparse.linalg.expm_multiply(generator, state)
        else:
            state = sparse.to_sparse(op.qubit_operator(n_modes), n_modes) @ state
    return numpy.asarray(state, dtype=complex)


def jw_gaussian_ground(
    qh: QuadraticHamiltonian, limit: Optional[int] = None
) -> Tuple[float, NDArray[numpy.complex128]]:
    """
    Ground energy and Jordan-Wigner state vector of a quadratic Hamiltonian.

    :param limit: largest mode count, defaults to ``dense_mode_limit``
    """
    if limit is None:
        limit = get_settings().dense_mode_limit
    if qh.n_modes > limit:
        raise SizeLimitError("%d modes exceed the dense limit of %d" % (qh.n_modes, limit))
    form = diagonalize(qh)
    degenerate = numpy.abs(form.orbital_energies) <= 1e-12
    if numpy.any(degenerate):
        logger.warning("%d zero-energy orbitals, ground state is degenerate", int(degenerate.sum()))
    state = simulate_circuit(gaussian_circuit(qh, form), qh.n_modes)
    return form.ground_energy(), state / numpy.linalg.norm(state)
