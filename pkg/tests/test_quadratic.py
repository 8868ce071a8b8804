import numpy
import pytest
import scipy.linalg

from ferminal.exceptions import HermiticityError, SizeLimitError
from ferminal.linalg import basis_state, eigenspectrum, expectation, ground_state, to_sparse
from ferminal.models import fermi_hubbard, mean_field_dwave
from ferminal.ops import FermionOperator, QubitOperator, normal_order
from ferminal.quadratic import (
    CircuitDescription,
    GivensRotation,
    ParticleHoleTransform,
    QuadraticHamiltonian,
    diagonalize,
    gaussian_circuit,
    jw_gaussian_ground,
    simulate_circuit,
)
from ferminal.transforms import extract_quadratic, relabel_modes

from .test_ops import SEEDS


@pytest.fixture
def chain() -> FermionOperator:
    return fermi_hubbard(3, 1, tunneling=1.0, coulomb=0.0, chemical_potential=0.5, periodic=False, spinless=True)


@pytest.fixture
def dwave() -> FermionOperator:
    return mean_field_dwave(2, 2, tunneling=2.0, sc_gap=2.0)


def lowest_eigenvalue(op: FermionOperator, n_modes: int) -> float:
    return float(eigenspectrum(to_sparse(op, n_modes), k=1)[0])


def test_single_mode_majorana_form() -> None:
    qh = QuadraticHamiltonian(numpy.array([[1.0]]))
    matrix, constant = qh.majorana_form()
    numpy.testing.assert_allclose(matrix, [[0.0, 1.0], [-1.0, 0.0]])
    assert constant == pytest.approx(0.5)
    assert qh.ground_energy() == pytest.approx(0.0)
    assert QuadraticHamiltonian(numpy.array([[1.0]]), chemical_potential=2.0).ground_energy() == pytest.approx(-1.0)


def test_hamiltonian_checks() -> None:
    with pytest.raises(HermiticityError):
        QuadraticHamiltonian(numpy.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(HermiticityError):
        QuadraticHamiltonian(numpy.eye(2), numpy.ones((2, 2)))


def test_conserving_chain(chain: FermionOperator) -> None:
    qh = extract_quadratic(chain)
    assert qh.conserves_particle_number
    form = diagonalize(qh)
    numpy.testing.assert_allclose(
        form.orbital_energies, [-numpy.sqrt(2.0) - 0.5, -0.5, numpy.sqrt(2.0) - 0.5], atol=1e-12
    )
    assert form.occupied().tolist() == [0, 1]
    assert normal_order(form.to_fermion_operator()).isclose(normal_order(chain), 1e-10)

    circuit = gaussian_circuit(qh, form)
    assert circuit.givens_count <= 3
    assert all(isinstance(op, GivensRotation) for op in circuit.operations)
    energy, state = jw_gaussian_ground(qh)
    assert energy == pytest.approx(lowest_eigenvalue(chain, 3), abs=1e-10)
    assert expectation(to_sparse(chain, 3), state).real == pytest.approx(energy, abs=1e-9)


def test_conserving_round_trip(chain: FermionOperator) -> None:
    qh = extract_quadratic(chain)
    again = extract_quadratic(qh.to_fermion_operator())
    numpy.testing.assert_allclose(again.hermitian_part, qh.combined_hermitian_part, atol=1e-14)
    assert again.constant == pytest.approx(qh.constant)


def test_dwave_ground_state(dwave: FermionOperator) -> None:
    qh = extract_quadratic(dwave, n_modes=8)
    assert not qh.conserves_particle_number
    form = diagonalize(qh)
    assert numpy.all(form.orbital_energies >= -1e-12)
    energy, state = jw_gaussian_ground(qh)
    assert energy == pytest.approx(lowest_eigenvalue(dwave, 8), abs=1e-8)
    assert numpy.linalg.norm(state) == pytest.approx(1.0)
    assert expectation(to_sparse(dwave, 8), state).real == pytest.approx(energy, abs=1e-8)


def test_dwave_circuit_shape(dwave: FermionOperator) -> None:
    circuit = gaussian_circuit(extract_quadratic(dwave, n_modes=8))
    assert circuit.start_orbitals == []
    assert sum(isinstance(op, ParticleHoleTransform) for op in circuit.operations) <= 8
    assert circuit.depth <= len(circuit.operations)
    assert CircuitDescription.from_json(circuit.to_json()) == circuit


def test_givens_rotation_moves_particle() -> None:
    rotation = GivensRotation(0, 1, numpy.pi / 2, 0.0)
    state = simulate_circuit(CircuitDescription([rotation], [0]), 2)
    numpy.testing.assert_allclose(state, basis_state([1], 2), atol=1e-12)
    with pytest.raises(ValueError):
        GivensRotation(0, 2, 0.1, 0.0)


def test_particle_hole_transform() -> None:
    assert ParticleHoleTransform(0).qubit_operator(3) == QubitOperator("X0 Z1 Z2")
    state = simulate_circuit(CircuitDescription([ParticleHoleTransform(2)], []), 3)
    numpy.testing.assert_allclose(state, basis_state([2], 3), atol=1e-12)


def test_layers() -> None:
    first = GivensRotation(0, 1, 0.1, 0.0)
    second = GivensRotation(2, 3, 0.2, 0.0)
    third = GivensRotation(1, 2, 0.3, 0.0)
    circuit = CircuitDescription([first, second, third], [0, 1])
    assert circuit.layers() == [[first, second], [third]]
    assert circuit.depth == 2
    assert circuit.givens_count == 3


def test_circuit_json() -> None:
    circuit = CircuitDescription([GivensRotation(1, 2, 0.25, -0.5), ParticleHoleTransform(0)], [2])
    data = circuit.to_json()
    assert data["operations"][0] == {"kind": "givens", "i": 1, "j": 2, "theta": 0.25, "phi": -0.5}
    assert CircuitDescription.from_json(data) == circuit
    with pytest.raises(ValueError):
        CircuitDescription.from_json({"operations": [{"kind": "swap"}], "start_orbitals": []})


def test_dense_limit(chain: FermionOperator) -> None:
    with pytest.raises(SizeLimitError):
        jw_gaussian_ground(extract_quadratic(chain), limit=2)


def test_dwave_circuit_prepares_exact_ground_state(dwave: FermionOperator) -> None:
    qh = extract_quadratic(dwave, n_modes=8)
    state = simulate_circuit(gaussian_circuit(qh), 8)
    energy, _ = jw_gaussian_ground(qh)
    matrix = to_sparse(dwave, 8)
    assert expectation(matrix, state).real == pytest.approx(energy, abs=1e-8)
    values, vectors = numpy.linalg.eigh(matrix.toarray())
    ground_space = vectors[:, values < values[0] + 1e-6]
    assert numpy.linalg.norm(ground_space.conj().T @ state) ** 2 >= 1 - 1e-8


def test_chain_circuit_overlaps_exact_ground_state(chain: FermionOperator) -> None:
    state = simulate_circuit(gaussian_circuit(extract_quadratic(chain)), 3)
    _, exact = ground_state(to_sparse(chain, 3))
    assert abs(numpy.vdot(exact, state)) ** 2 >= 1 - 1e-8


@pytest.mark.parametrize("seed", SEEDS)
def test_ground_energy_is_extensive(seed: int) -> None:
    rng = numpy.random.default_rng(seed)
    n = int(rng.integers(1, 5))
    raw = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    hermitian = raw + raw.conj().T
    pairing = rng.normal(size=(n, n)) if seed % 2 else numpy.zeros((n, n))
    pairing = pairing - pairing.T
    mu, constant = float(rng.normal()), float(rng.normal())
    qh = QuadraticHamiltonian(hermitian, pairing, chemical_potential=mu, constant=constant)
    doubled = QuadraticHamiltonian(
        scipy.linalg.block_diag(hermitian, hermitian),
        scipy.linalg.block_diag(pairing, pairing),
        chemical_potential=mu,
        constant=2 * constant,
    )
    assert doubled.ground_energy() - 2 * constant == pytest.approx(2 * (qh.ground_energy() - constant), abs=1e-9)


def test_disconnected_chains_add_up(chain: FermionOperator) -> None:
    pair = chain + relabel_modes(chain, [3, 4, 5])
    energy = extract_quadratic(pair, n_modes=6).ground_energy()
    assert energy == pytest.approx(2 * extract_quadratic(chain).ground_energy(), abs=1e-10)
    assert energy == pytest.approx(lowest_eigenvalue(pair, 6), abs=1e-9)
