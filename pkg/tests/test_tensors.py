import itertools
import os
import time

import numpy
import pytest

from ferminal.exceptions import NonUnitaryError
from ferminal.io import load_fcidump
from ferminal.linalg import basis_state, eigenspectrum, ground_state, to_sparse
from ferminal.models import fermi_hubbard
from ferminal.tensors import (
    BasisRotation,
    InteractionTensor,
    RDMTensor,
    active_space,
    is_antisymmetric_rdm,
    measurement_bound,
    rdm_energy,
    rdm_from_state,
    rotate_basis,
    single_determinant_energy,
    spin_orbitals,
    unique_two_body_indices,
)
from ferminal.transforms import fermion_to_tensor, tensor_to_fermion


@pytest.fixture
def dimer() -> InteractionTensor:
    hubbard = fermi_hubbard(2, 1, tunneling=1.0, coulomb=4.0, chemical_potential=0.25, periodic=False)
    return fermion_to_tensor(hubbard, n_modes=4)


def random_rotation(rng: numpy.random.Generator, n: int) -> BasisRotation:
    raw = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return BasisRotation.from_generator(0.5 * (raw - raw.conj().T))


def test_unique_two_body_indices() -> None:
    assert list(unique_two_body_indices(2)) == [
        (0, 0, 0, 0),
        (1, 0, 0, 0),
        (1, 0, 1, 0),
        (1, 1, 0, 0),
        (1, 1, 1, 0),
        (1, 1, 1, 1),
    ]
    m = 4 * 5 // 2
    assert len(list(unique_two_body_indices(4))) == m * (m + 1) // 2


def test_spin_orbitals() -> None:
    assert spin_orbitals([0, 2]) == [0, 1, 4, 5]


def test_tensor_arithmetic(dimer: InteractionTensor) -> None:
    assert dimer.is_hermitian()
    doubled = dimer + dimer
    assert doubled == 2 * dimer
    assert (dimer * 0).isclose(InteractionTensor.zero(4))
    with pytest.raises(ValueError):
        dimer + InteractionTensor.zero(2)
    with pytest.raises(ValueError):
        InteractionTensor(0.0, numpy.zeros((2, 3)), numpy.zeros((2, 2, 2, 2)))


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_rotation_keeps_spectrum(dimer: InteractionTensor, seed: int) -> None:
    rng = numpy.random.default_rng(seed)
    rotated = rotate_basis(dimer, random_rotation(rng, 4))
    assert rotated.is_hermitian(1e-9)
    numpy.testing.assert_allclose(
        eigenspectrum(to_sparse(tensor_to_fermion(rotated), 4)),
        eigenspectrum(to_sparse(tensor_to_fermion(dimer), 4)),
        atol=1e-9,
    )


def test_rotation_composes(dimer: InteractionTensor) -> None:
    rng = numpy.random.default_rng(7)
    first, second = random_rotation(rng, 4), random_rotation(rng, 4)
    combined = rotate_basis(dimer, second @ first)
    stepwise = rotate_basis(rotate_basis(dimer, first), second)
    assert combined.isclose(stepwise, 1e-10)


def test_rotation_checks(dimer: InteractionTensor) -> None:
    with pytest.raises(NonUnitaryError):
        rotate_basis(dimer, 2 * numpy.eye(4))
    with pytest.raises(ValueError):
        rotate_basis(dimer, numpy.eye(2))
    with pytest.raises(ValueError):
        BasisRotation.from_generator(numpy.eye(2))
    swap = numpy.array([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    swapped = rotate_basis(dimer, swap)
    assert swapped.one_body[1, 1] == dimer.one_body[0, 0]


def test_active_space(dimer: InteractionTensor) -> None:
    core, same = active_space(dimer, [], [0, 1])
    assert core == dimer.constant
    assert same.isclose(InteractionTensor(0.0, dimer.one_body, dimer.two_body))

    core, reduced = active_space(dimer, [0], [1])
    assert reduced.n_modes == 2
    assert core == pytest.approx(single_determinant_energy(dimer, spin_orbitals([0])))
    # frozen-core energy of the fully occupied determinant
    assert core + single_determinant_energy(reduced, [0, 1]) == pytest.approx(
        single_determinant_energy(dimer, [0, 1, 2, 3])
    )
    with pytest.raises(ValueError):
        active_space(dimer, [0], [0, 1])
    with pytest.raises(ValueError):
        active_space(dimer, [], [2])


def test_measurement_bound() -> None:
    tensor = InteractionTensor(0.0, numpy.diag([1.0, -2.0]), numpy.zeros((2, 2, 2, 2)))
    assert measurement_bound(tensor, 0.5) == pytest.approx(36.0)
    with pytest.raises(ValueError):
        measurement_bound(tensor, 0.0)


def test_determinant_rdm(dimer: InteractionTensor) -> None:
    rdm = rdm_from_state(basis_state([0, 3], 4), 4)
    assert rdm.particle_number() == pytest.approx(2.0)
    numpy.testing.assert_allclose(numpy.diag(rdm.one_rdm).real, [1.0, 0.0, 0.0, 1.0], atol=1e-12)
    assert is_antisymmetric_rdm(rdm)
    assert rdm_energy(rdm, dimer) == pytest.approx(single_determinant_energy(dimer, [0, 3]).real)


def test_ground_state_rdm(dimer: InteractionTensor) -> None:
    energy, state = ground_state(to_sparse(tensor_to_fermion(dimer), 4))
    rdm = rdm_from_state(state, 4)
    assert is_antisymmetric_rdm(rdm)
    assert rdm_energy(rdm, dimer) == pytest.approx(energy, abs=1e-8)


def test_rdm_shapes() -> None:
    with pytest.raises(ValueError):
        RDMTensor(numpy.zeros((2, 2)), numpy.zeros((3, 3, 3, 3)))
    with pytest.raises(ValueError):
        rdm_from_state(numpy.ones(3), 2)


def rotate_by_loops(tensor: InteractionTensor, u: numpy.ndarray) -> InteractionTensor:
    n = tensor.n_modes
    one_body = numpy.zeros((n, n), dtype=complex)
    for p, q, a, b in itertools.product(range(n), repeat=4):
        one_body[p, q] += u[p, a] * tensor.one_body[a, b] * u[q, b].conjugate()
    two_body = numpy.zeros((n,) * 4, dtype=complex)
    for p, q, r, s in itertools.product(range(n), repeat=4):
        total = 0j
        for a, b, c, d in itertools.product(range(n), repeat=4):
            total += u[p, a] * u[q, b] * u[r, c].conjugate() * u[s, d].conjugate() * tensor.two_body[a, b, c, d]
        two_body[p, q, r, s] = total
    return InteractionTensor(tensor.constant, one_body, two_body)


@pytest.mark.parametrize("seed", [0, 1])
def test_rotation_matches_loop_sum(seed: int) -> None:
    rng = numpy.random.default_rng(seed)
    tensor = InteractionTensor(
        complex(rng.normal()),
        rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)),
        rng.normal(size=(4,) * 4) + 1j * rng.normal(size=(4,) * 4),
    )
    u = random_rotation(rng, 4).matrix
    assert rotate_basis(tensor, u).isclose(rotate_by_loops(tensor, u), 1e-12)


def test_rotation_cost_grows_below_sixth_power() -> None:
    rng = numpy.random.default_rng(3)

    def best_time(n: int) -> float:
        tensor = InteractionTensor(0.0, rng.normal(size=(n, n)), rng.normal(size=(n,) * 4))
        rotation = random_rotation(rng, n)
        rotate_basis(tensor, rotation)
        times = []
        for _ in range(5):
            start = time.perf_counter()
            rotate_basis(tensor, rotation)
            times.append(time.perf_counter() - start)
        return min(times)

    assert best_time(16) / best_time(8) < 2**6 * 1.5


def test_h2_spectrum_survives_orbital_swap() -> None:
    h2 = load_fcidump(os.path.join(os.path.dirname(__file__), "samples", "h2_sto3g.FCIDUMP"))
    tensor = h2.to_interaction_tensor()
    # spatial orbitals 0 and 1 trade places in both spin sectors
    swap = numpy.eye(4)[[2, 3, 0, 1]]
    swapped = rotate_basis(tensor, swap)
    assert not swapped.isclose(tensor, 1e-6)
    numpy.testing.assert_allclose(
        eigenspectrum(to_sparse(tensor_to_fermion(swapped), 4)),
        eigenspectrum(to_sparse(tensor_to_fermion(tensor), 4)),
        atol=1e-9,
    )
