import os

import numpy
import pytest

from ferminal.exceptions import (
    HermiticityError,
    NonQuadraticError,
    UnsupportedVariantError,
    VariantMismatchError,
)
from ferminal.io import load_fcidump
from ferminal.linalg import eigenspectrum, to_sparse
from ferminal.models import JelliumBasis, PlaneWaveGrid, fermi_hubbard, jellium
from ferminal.ops import (
    BosonOperator,
    FermionOperator,
    QuadOperator,
    QubitOperator,
    normal_order,
)
from ferminal.transforms import (
    FenwickTree,
    boson_quad_convert,
    bravyi_kitaev,
    extract_quadratic,
    fermion_to_tensor,
    fourier_transform,
    get_boson_operator,
    get_quad_operator,
    inverse_fourier_transform,
    jordan_wigner,
    relabel_modes,
    tensor_to_fermion,
)

SEEDS = [0, 1, 2, 3, 4]


def random_hermitian(rng: numpy.random.Generator, n_modes: int, n_terms: int) -> FermionOperator:
    op = FermionOperator()
    for _ in range(n_terms):
        length = int(rng.integers(1, 5))
        factors = [(int(rng.integers(n_modes)), int(rng.integers(2))) for _ in range(length)]
        op += FermionOperator(factors, complex(rng.normal(), rng.normal()))
    return op + op.hermitian_conjugate()


def spectrum(op: QubitOperator, n_qubits: int) -> numpy.ndarray:
    return eigenspectrum(to_sparse(op, n_qubits))


def test_jordan_wigner_hopping() -> None:
    expected = (
        QubitOperator("X0 X1", 0.25)
        + QubitOperator("Y0 X1", 0.25j)
        + QubitOperator("X0 Y1", -0.25j)
        + QubitOperator("Y0 Y1", 0.25)
    )
    assert jordan_wigner(FermionOperator("1^ 0")) == expected


def test_jordan_wigner_number() -> None:
    assert jordan_wigner(FermionOperator("0^ 0")) == QubitOperator("", 0.5) + QubitOperator("Z0", -0.5)
    assert jordan_wigner(FermionOperator("", 3.0)) == QubitOperator("", 3.0)
    assert jordan_wigner(FermionOperator()) == QubitOperator()


def test_encodings_reject_other_variants() -> None:
    with pytest.raises(UnsupportedVariantError):
        jordan_wigner(QubitOperator("X0"))
    with pytest.raises(UnsupportedVariantError):
        bravyi_kitaev(BosonOperator("0^ 0"))
    with pytest.raises(ValueError):
        bravyi_kitaev(FermionOperator("3^ 0"), n_qubits=2)


def test_fenwick_sets() -> None:
    tree = FenwickTree(8)
    assert tree.update_set(0) == [1, 3, 7]
    assert tree.children_set(7) == [3, 5, 6]
    assert tree.remainder_set(5) == [3]
    assert tree.parity_set(5) == [3, 4]
    assert tree.parity_set(6) == [3, 5]
    assert tree.flip_set(3) == [1, 2]
    assert tree.update_set(7) == []
    with pytest.raises(ValueError):
        FenwickTree(0)


def test_bravyi_kitaev_single_mode() -> None:
    number = FermionOperator("0^ 0")
    assert bravyi_kitaev(number, 1) == jordan_wigner(number)


@pytest.mark.parametrize("n_modes", [3, 5, 6])
def test_bravyi_kitaev_anticommutation(n_modes: int) -> None:
    for p in range(n_modes):
        lower = bravyi_kitaev(FermionOperator(((p, 0),)), n_modes)
        for q in range(n_modes):
            raise_ = bravyi_kitaev(FermionOperator(((q, 1),)), n_modes)
            anticommutator = (lower * raise_ + raise_ * lower).compress(1e-12)
            assert anticommutator == (QubitOperator("") if p == q else QubitOperator())
            other = bravyi_kitaev(FermionOperator(((q, 0),)), n_modes)
            assert len((lower * other + other * lower).compress(1e-12)) == 0


def test_encodings_agree_on_hubbard() -> None:
    hubbard = fermi_hubbard(2, 1, tunneling=1.0, coulomb=4.0, periodic=False)
    expected = spectrum(jordan_wigner(hubbard), 4)
    numpy.testing.assert_allclose(spectrum(bravyi_kitaev(hubbard, 4), 4), expected, atol=1e-10)


def test_encodings_agree_on_h2() -> None:
    h2 = load_fcidump(os.path.join(os.path.dirname(__file__), "samples", "h2_sto3g.FCIDUMP"))
    hamiltonian = tensor_to_fermion(h2.to_interaction_tensor())
    expected = spectrum(jordan_wigner(hamiltonian), 4)
    numpy.testing.assert_allclose(spectrum(bravyi_kitaev(hamiltonian, 4), 4), expected, atol=1e-10)
    assert expected[0] == pytest.approx(-1.137252558771019, abs=1e-8)


@pytest.mark.parametrize("seed", SEEDS)
def test_encodings_agree_on_random_operators(seed: int) -> None:
    rng = numpy.random.default_rng(seed)
    op = random_hermitian(rng, 4, 6)
    numpy.testing.assert_allclose(
        spectrum(bravyi_kitaev(op, 4), 4), spectrum(jordan_wigner(op), 4), atol=1e-9
    )


@pytest.mark.parametrize(
    "dimensions, length, spinless",
    [(1, 3, True), (1, 2, True), (1, 2, False), (2, 2, True)],
)
def test_fourier_transform_of_jellium(dimensions: int, length: int, spinless: bool) -> None:
    grid = PlaneWaveGrid(dimensions=dimensions, length=length, scale=1.0)
    momentum = jellium(grid, basis=JelliumBasis.PLANE_WAVE, spinless=spinless)
    position = jellium(grid, basis=JelliumBasis.DUAL, spinless=spinless)
    transformed = fourier_transform(momentum, grid, spinless=spinless)
    assert len((transformed - normal_order(position)).compress(1e-8)) == 0


def test_fourier_round_trip() -> None:
    grid = PlaneWaveGrid(dimensions=1, length=3)
    op = FermionOperator("2^ 0", 0.5) + FermionOperator("0^ 2", 0.5) + FermionOperator("1^ 1")
    there = fourier_transform(op, grid, spinless=True)
    back = inverse_fourier_transform(there, grid, spinless=True)
    assert back.isclose(normal_order(op), 1e-10)
    with pytest.raises(UnsupportedVariantError):
        fourier_transform(QubitOperator("X0"), grid, spinless=True)


def test_boson_quad_conversion() -> None:
    assert get_quad_operator(BosonOperator("0"), hbar=2.0) == QuadOperator("q0", 0.5) + QuadOperator("p0", 0.5j)
    assert get_boson_operator(QuadOperator("q0"), hbar=2.0) == BosonOperator("0") + BosonOperator("0^")

    number = BosonOperator("0^ 0")
    back = get_boson_operator(get_quad_operator(number, hbar=1.5), hbar=1.5)
    assert normal_order(back).isclose(number, 1e-12)

    with pytest.raises(VariantMismatchError):
        boson_quad_convert(FermionOperator("0"), "boson->quad")
    with pytest.raises(ValueError):
        get_quad_operator(number, hbar=0.0)


def test_tensor_round_trip() -> None:
    hubbard = fermi_hubbard(2, 1, tunneling=1.0, coulomb=4.0, chemical_potential=0.5, periodic=False)
    tensor = fermion_to_tensor(hubbard, n_modes=4)
    assert tensor.n_modes == 4
    assert normal_order(tensor_to_fermion(tensor)).isclose(normal_order(hubbard), 1e-12)
    with pytest.raises(NonQuadraticError):
        fermion_to_tensor(FermionOperator("0"))


def test_extract_quadratic() -> None:
    op = (
        FermionOperator("0^ 0")
        + FermionOperator("0^ 1", 0.5)
        + FermionOperator("1^ 0", 0.5)
        + FermionOperator("1^ 0^", 0.3)
        + FermionOperator("1 0", -0.3)
        + FermionOperator("", 0.7)
    )
    qh = extract_quadratic(op)
    numpy.testing.assert_allclose(qh.hermitian_part, [[1.0, 0.5], [0.5, 0.0]])
    numpy.testing.assert_allclose(qh.antisymmetric_part, [[0.0, -0.3], [0.3, 0.0]])
    assert qh.constant == pytest.approx(0.7)
    assert not qh.conserves_particle_number
    assert normal_order(qh.to_fermion_operator()).isclose(normal_order(op), 1e-12)


def test_extract_quadratic_rejects() -> None:
    with pytest.raises(HermiticityError):
        extract_quadratic(FermionOperator("1^ 0"))
    with pytest.raises(HermiticityError):
        extract_quadratic(FermionOperator("1^ 0^"))
    quartic = FermionOperator("1^ 1 0^ 0") + FermionOperator("0^ 0")
    with pytest.raises(NonQuadraticError):
        extract_quadratic(quartic)
    qh = extract_quadratic(quartic, ignore_incompatible=True)
    numpy.testing.assert_allclose(qh.hermitian_part, [[1.0, 0.0], [0.0, 0.0]])


def test_relabel_modes() -> None:
    assert relabel_modes(FermionOperator("1^ 0"), [1, 0]) == FermionOperator("0^ 1")
    assert relabel_modes(QubitOperator("X0 Z1"), {0: 2}) == QubitOperator("Z1 X2")
    with pytest.raises(ValueError):
        relabel_modes(FermionOperator("1^ 0"), {0: 1})
