from typing import List

import numpy
import pytest

from ferminal.exceptions import (
    InvalidTermError,
    TermParseError,
    UnsupportedVariantError,
    VariantMismatchError,
)
from ferminal.ops import (
    Action,
    BosonOperator,
    FermionOperator,
    PauliAxis,
    QuadOperator,
    QubitOperator,
    commutator,
    count_modes,
    is_hermitian,
    is_normal_ordered,
    normal_order,
    number_operator,
    parse,
)

SEEDS = list(range(200))


def random_fermion_operator(rng: numpy.random.Generator, n_modes: int, n_terms: int) -> FermionOperator:
    op = FermionOperator()
    for _ in range(n_terms):
        length = int(rng.integers(0, 5))
        factors = [(int(rng.integers(n_modes)), int(rng.integers(2))) for _ in range(length)]
        op += FermionOperator(factors, complex(rng.normal(), rng.normal()))
    return op


def random_boson_operator(rng: numpy.random.Generator, n_modes: int, n_terms: int) -> BosonOperator:
    op = BosonOperator()
    for _ in range(n_terms):
        length = int(rng.integers(0, 5))
        factors = [(int(rng.integers(n_modes)), int(rng.integers(2))) for _ in range(length)]
        op += BosonOperator(factors, complex(rng.normal(), rng.normal()))
    return op


def random_qubit_operator(rng: numpy.random.Generator, n_qubits: int, n_terms: int) -> QubitOperator:
    op = QubitOperator()
    for _ in range(n_terms):
        factors = [(qubit, "XYZ"[int(rng.integers(3))]) for qubit in range(n_qubits) if rng.random() < 0.6]
        op += QubitOperator(factors, complex(rng.normal(), rng.normal()))
    return op


def random_quad_operator(rng: numpy.random.Generator, n_modes: int, n_terms: int) -> QuadOperator:
    op = QuadOperator()
    for _ in range(n_terms):
        length = int(rng.integers(0, 4))
        factors = [(int(rng.integers(n_modes)), "qp"[int(rng.integers(2))]) for _ in range(length)]
        op += QuadOperator(factors, complex(rng.normal(), rng.normal()))
    return op
    return op


@pytest.fixture
def w() -> FermionOperator:
    return (1 + 2j) * FermionOperator("4^ 3 9 3^") - 4 * FermionOperator("2")


def test_term_encoding() -> None:
    # string and tuple forms name the same products
    assert FermionOperator("") == FermionOperator(())
    assert FermionOperator("2") == FermionOperator(((2, 0),))
    assert FermionOperator("4^ 9") == FermionOperator(((4, 1), (9, 0)))
    op = FermionOperator("4^ 3 9 3^")
    assert list(op.terms) == [((4, Action.RAISE), (3, Action.LOWER), (9, Action.LOWER), (3, Action.RAISE))]
    assert FermionOperator() == FermionOperator.zero()
    assert len(FermionOperator()) == 0


def test_w_normal_order(w: FermionOperator) -> None:
    expected = (
        -(1 + 2j) * FermionOperator("4^ 3^ 9 3")
        - (1 + 2j) * FermionOperator("4^ 9")
        - 4 * FermionOperator("2")
    )
    assert normal_order(w).isclose(expected)
    assert is_normal_ordered(normal_order(w))
    assert not is_normal_ordered(w)


def test_w_fourth_power_vanishes(w: FermionOperator) -> None:
    assert len(normal_order(w**4).compress(1e-12)) == 0
    assert len(normal_order(w / 82 - 3 * w**2)) > 0


def test_string_round_trip(w: FermionOperator) -> None:
    assert FermionOperator.from_string(str(w)) == w
    qubits = QubitOperator("X0 Z1 Y3", 0.5) + QubitOperator("", -0.25)
    assert QubitOperator.from_string(str(qubits)) == qubits
    assert str(FermionOperator()) == "0"
    assert FermionOperator.from_string("0") == FermionOperator()


def test_parse_errors() -> None:
    with pytest.raises(TermParseError) as info:
        FermionOperator("1^ x")
    assert info.value.offset == 3
    with pytest.raises(TermParseError):
        QubitOperator("X0 W1")
    with pytest.raises(InvalidTermError):
        QubitOperator("X0 Y0")
    with pytest.raises(InvalidTermError):
        FermionOperator(((-1, 1),))


def test_variant_mismatch() -> None:
    with pytest.raises(VariantMismatchError):
        FermionOperator("0") + QubitOperator("X0")
    with pytest.raises(VariantMismatchError):
        BosonOperator("0") * FermionOperator("0")
    with pytest.raises(UnsupportedVariantError):
        normal_order(QubitOperator("X0"))


def test_pauli_products() -> None:
    assert QubitOperator("X0") * QubitOperator("Y0") == QubitOperator("Z0", 1j)
    assert QubitOperator("Y0") * QubitOperator("X0") == QubitOperator("Z0", -1j)
    assert QubitOperator("X0 Z1") * QubitOperator("X0 Z1") == QubitOperator("")
    assert list(QubitOperator("Z2 X1").terms) == [((1, PauliAxis.X), (2, PauliAxis.Z))]


def test_boson_storage_and_order() -> None:
    op = BosonOperator("3^ 5 1^ 4")
    ((term, _),) = op.items()
    assert op.term_string(term) == "1^ 3^ 4 5"
    assert normal_order(BosonOperator("0 0^")) == BosonOperator("") + BosonOperator("0^ 0")


def test_quad_order() -> None:
    ordered = normal_order(QuadOperator("p0 q0"), hbar=2.0)
    assert ordered == QuadOperator("q0 p0") + QuadOperator("", -2j)
    assert list(QuadOperator("q3 p1 q0").terms) == [((0, "q"), (1, "p"), (3, "q"))]


def test_hermitian_conjugate() -> None:
    assert FermionOperator("4^ 3", 1j).hermitian_conjugate() == FermionOperator("3^ 4", -1j)
    assert QuadOperator("p0 q0").hermitian_conjugate() == QuadOperator("q0 p0")
    assert is_hermitian(FermionOperator("1^ 0") + FermionOperator("0^ 1"))
    assert not is_hermitian(FermionOperator("1^ 0", 1j) + FermionOperator("0^ 1", 1j))
    assert is_hermitian(QubitOperator("X0 Y1", 0.3))


def test_arithmetic() -> None:
    a = FermionOperator("1^ 0", 2.0)
    assert a - a == FermionOperator()
    assert -a == FermionOperator("1^ 0", -2.0)
    assert a / 2 == FermionOperator("1^ 0")
    assert 1 + a == a + FermionOperator("")
    assert numpy.float64(3.0) * a == FermionOperator("1^ 0", 6.0)
    assert a**0 == FermionOperator.identity()
    with pytest.raises(ValueError):
        a ** -1


def test_count_modes_and_number_operator() -> None:
    assert count_modes(FermionOperator("")) == 0
    assert count_modes(FermionOperator("4^ 9")) == 10
    assert count_modes(QubitOperator("Z2")) == 3
    total = number_operator(3)
    assert total == FermionOperator("0^ 0") + FermionOperator("1^ 1") + FermionOperator("2^ 2")
    assert number_operator(3, mode=1, coefficient=2.0, variant="boson") == BosonOperator("1^ 1", 2.0)
    with pytest.raises(UnsupportedVariantError):
        number_operator(2, variant="qubit")


def test_parse_helper() -> None:
    assert parse("qubit", "X1 Z2", 0.5) == QubitOperator("X1 Z2", 0.5)
    with pytest.raises(ValueError):
        parse("anyon", "0")


@pytest.mark.parametrize("seed", SEEDS)
def test_fermion_anticommutation(seed: int) -> None:
    rng = numpy.random.default_rng(seed)
    p, q = (int(mode) for mode in rng.integers(0, 6, size=2))
    lower, raise_ = FermionOperator(((p, 0),)), FermionOperator(((q, 1),))
    anticommutator = normal_order(lower * raise_ + raise_ * lower)
    assert anticommutator == (FermionOperator("") if p == q else FermionOperator())
    assert len(normal_order(lower * lower)) == 0


@pytest.mark.parametrize("seed", SEEDS)
def test_boson_commutation(seed: int) -> None:
    rng = numpy.random.default_rng(seed)
    p, q = (int(mode) for mode in rng.integers(0, 4, size=2))
    result = commutator(BosonOperator(((p, 0),)), BosonOperator(((q, 1),)))
    assert result == (BosonOperator("") if p == q else BosonOperator())


@pytest.mark.parametrize("seed", SEEDS)
def test_normal_order_idempotent(seed: int) -> None:
    rng = numpy.random.default_rng(seed)
    op = random_fermion_operator(rng, 5, 6)
    once = normal_order(op)
    assert normal_order(once) == once
    assert is_normal_ordered(once)


@pytest.mark.parametrize("seed", SEEDS)
def test_hermitian_part_is_hermitian(seed: int) -> None:
    rng = numpy.random.default_rng(seed)
    op = random_fermion_operator(rng, 4, 5)
    assert is_hermitian(op + op.hermitian_conjugate())


def test_items_sorted() -> None:
    op = FermionOperator("2^ 1") + FermionOperator("0^ 0") + FermionOperator("")
    keys: List[str] = [op.term_string(term) for term, _ in op]
    assert keys == ["", "0^ 0", "2^ 1"]


def test_action_members_as_labels() -> None:
    raised = FermionOperator(((0, Action.RAISE), (1, Action.LOWER)))
    assert raised == FermionOperator("0^ 1")
    assert BosonOperator(((2, Action.LOWER), (0, Action.RAISE))) == BosonOperator("0^ 2")
    ordered = normal_order(FermionOperator("0 1^ 2", 0.5))
    for term, value in ordered.items():
        assert FermionOperator(term, value) == FermionOperator(ordered.term_string(term), value)
    for label in (True, 2, -1, "^", 1.0):
        with pytest.raises(InvalidTermError):
            FermionOperator(((0, label),))


def test_boson_normal_order_matches_storage() -> None:
    assert normal_order(BosonOperator("1^ 0")) == BosonOperator("1^ 0")
    assert normal_order(BosonOperator("1 0^ 2^")) == BosonOperator("0^ 1 2^")
    assert normal_order(BosonOperator("1 1^ 0")) == BosonOperator("0 1^ 1") + BosonOperator("0")


@pytest.mark.parametrize("seed", SEEDS)
def test_boson_normal_order_keys_are_stored_keys(seed: int) -> None:
    rng = numpy.random.default_rng(seed)
    ordered = normal_order(random_boson_operator(rng, 3, 4))
    for term, value in ordered.items():
        assert list(BosonOperator(term, value).terms) == [term]
    assert normal_order(ordered) == ordered
    assert BosonOperator.from_string(str(ordered)) == ordered


@pytest.mark.parametrize("seed", SEEDS)
def test_qubit_products_associate(seed: int) -> None:
    rng = numpy.random.default_rng(seed)
    a, b, c = (random_qubit_operator(rng, 3, 3) for _ in range(3))
    assert ((a * b) * c).isclose(a * (b * c), 1e-10)
    assert (a * b).hermitian_conjugate().isclose(b.hermitian_conjugate() * a.hermitian_conjugate(), 1e-10)


@pytest.mark.parametrize("seed", SEEDS)
def test_string_round_trip_all_variants(seed: int) -> None:
    rng = numpy.random.default_rng(seed)
    for op in (
        random_fermion_operator(rng, 5, 4),
        random_boson_operator(rng, 4, 4),
        random_qubit_operator(rng, 4, 4),
        random_quad_operator(rng, 4, 4),
    ):
        assert type(op).from_string(str(op)) == op
