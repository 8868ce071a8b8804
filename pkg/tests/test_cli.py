import json
import os
from typing import Any

import numpy
import pytest

from ferminal import __version__
from ferminal.cli import EXIT_DATA, EXIT_USAGE, main
from ferminal.io import (
    MolecularArchive,
    dumps,
    operator_from_json,
    operator_to_json,
    tensor_from_json,
    tensor_to_json,
)
from ferminal.models import fermi_hubbard
from ferminal.ops import FermionOperator, QubitOperator
from ferminal.transforms import bravyi_kitaev, fermion_to_tensor, jordan_wigner

SAMPLES = os.path.join(os.path.dirname(__file__), "samples")


def write_json(tmp_path: Any, name: str, data: Any) -> str:
    path = str(tmp_path / name)
    with open(path, "w") as f:
        f.write(dumps(data))
    return path


def test_version(capsys: Any) -> None:
    assert main(["--version"]) == 0
    assert __version__ in capsys.readouterr().out


def test_usage_errors(capsys: Any) -> None:
    assert main([]) == EXIT_USAGE
    assert main(["spectrum"]) == EXIT_USAGE
    assert main(["transform", "--encoding", "parity", "--in", "x.json"]) == EXIT_USAGE
    assert "usage" in capsys.readouterr().err


def test_data_errors(tmp_path: Any) -> None:
    broken = write_json(tmp_path, "broken.json", {"terms": [{"term": 3}]})
    assert main(["spectrum", "--in", broken]) == EXIT_DATA
    assert main(["spectrum", "--in", str(tmp_path / "missing.json")]) == EXIT_DATA


def test_model_hubbard(capsys: Any) -> None:
    assert main(["model", "hubbard", "--x", "2", "--u", "4"]) == 0
    op = operator_from_json(json.loads(capsys.readouterr().out))
    assert op.isclose(fermi_hubbard(2, 1, tunneling=1.0, coulomb=4.0, periodic=False))


def test_model_to_file(tmp_path: Any) -> None:
    out = str(tmp_path / "chain.json")
    assert main(["model", "hubbard", "--x", "3", "--spinless", "--mu", "0.5", "--out", out]) == 0
    with open(out, "r") as f:
        op = operator_from_json(json.load(f))
    expected = fermi_hubbard(3, 1, tunneling=1.0, coulomb=0.0, chemical_potential=0.5, periodic=False, spinless=True)
    assert op.isclose(expected)


def test_spectrum(tmp_path: Any, capsys: Any) -> None:
    path = write_json(tmp_path, "z.json", operator_to_json(QubitOperator("Z0") + QubitOperator("Z1", 0.5)))
    assert main(["spectrum", "--in", path]) == 0
    numpy.testing.assert_allclose(json.loads(capsys.readouterr().out), [-1.5, -0.5, 0.5, 1.5], atol=1e-12)
    assert main(["spectrum", "--in", path, "--k", "1"]) == 0
    numpy.testing.assert_allclose(json.loads(capsys.readouterr().out), [-1.5], atol=1e-12)


@pytest.mark.parametrize("encoding", ["jw", "bk"])
def test_transform(tmp_path: Any, capsys: Any, encoding: str) -> None:
    hopping = FermionOperator("1^ 0") + FermionOperator("0^ 1")
    path = write_json(tmp_path, "hopping.json", operator_to_json(hopping))
    assert main(["transform", "--encoding", encoding, "--in", path, "--n-qubits", "2"]) == 0
    encoded = operator_from_json(json.loads(capsys.readouterr().out))
    expected = jordan_wigner(hopping) if encoding == "jw" else bravyi_kitaev(hopping, 2)
    assert encoded.isclose(expected)


def test_trotter_qasm_golden(tmp_path: Any, capsys: Any) -> None:
    op = QubitOperator("X0 Z1 Y3", 0.5) + QubitOperator("Z3 Z4", 0.6)
    path = write_json(tmp_path, "pauli.json", operator_to_json(op))
    assert main(["trotter-qasm", "--in", path]) == 0
    with open(os.path.join(SAMPLES, "qasm_golden.txt"), "r") as f:
        assert capsys.readouterr().out == f.read()


def test_trotter_error(tmp_path: Any, capsys: Any) -> None:
    hubbard = fermi_hubbard(2, 1, tunneling=1.0, coulomb=4.0, periodic=False)
    path = write_json(tmp_path, "dimer.json", operator_to_json(hubbard))
    assert main(["--workers", "2", "trotter-error", "--in", path]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result["bound"] > 0.0
    assert result["error"]["variant"] == "fermion"
    hop = write_json(tmp_path, "hop.json", operator_to_json(FermionOperator("1^ 0")))
    assert main(["trotter-error", "--in", hop]) == EXIT_DATA


def test_rotate_basis_identity(tmp_path: Any, capsys: Any) -> None:
    tensor = fermion_to_tensor(fermi_hubbard(2, 1, tunneling=1.0, coulomb=4.0, periodic=False), n_modes=4)
    path = write_json(tmp_path, "tensor.json", tensor_to_json(tensor))
    identity = write_json(tmp_path, "u.json", numpy.eye(4).tolist())
    assert main(["rotate-basis", "--in", path, "--u", identity]) == 0
    assert tensor_from_json(json.loads(capsys.readouterr().out)).isclose(tensor, 1e-12)
    wrong = write_json(tmp_path, "u2.json", numpy.eye(2).tolist())
    assert main(["rotate-basis", "--in", path, "--u", wrong]) == EXIT_DATA


def test_fcidump_import(tmp_path: Any) -> None:
    out = str(tmp_path / "h2.json.gz")
    source = os.path.join(SAMPLES, "h2_sto3g.FCIDUMP")
    argv = ["fcidump-import", "--in", source, "--basis", "sto-3g", "--fci-energy", "-1.137252558771019", "--out", out]
    assert main(argv) == 0
    archive = MolecularArchive.load_from_file(out)
    assert (archive.n_electrons, archive.n_orbitals, archive.multiplicity) == (2, 2, 1)
    assert archive.basis == "sto-3g"
    assert archive.reference_energies == {"fci": -1.137252558771019}
    assert archive.integrals.n_modes == 4
    assert archive.provenance == "imported from h2_sto3g.FCIDUMP"


def test_gaussian_prep(tmp_path: Any, capsys: Any) -> None:
    chain = fermi_hubbard(3, 1, tunneling=1.0, coulomb=0.0, chemical_potential=0.5, periodic=False, spinless=True)
    path = write_json(tmp_path, "chain.json", tensor_to_json(fermion_to_tensor(chain, n_modes=3)))
    assert main(["gaussian-prep", "--in", path]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result["ground_energy"] == pytest.approx(-1.0 - numpy.sqrt(2.0), abs=1e-10)
    assert len(result["orbital_energies"]) == 3
    assert result["start_orbitals"] == [1, 2]


def test_number_operator_spectrum(tmp_path: Any, capsys: Any) -> None:
    number = 0.5 * (QubitOperator("") - QubitOperator("Z0"))
    path = write_json(tmp_path, "number.json", operator_to_json(number))
    assert main(["spectrum", "--in", path]) == 0
    numpy.testing.assert_allclose(json.loads(capsys.readouterr().out), [0.0, 1.0], atol=1e-12)


def test_periodic_hubbard_ring(capsys: Any) -> None:
    assert main(["model", "hubbard", "--x", "4", "--y", "1", "--t", "1", "--u", "4", "--periodic"]) == 0
    op = operator_from_json(json.loads(capsys.readouterr().out))
    assert op.isclose(fermi_hubbard(4, 1, tunneling=1.0, coulomb=4.0, periodic=True))
    assert len(op) == 20


def test_model_as_bare_term_list(capsys: Any) -> None:
    assert main(["--json-layout", "list", "model", "hubbard", "--x", "2", "--u", "4"]) == 0
    records = json.loads(capsys.readouterr().out)
    assert isinstance(records, list)
    assert set(records[0]) == {"term", "re", "im"}
    assert operator_from_json(records).isclose(fermi_hubbard(2, 1, tunneling=1.0, coulomb=4.0, periodic=False))


def test_transform_reads_and_writes_bare_lists(tmp_path: Any, capsys: Any) -> None:
    hopping = FermionOperator("1^ 0") + FermionOperator("0^ 1")
    path = write_json(tmp_path, "hopping.json", operator_to_json(hopping, bare=True))
    assert main(["--json-layout", "list", "transform", "--encoding", "jw", "--in", path]) == 0
    records = json.loads(capsys.readouterr().out)
    assert isinstance(records, list)
    assert operator_from_json(records).isclose(jordan_wigner(hopping))
