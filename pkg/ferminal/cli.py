"""
Command line entry point, ``ferminal <command> ...``.

Results go to stdout (or ``--out``) as JSON or QASM text; diagnostics go to
stderr. Exit status is 0 on success, 1 for usage errors and 2 when the
input data is rejected.
"""

import argparse
import json
import logging
import os
import sys
from dataclasses import replace
from typing import Any, Callable, Dict, NoReturn, Optional, Sequence

from ferminal import __version__
from ferminal.config import ENV_PREFIX, get_settings, set_settings
from ferminal.exceptions import FerminalError
from ferminal.io import (
    MolecularArchive,
    array_from_json,
    circuit_to_json,
    dumps,
    load_fcidump,
    operator_from_json,
    operator_to_json,
    tensor_from_json,
    tensor_to_json,
)
from ferminal.linalg import eigenspectrum, to_sparse
from ferminal.models import (
    PlaneWaveGrid,
    bose_hubbard,
    fermi_hubbard,
    jellium,
    mean_field_dwave,
)
from ferminal.ops import TermOperator, Variant, compress, split_terms
from ferminal.quadratic import diagonalize, gaussian_circuit
from ferminal.tensors import rotate_basis
from ferminal.transforms import bravyi_kitaev, extract_quadratic, jordan_wigner, tensor_to_fermion
from ferminal.trotter import TermSequence, qasm_text, trotter_error_bound, trotter_error_v1

logger = logging.getLogger(__name__)

EXIT_USAGE = 1
EXIT_DATA = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError("%s: error: %s" % (self.prog, message))


def _read_json(file_name: str) -> Any:
    if file_name == "-":
        return json.load(sys.stdin)
    with open(file_name, "r") as f:
        return json.load(f)


def _read_operator(file_name: str) -> TermOperator:
    return operator_from_json(_read_json(file_name))


def _emit(text: str, out: Optional[str]) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as f:
            f.write(text)
        logger.info("wrote %s", out)


def _operator_json(op: TermOperator, args: argparse.Namespace) -> Any:
    return operator_to_json(op, bare=args.json_layout == "list")


def _emit_operator(op: TermOperator, args: argparse.Namespace) -> None:
    _emit(dumps(_operator_json(compress(op, args.tolerance), args)), args.out)


# commands


def _transform(args: argparse.Namespace) -> None:
    op = _read_operator(args.input)
    if args.encoding == "jw":
        encoded = jordan_wigner(op)
    else:
        encoded = bravyi_kitaev(op, args.n_qubits)
    _emit_operator(encoded, args)


def _spectrum(args: argparse.Namespace) -> None:
    op = _read_operator(args.input)
    values = eigenspectrum(to_sparse(op), k=args.k)
    _emit(dumps([float(value) for value in values]), args.out)


def _model(args: argparse.Namespace) -> None:
    if args.model == "hubbard":
        op = fermi_hubbard(
            args.x,
            args.y,
            tunneling=args.t,
            coulomb=args.u,
            chemical_potential=args.mu,
            magnetic_field=args.field,
            periodic=args.periodic,
            spinless=args.spinless,
        )
    elif args.model == "bose-hubbard":
        op = bose_hubbard(
            args.x, args.y, tunneling=args.t, interaction=args.u, chemical_potential=args.mu, periodic=args.periodic
        )
    elif args.model == "jellium":
        grid = PlaneWaveGrid(dimensions=args.dimensions, length=args.length, scale=args.scale)
        op = jellium(grid, basis=args.basis, spinless=args.spinless)
    else:
        op = mean_field_dwave(
            args.x, args.y, tunneling=args.t, sc_gap=args.gap, chemical_potential=args.mu, periodic=args.periodic
        )
    _emit_operator(op, args)


def _trotter_qasm(args: argparse.Namespace) -> None:
    op = _read_operator(args.input)
    if op.variant is Variant.FERMION:
        op = jordan_wigner(op)
    if op.variant is not Variant.QUBIT:
        raise ValueError("trotter-qasm needs a qubit or fermion operator, got %s" % op.variant)
    pieces = [piece for term, piece in split_terms(op) if term]
    _emit(qasm_text(pieces, args.time), args.out)


def _trotter_error(args: argparse.Namespace) -> None:
    sequence = TermSequence.from_operator(_read_operator(args.input))
    tolerance = args.tolerance if args.tolerance is not None else get_settings().compress_tolerance
    error = trotter_error_v1(sequence, workers=args.workers, tolerance=tolerance)
    _emit(dumps({"error": _operator_json(error, args), "bound": trotter_error_bound(error)}), args.out)


def _rotate_basis(args: argparse.Namespace) -> None:
    tensor = tensor_from_json(_read_json(args.input))
    n = tensor.n_modes
    rotation = array_from_json(_read_json(args.u), "u", 2, (n, n))
    _emit(dumps(tensor_to_json(rotate_basis(tensor, rotation))), args.out)


def _fcidump_import(args: argparse.Namespace) -> None:
    data = load_fcidump(args.input)
    references: Dict[str, float] = {}
    if args.fci_energy is not None:
        references["fci"] = args.fci_energy
    archive = MolecularArchive(
        [],
        args.basis,
        args.multiplicity if args.multiplicity is not None else data.ms2 + 1,
        args.charge,
        data.nelec,
        data.norb,
        integrals=data.to_interaction_tensor(),
        reference_energies=references,
        provenance="imported from %s" % os.path.basename(args.input),
    )
    if args.out is None:
        _emit(dumps(archive.to_json()), None)
    else:
        archive.save(args.out)


def _gaussian_prep(args: argparse.Namespace) -> None:
    tensor = tensor_from_json(_read_json(args.input))
    qh = extract_quadratic(tensor_to_fermion(tensor), n_modes=tensor.n_modes)
    form = diagonalize(qh)
    circuit = gaussian_circuit(qh, form)
    result = circuit_to_json(circuit)
    result["ground_energy"] = form.ground_energy()
    result["orbital_energies"] = [float(value) for value in form.orbital_energies]
    _emit(dumps(result), args.out)


# parser


def _lattice_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--x", type=int, required=True, help="sites along x")
    parser.add_argument("--y", type=int, default=1, help="sites along y")
    parser.add_argument("--t", type=float, default=1.0, help="tunneling amplitude")
    parser.add_argument("--mu", type=float, default=0.0, help="chemical potential")
    parser.add_argument("--periodic", action="store_true", help="wrap the lattice")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", default=None, help="write the result here instead of stdout")

    parser = _Parser(prog="ferminal", description="Fermionic Hamiltonians on qubits.")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument(
        "--log-level",
        default=os.environ.get(ENV_PREFIX + "LOG_LEVEL", "WARNING"),
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        type=str.upper,
    )
    parser.add_argument("--workers", type=int, default=None, help="threads for parallel loops")
    parser.add_argument("--tolerance", type=float, default=None, help="compression tolerance of outputs")
    parser.add_argument(
        "--json-layout",
        choices=["object", "list"],
        default="object",
        help="operator output as a variant-tagged object or a bare list of terms",
    )
    commands = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    commands.required = True

    transform = commands.add_parser("transform", parents=[common], help="fermion operator to qubits")
    transform.add_argument("--encoding", choices=["jw", "bk"], default="jw")
    transform.add_argument("--in", dest="input", required=True)
    transform.add_argument("--n-qubits", type=int, default=None, help="register size for bk")
    transform.set_defaults(handler=_transform)

    spectrum = commands.add_parser("spectrum", parents=[common], help="eigenvalues of an operator")
    spectrum.add_argument("--in", dest="input", required=True)
    spectrum.add_argument("--k", type=int, default=None, help="only the lowest k eigenvalues")
    spectrum.set_defaults(handler=_spectrum)

    model = commands.add_parser("model", help="model Hamiltonians")
    models = model.add_subparsers(dest="model", metavar="model", parser_class=_Parser)
    models.required = True
    hubbard = models.add_parser("hubbard", parents=[common])
    _lattice_arguments(hubbard)
    hubbard.add_argument("--u", type=float, default=0.0, help="on-site interaction")
    hubbard.add_argument("--field", type=float, default=0.0, help="magnetic field")
    hubbard.add_argument("--spinless", action="store_true")
    bose = models.add_parser("bose-hubbard", parents=[common])
    _lattice_arguments(bose)
    bose.add_argument("--u", type=float, default=0.0, help="on-site interaction")
    gas = models.add_parser("jellium", parents=[common])
    gas.add_argument("--dimensions", type=int, default=1)
    gas.add_argument("--length", type=int, required=True, help="grid points per axis")
    gas.add_argument("--scale", type=float, default=1.0, help="side of the cell")
    gas.add_argument("--basis", choices=["plane_wave", "dual"], default="plane_wave")
    gas.add_argument("--spinless", action="store_true")
    dwave = models.add_parser("dwave", parents=[common])
    _lattice_arguments(dwave)
    dwave.add_argument("--gap", type=float, default=0.0, help="superconducting gap")
    model.set_defaults(handler=_model)

    qasm = commands.add_parser("trotter-qasm", parents=[common], help="QASM of exponentiated Pauli strings")
    qasm.add_argument("--in", dest="input", required=True)
    qasm.add_argument("--time", type=float, default=1.0)
    qasm.set_defaults(handler=_trotter_qasm)

    error = commands.add_parser("trotter-error", parents=[common], help="leading Trotter error operator")
    error.add_argument("--in", dest="input", required=True)
    error.set_defaults(handler=_trotter_error)

    rotate = commands.add_parser("rotate-basis", parents=[common], help="rotate an interaction tensor")
    rotate.add_argument("--in", dest="input", required=True)
    rotate.add_argument("--u", required=True, help="JSON matrix of the rotation")
    rotate.set_defaults(handler=_rotate_basis)

    fcidump = commands.add_parser("fcidump-import", parents=[common], help="FCIDUMP to archive JSON")
    fcidump.add_argument("--in", dest="input", required=True)
    fcidump.add_argument("--basis", default="")
    fcidump.add_argument("--multiplicity", type=int, default=None, help="defaults to MS2 + 1")
    fcidump.add_argument("--charge", type=int, default=0)
    fcidump.add_argument("--fci-energy", type=float, default=None)
    fcidump.set_defaults(handler=_fcidump_import)

    prep = commands.add_parser("gaussian-prep", parents=[common], help="state preparation circuit")
    prep.add_argument("--in", dest="input", required=True)
    prep.set_defaults(handler=_gaussian_prep)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as error:
        sys.stderr.write(parser.format_usage())
        sys.stderr.write("%s\n" % error)
        return EXIT_USAGE
    except SystemExit as stop:
        return int(stop.code or 0)

    logging.basicConfig(stream=sys.stderr, level=args.log_level, format="%(levelname)s %(name)s: %(message)s")
    previous = get_settings()
    try:
        overrides: Dict[str, Any] = {}
        if args.workers is not None:
            overrides["workers"] = args.workers
        if args.tolerance is not None:
            overrides["compress_tolerance"] = args.tolerance
        set_settings(replace(previous, **overrides))
        handler: Callable[[argparse.Namespace], None] = args.handler
        handler(args)
    except (FerminalError, ValueError, TypeError, KeyError, OSError) as error:
        logger.error("%s", error)
        return EXIT_DATA
    finally:
        set_settings(previous)
    return 0
