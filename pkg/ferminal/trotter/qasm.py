"""
QASM listings for products of exponentiated Pauli strings.

The dialect has one gate per line and no header:

    H q            Hadamard
    Rx phi q       exp(-i phi X / 2)
    Rz phi q       exp(-i phi Z)
    CNOT c t       controlled NOT

so that ``Rz theta q`` is exactly exp(-i theta Z_q).
"""

import logging
import math
from functools import reduce
from typing import Iterable, Iterator, List, Sequence

import numpy
from numpy.typing import NDArray

from ferminal._util import format_float
from ferminal.ops import PauliAxis, QubitOperator

logger = logging.getLogger(__name__)

HALF_PI = math.pi / 2


def pauli_exp_to_qasm(
    operators: Sequence[QubitOperator], time: float = 1.0
) -> Iterator[str]:
    """
    Gates of prod_k exp(-i theta_k time P_k), the first operator applied first.

    Each Pauli string is rotated into the Z basis (H for X, Rx pi/2 for Y),
    its parity collected along a CNOT chain over the support in ascending
    qubit order, rotated by Rz on the highest qubit, and uncomputed.

    :param operators: single-term qubit operators with real coefficients
    :param time: evolution time multiplying every angle
    :return: iterator of QASM lines without newlines
    """
    for op in operators:
        if len(op.terms) != 1:
            raise ValueError("each operator must be a single Pauli string, got %d terms" % len(op.terms))
        ((term, coefficient),) = op.terms.items()
        if coefficient.imag != 0:
            raise ValueError("coefficient %r of %s is not real" % (coefficient, op.term_string(term)))
        if not term:
            continue
        qubits = [qubit for qubit, _ in term]

        for qubit, axis in term:
            if axis is PauliAxis.X:
                yield "H %d" % qubit
            elif axis is PauliAxis.Y:
                yield "Rx %s %d" % (format_float(HALF_PI), qubit)
        for control, target in zip(qubits, qubits[1:]):
            yield "CNOT %d %d" % (control, target)
        yield "Rz %s %d" % (format_float(coefficient.real * time), qubits[-1])
        for control, target in reversed(list(zip(qubits, qubits[1:]))):
            yield "CNOT %d %d" % (control, target)
        for qubit, axis in term:
            if axis is PauliAxis.X:
                yield "H %d" % qubit
            elif axis is PauliAxis.Y:
                yield "Rx %s %d" % (format_float(-HALF_PI), qubit)


def qasm_text(operators: Sequence[QubitOperator], time: float = 1.0) -> str:
    return "".join(line + "\n" for line in pauli_exp_to_qasm(operators, time))


_HADAMARD = numpy.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)
_NOT = numpy.array([[0, 1], [1, 0]], dtype=complex)


def _on_qubit(gate: NDArray[numpy.complex128], qubit: int, n_qubits: int) -> NDArray[numpy.complex128]:
    factors = [gate if q == qubit else numpy.eye(2) for q in range(n_qubits)]
    return reduce(numpy.kron, factors)


def qasm_to_matrix(lines: Iterable[str], n_qubits: int) -> NDArray[numpy.complex128]:
    """
    Unitary of a listing, qubit 0 being the most significant bit.
    """
    unitary = numpy.eye(1 << n_qubits, dtype=complex)
    for line in lines:
        parts = line.split()
        if not parts:
            continue
        name, args = parts[0], parts[1:]
        if name == "H":
            gate = _on_qubit(_HADAMARD, int(args[0]), n_qubits)
        elif name == "Rx":
            phi = float(args[0])
            rx = numpy.cos(phi / 2) * numpy.eye(2) - 1j * numpy.sin(phi / 2) * _NOT
            gate = _on_qubit(rx, int(args[1]), n_qubits)
        elif name == "Rz":
            phi = float(args[0])
            gate = _on_qubit(numpy.diag([numpy.exp(-1j * phi), numpy.exp(1j * phi)]), int(args[1]), n_qubits)
        elif name == "CNOT":
            control, target = int(args[0]), int(args[1])
            index = numpy.arange(1 << n_qubits)
            flipped = numpy.where(
                (index >> (n_qubits - 1 - control)) & 1, index ^ (1 << (n_qubits - 1 - target)), index
            )
            gate = numpy.zeros((1 << n_qubits, 1 << n_qubits), dtype=complex)
            gate[flipped, index] = 1
        else:
            raise ValueError("unknown gate %r" % name)
        unitary = gate @ unitary
    return unitary


def qasm_lines(text: str) -> List[str]:
    return [line for line in text.splitlines() if line.strip()]
