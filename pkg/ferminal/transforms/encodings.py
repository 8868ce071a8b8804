"""
Fermion-to-qubit encodings.
"""

import logging
from functools import lru_cache
from typing import Callable, Dict, Optional

from ferminal.exceptions import UnsupportedVariantError
from ferminal.ops import Action, PauliAxis, QubitOperator, TermKey, TermOperator, Variant
from .fenwick import FenwickTree

logger = logging.getLogger(__name__)


def _check_fermion(op: TermOperator) -> None:
    if op.variant is not Variant.FERMION:
        raise UnsupportedVariantError("expected a fermion operator, got %s" % op.variant)


@lru_cache(maxsize=None)
def _jordan_wigner_ladder(mode: int, action: Action) -> QubitOperator:
    z_string = tuple((q, PauliAxis.Z) for q in range(mode))
    x_part = QubitOperator(z_string + ((mode, PauliAxis.X),), 0.5)
    y_sign = -0.5j if action is Action.RAISE else 0.5j
    y_part = QubitOperator(z_string + ((mode, PauliAxis.Y),), y_sign)
    return x_part + y_part


def _encode(op: TermOperator, ladder: Callable[[int, Action], QubitOperator]) -> QubitOperator:
    result: Dict[TermKey, complex] = {}
    for term, coefficient in op.terms.items():
        image = QubitOperator((), coefficient)
        for mode, action in term:
            image = image * ladder(mode, Action(action))
        for key, value in image.terms.items():
            total = result.get(key, 0) + value
            if total == 0:
                result.pop(key, None)
            else:
                result[key] = total
    return QubitOperator._from_terms(result)


def jordan_wigner(op: TermOperator) -> QubitOperator:
    """
    Jordan-Wigner transform:
    a_p^ -> (X_p - iY_p)/2 Z_0...Z_{p-1}, a_p -> (X_p + iY_p)/2 Z_0...Z_{p-1}.

    :param op: fermion operator
    :return: expanded qubit operator with exact zeros dropped
    """
    _check_fermion(op)
    result = _encode(op, _jordan_wigner_ladder)
    logger.debug("jordan-wigner: %d fermion terms -> %d qubit terms", len(op), len(result))
    return result


def bravyi_kitaev(op: TermOperator, n_qubits: Optional[int] = None) -> QubitOperator:
    """
    Bravyi-Kitaev transform built on a :class:`FenwickTree`.

    Each ladder operator becomes (c -/+ i d)/2 with Majorana images
    c = X_j Z_parity X_update and d = Y_j Z_remainder X_update.

    :param op: fermion operator
    :param n_qubits: defaults to the number of modes ``op`` touches
    :return: qubit operator on ``n_qubits`` qubits
    """
    _check_fermion(op)
    needed = op.max_modes()
    if n_qubits is None:
        n_qubits = needed
    if n_qubits < needed:
        raise ValueError("n_qubits=%d is too small for %d modes" % (n_qubits, needed))
    if n_qubits == 0:
        return QubitOperator._from_terms(dict(op.terms))
    tree = FenwickTree(n_qubits)
    images: Dict[Action, Dict[int, QubitOperator]] = {Action.RAISE: {}, Action.LOWER: {}}

    def ladder(mode: int, action: Action) -> QubitOperator:
        if mode not in images[action]:
            update = tuple((q, PauliAxis.X) for q in tree.update_set(mode))
            c_part = QubitOperator(
                ((mode, PauliAxis.X),)
                + tuple((q, PauliAxis.Z) for q in tree.parity_set(mode))
                + update,
                0.5,
            )
            d_part = QubitOperator(
                ((mode, PauliAxis.Y),)
                + tuple((q, PauliAxis.Z) for q in tree.remainder_set(mode))
                + update,
                -0.5j if action is Action.RAISE else 0.5j,
            )
            images[action][mode] = c_part + d_part
        return images[action][mode]

    result = _encode(op, ladder)
    logger.debug("bravyi-kitaev on %d qubits: %d terms", n_qubits, len(result))
    return result
