"""
Normal ordering and the helpers built on it.
"""

import logging
from typing import Dict, List, Optional, Tuple, TypeVar, Union

from ferminal.config import get_settings
from ferminal.exceptions import UnsupportedVariantError
from .enums import Action, QuadKind, Variant
from .operator import (
    BosonOperator,
    Factor,
    FermionOperator,
    TermKey,
    TermOperator,
    operator_class,
)

logger = logging.getLogger(__name__)

T = TypeVar("T", bound=TermOperator)


def _add(terms: Dict[TermKey, complex], key: TermKey, value: complex) -> None:
    total = terms.get(key, 0) + value
    if total == 0:
        terms.pop(key, None)
    else:
        terms[key] = total


def _fermion_term(
    term: List[Factor], coefficient: complex, out: Dict[TermKey, complex]
) -> None:
    # insertion sort: raising first, then descending mode within each block
    for i in range(1, len(term)):
        for j in range(i, 0, -1):
            right, left = term[j], term[j - 1]
            if right[1] is Action.RAISE and left[1] is Action.LOWER:
                term[j - 1], term[j] = right, left
                coefficient = -coefficient
                if right[0] == left[0]:
                    _fermion_term(term[: j - 1] + term[j + 1 :], -coefficient, out)
            elif right[1] is left[1]:
                if right[0] == left[0]:
                    return
                if right[0] > left[0]:
                    term[j - 1], term[j] = right, left
                    coefficient = -coefficient
    _add(out, tuple(term), coefficient)


def _boson_term(
    term: List[Factor], coefficient: complex, out: Dict[TermKey, complex]
) -> None:
    for j in range(1, len(term)):
        left, right = term[j - 1], term[j]
        if left[1] is Action.LOWER and right[1] is Action.RAISE:
            swapped = term[: j - 1] + [right, left] + term[j + 1 :]
            _boson_term(swapped, coefficient, out)
            if left[0] == right[0]:
                _boson_term(term[: j - 1] + term[j + 1 :], coefficient, out)
            return
    # same key order as BosonOperator: by mode, raising first within a mode
    _add(out, tuple(sorted(term, key=lambda f: (f[0], f[1] is Action.LOWER))), coefficient)


def _quad_term(
    term: List[Factor], coefficient: complex, hbar: float, out: Dict[TermKey, complex]
) -> None:
    # keys are sorted by mode, so factors of one mode sit next to each other
    for j in range(1, len(term)):
        left, right = term[j - 1], term[j]
        if left[0] == right[0] and left[1] is QuadKind.P and right[1] is QuadKind.Q:
            swapped = term[: j - 1] + [right, left] + term[j + 1 :]
            _quad_term(swapped, coefficient, hbar, out)
            _quad_term(term[: j - 1] + term[j + 1 :], -1j * hbar * coefficient, hbar, out)
            return
    _add(out, tuple(term), coefficient)


def normal_order(op: T, hbar: float = 1.0) -> T:
    """
    Rewrite an operator in normal-ordered form.

      - fermions: raising left of lowering, descending mode order in
        each block; a repeated factor annihilates the term
      - bosons: ascending mode order, raising left of lowering on
        each mode; factors of different modes commute
      - quadratures: q_i left of p_i on each mode, using [q, p] = i hbar

    :param op: fermion, boson or quad operator
    :param hbar: commutator scale for quadratures
    :return: normal-ordered operator
    """
    out: Dict[TermKey, complex] = {}
    if op.variant is Variant.FERMION:
        for key, value in op.terms.items():
            _fermion_term(list(key), value, out)
    elif op.variant is Variant.BOSON:
        for key, value in op.terms.items():
            _boson_term(list(key), value, out)
    elif op.variant is Variant.QUAD:
        for key, value in op.terms.items():
            _quad_term(list(key), value, hbar, out)
    else:
        raise UnsupportedVariantError("%s operators have no normal order" % op.variant)
    return op._from_terms(out)


def commutator(a: T, b: T, hbar: float = 1.0) -> T:
    """
    ab - ba, normal-ordered unless the operators are qubit operators.
    Exact zeros are removed.
    """
    result = a * b - b * a
    if result.variant is not Variant.QUBIT:
        result = normal_order(result, hbar)
    return result.compress(0.0)


def is_hermitian(op: TermOperator, tolerance: Optional[float] = None) -> bool:
    """
    :param tolerance: defaults to the configured ``hermiticity_tolerance``
    """
    if tolerance is None:
        tolerance = get_settings().hermiticity_tolerance
    difference = op - op.hermitian_conjugate()
    if difference.variant is not Variant.QUBIT:
        difference = normal_order(difference)
    return len(difference.compress(tolerance)) == 0


def is_normal_ordered(op: TermOperator) -> bool:
    return normal_order(op) == op


def count_modes(op: TermOperator) -> int:
    """
    :return: 1 + highest mode or qubit index, 0 when nothing acts.
    """
    return op.max_modes()


def number_operator(
    n_modes: int,
    mode: Optional[int] = None,
    coefficient: complex = 1.0,
    variant: Union[Variant, str] = Variant.FERMION,
) -> TermOperator:
    """
    Number operator on one mode, or summed over all ``n_modes`` modes.

    :param variant: fermion or boson
    """
    cls = operator_class(variant)
    if cls not in (FermionOperator, BosonOperator):
        raise UnsupportedVariantError("number operators are ladder operators")
    modes = range(n_modes) if mode is None else [mode]
    result = cls()
    for p in modes:
        result += cls(((p, Action.RAISE), (p, Action.LOWER)), coefficient)
    return result


def split_terms(op: T) -> List[Tuple[TermKey, T]]:
    """
    :return: one single-term operator per term, sorted by term.
    """
    return [(key, op._from_terms({key: value})) for key, value in op.items()]
