"""
Conversions between operator representations that are not qubit
encodings: ladder operators and quadratures, dense tensors and symbolic
operators, and quadratic Hamiltonians.
"""

import logging
from typing import Dict, Mapping, Optional, Sequence, Tuple, TypeVar, Union

import numpy

from ferminal._util import EnumShowNameOnly, max_abs
from ferminal.config import get_settings
from ferminal.exceptions import HermiticityError, NonQuadraticError, VariantMismatchError
from ferminal.ops import (
    Action,
    BosonOperator,
    FermionOperator,
    QuadKind,
    QuadOperator,
    TermOperator,
    Variant,
    normal_order,
)
from ferminal.quadratic.hamiltonian import QuadraticHamiltonian
from ferminal.tensors.interaction import InteractionTensor

logger = logging.getLogger(__name__)

T = TypeVar("T", bound=TermOperator)


class QuadDirection(EnumShowNameOnly):
    TO_QUAD = "boson->quad"
    TO_BOSON = "quad->boson"


def _boson_image(mode: int, label: Action, hbar: float) -> QuadOperator:
    # b = (q + ip)/sqrt(2 hbar), b^ = (q - ip)/sqrt(2 hbar)
    scale = 1.0 / numpy.sqrt(2.0 * hbar)
    sign = -1j if label is Action.RAISE else 1j
    return QuadOperator(((mode, QuadKind.Q),), scale) + QuadOperator(
        ((mode, QuadKind.P),), sign * scale
    )


def _quad_image(mode: int, label: QuadKind, hbar: float) -> BosonOperator:
    # q = sqrt(hbar/2)(b + b^), p = -i sqrt(hbar/2)(b - b^)
    scale = numpy.sqrt(hbar / 2.0)
    lower = BosonOperator(((mode, Action.LOWER),), scale)
    raise_ = BosonOperator(((mode, Action.RAISE),), scale)
    if label is QuadKind.Q:
        return lower + raise_
    return -1j * (lower - raise_)


def boson_quad_convert(
    op: TermOperator, direction: Union[QuadDirection, str], hbar: float = 1.0
) -> TermOperator:
    """
    Substitute ladder operators by quadratures or the reverse.

    :param op: boson operator for ``TO_QUAD``, quad operator for ``TO_BOSON``
    :param direction: :class:`QuadDirection` or its value
    :param hbar: positive commutator scale
    :return: expanded operator of the other variant
    """
    direction = QuadDirection(direction)
    if hbar <= 0:
        raise ValueError("hbar must be positive, got %r" % hbar)
    source = Variant.BOSON if direction is QuadDirection.TO_QUAD else Variant.QUAD
    if op.variant is not source:
        raise VariantMismatchError("%s needs a %s operator, got %s" % (direction, source, op.variant))

    target = QuadOperator if direction is QuadDirection.TO_QUAD else BosonOperator
    result = target()
    for term, coefficient in op.items():
        image = target((), coefficient)
        for mode, label in term:
            if direction is QuadDirection.TO_QUAD:
                image = image * _boson_image(mode, label, hbar)  # type: ignore[arg-type]
            else:
                image = image * _quad_image(mode, label, hbar)  # type: ignore[arg-type]
        result += image
    return result


def get_quad_operator(op: BosonOperator, hbar: float = 1.0) -> QuadOperator:
    return boson_quad_convert(op, QuadDirection.TO_QUAD, hbar)  # type: ignore[return-value]


def get_boson_operator(op: QuadOperator, hbar: float = 1.0) -> BosonOperator:
    return boson_quad_convert(op, QuadDirection.TO_BOSON, hbar)  # type: ignore[return-value]


def tensor_to_fermion(tensor: InteractionTensor) -> FermionOperator:
    """
    h0 + sum h_pq p^ q + 1/2 sum h_pqrs p^ q^ r s, skipping zero entries
    and the products that vanish identically (p == q or r == s).
    """
    result = FermionOperator((), tensor.constant)
    for p, q in zip(*numpy.nonzero(tensor.one_body)):
        result += FermionOperator(
            ((int(p), Action.RAISE), (int(q), Action.LOWER)), tensor.one_body[p, q]
        )
    for p, q, r, s in zip(*numpy.nonzero(tensor.two_body)):
        if p == q or r == s:
            continue
        result += FermionOperator(
            (
                (int(p), Action.RAISE),
                (int(q), Action.RAISE),
                (int(r), Action.LOWER),
                (int(s), Action.LOWER),
            ),
            0.5 * tensor.two_body[p, q, r, s],
        )
    logger.debug("tensor on %d modes -> %d fermion terms", tensor.n_modes, len(result))
    return result


def fermion_to_tensor(op: FermionOperator, n_modes: Optional[int] = None) -> InteractionTensor:
    """
    Inverse of :func:`tensor_to_fermion` for number-conserving operators of
    at most two-body order. The two-body part comes out antisymmetrized.
    """
    ordered = normal_order(op)
    if n_modes is None:
        n_modes = ordered.max_modes()
    tensor = InteractionTensor.zero(n_modes)
    one_body = tensor.one_body
    two_body = tensor.two_body
    constant = 0j
    for term, coefficient in ordered.items():
        actions = [action for _, action in term]
        modes = [mode for mode, _ in term]
        if any(mode >= n_modes for mode in modes):
            raise ValueError("term %s is outside %d modes" % (ordered.term_string(term), n_modes))
        if not term:
            constant += coefficient
        elif actions == [Action.RAISE, Action.LOWER]:
            one_body[modes[0], modes[1]] += coefficient
        elif actions == [Action.RAISE, Action.RAISE, Action.LOWER, Action.LOWER]:
            p, q, r, s = modes
            half = 0.5 * coefficient
            two_body[p, q, r, s] += half
            two_body[q, p, r, s] -= half
            two_body[p, q, s, r] -= half
            two_body[q, p, s, r] += half
        else:
            raise NonQuadraticError(
                "term %s has no place in an interaction tensor" % ordered.term_string(term)
            )
    return InteractionTensor(constant, one_body, two_body)


def extract_quadratic(
    op: FermionOperator,
    ignore_incompatible: bool = False,
    n_modes: Optional[int] = None,
    tolerance: Optional[float] = None,
) -> QuadraticHamiltonian:
    """
    Read M, Delta and the constant off a quadratic fermion operator.

    :param ignore_incompatible: drop terms that are not constant or
        quadratic instead of raising :class:`NonQuadraticError`
    :param tolerance: Hermiticity check, defaults to ``hermiticity_tolerance``
    """
    if op.variant is not Variant.FERMION:
        raise VariantMismatchError("expected a fermion operator, got %s" % op.variant)
    if tolerance is None:
        tolerance = get_settings().hermiticity_tolerance
    ordered = normal_order(op)
    if n_modes is None:
        n_modes = ordered.max_modes()
    hermitian = numpy.zeros((n_modes, n_modes), dtype=complex)
    pairing = numpy.zeros((n_modes, n_modes), dtype=complex)
    annihilating: Dict[Tuple[int, int], complex] = {}
    constant = 0j
    dropped = 0

    for term, coefficient in ordered.items():
        if not term:
            constant += coefficient
            continue
        if len(term) != 2:
            if not ignore_incompatible:
                raise NonQuadraticError("term %s is not quadratic" % ordered.term_string(term))
            dropped += 1
            continue
        (p, left), (q, right) = term
        if left is Action.RAISE and right is Action.LOWER:
            hermitian[p, q] += coefficient
        elif left is Action.RAISE:
            # p^ q^ with p > q
            pairing[p, q] += coefficient
            pairing[q, p] -= coefficient
        else:
            annihilating[(p, q)] = coefficient

    if dropped:
        logger.warning("dropped %d non-quadratic terms", dropped)
    if not numpy.allclose(hermitian, hermitian.conj().T, rtol=0, atol=tolerance):
        raise HermiticityError("one-body part is not Hermitian")
    for (p, q), value in annihilating.items():
        if abs(-numpy.conj(value) - pairing[p, q]) > tolerance:
            raise HermiticityError("term %d %d has no matching %d^ %d^" % (p, q, p, q))
    for p, q in zip(*numpy.nonzero(numpy.tril(pairing, -1))):
        if (int(p), int(q)) not in annihilating and abs(pairing[p, q]) > tolerance:
            raise HermiticityError("term %d^ %d^ has no matching %d %d" % (p, q, p, q))
    if abs(constant.imag) > tolerance:
        raise HermiticityError("constant %r is not real" % constant)
    logger.debug("quadratic hamiltonian on %d modes, max pairing %g", n_modes, max_abs(pairing))
    return QuadraticHamiltonian(hermitian, pairing, 0.0, constant.real, tolerance)


def relabel_modes(op: T, mapping: Union[Mapping[int, int], Sequence[int]]) -> T:
    """
    Rename the modes (or qubits) of an operator.

    :param mapping: old index -> new index; indices it leaves out stay put.
        Must be injective on the indices the operator uses.
    """
    lookup = dict(enumerate(mapping)) if isinstance(mapping, Sequence) else dict(mapping)
    used = {mode for term in op.terms for mode, _ in term}
    images = [lookup.get(mode, mode) for mode in used]
    if len(set(images)) != len(images):
        raise ValueError("mode relabeling is not one-to-one")
    cls = type(op)
    result = cls()
    for term, coefficient in op.items():
        result += cls([(lookup.get(mode, mode), label) for mode, label in term], coefficient)
    return result
