"""
Weighted sums of operator products, one class per algebra.

Terms are tuples of ``(mode, label)`` factors. The meaning of a term
depends on the variant:

  - fermion/boson: ``((4, RAISE), (3, LOWER))`` is a_4^ a_3, stored as written
  - qubit: ``((1, X), (2, Z))`` is X_1 Z_2, sorted by qubit, no repeats
  - quad: ``((0, Q), (1, P))`` is q_0 p_1, sorted by mode

Operators behave as immutable values: arithmetic always returns a new
object.
"""

import logging
import numbers
import re
from types import MappingProxyType
from typing import (
    Any,
    ClassVar,
    Dict,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Type,
    TypeVar,
    Union,
    cast,
)

import numpy

from ferminal._util import format_complex
from ferminal.exceptions import (
    InvalidTermError,
    TermParseError,
    VariantMismatchError,
)
from .enums import Action, PauliAxis, QuadKind, Variant

logger = logging.getLogger(__name__)

Label = Union[Action, PauliAxis, QuadKind]
Factor = Tuple[int, Label]
TermKey = Tuple[Factor, ...]
Scalar = Union[int, float, complex]
TermLike = Union[None, str, Sequence[Tuple[int, Any]]]

T = TypeVar("T", bound="TermOperator")

_TOKEN = re.compile(r"\S+")
_OPERATOR_LINE = re.compile(r"(\([^)]*\)|[^\s\[\]]+)\s*\[([^\]]*)\]")

# (left, right) -> (phase, product axis or None for identity)
_PAULI_TABLE: Dict[Tuple[PauliAxis, PauliAxis], Tuple[complex, Optional[PauliAxis]]] = {
    (PauliAxis.X, PauliAxis.X): (1, None),
    (PauliAxis.Y, PauliAxis.Y): (1, None),
    (PauliAxis.Z, PauliAxis.Z): (1, None),
    (PauliAxis.X, PauliAxis.Y): (1j, PauliAxis.Z),
    (PauliAxis.Y, PauliAxis.X): (-1j, PauliAxis.Z),
    (PauliAxis.Y, PauliAxis.Z): (1j, PauliAxis.X),
    (PauliAxis.Z, PauliAxis.Y): (-1j, PauliAxis.X),
    (PauliAxis.Z, PauliAxis.X): (1j, PauliAxis.Y),
    (PauliAxis.X, PauliAxis.Z): (-1j, PauliAxis.Y),
}


def _is_scalar(value: Any) -> bool:
    return isinstance(value, numbers.Number) and not isinstance(value, (bool, numpy.bool_))


def term_sort_key(term: TermKey) -> Tuple[Tuple[int, Any], ...]:
    """
    Ordering used wherever terms are listed: lexicographic over
    ``(mode, raw label value)``; the identity comes first.
    """
    return tuple((mode, label.value) for mode, label in term)


class TermOperator:
    """
    A sum of products of elementary operators with complex coefficients.

    Not meant to be used directly; use one of :class:`FermionOperator`,
    :class:`BosonOperator`, :class:`QubitOperator` or :class:`QuadOperator`.
    """

    variant: ClassVar[Variant]
    # numpy scalars defer to the reflected operators
    __array_ufunc__ = None

    def __init__(self, term: TermLike = None, coefficient: Scalar = 1.0) -> None:
        """
        Creates a single-term operator.

        :param term: (Optional)
            A term string such as ``"4^ 3 9 3^"`` or a sequence of
            ``(mode, label)`` pairs. The empty string or empty sequence is
            the identity. If not given, the operator is zero.

            Defaults to None.
        :param coefficient: complex weight of the term.
        """
        self._terms: Dict[TermKey, complex] = {}
        if term is None:
            return
        if not _is_scalar(coefficient):
            raise TypeError("coefficient must be a number, got %r" % (coefficient,))
        if isinstance(term, str):
            factors = self._parse_term(term)
        else:
            factors = [self._coerce_factor(f) for f in term]
        phase, key = self._canonical(factors)
        value = complex(coefficient) * phase
        if value != 0:
            self._terms[key] = value

    # variant hooks

    @classmethod
    def _coerce_label(cls, label: Any) -> Label:
        raise NotImplementedError

    @classmethod
    def _parse_token(cls, token: str, offset: int) -> Factor:
        raise NotImplementedError

    @classmethod
    def _format_factor(cls, factor: Factor) -> str:
        raise NotImplementedError

    @classmethod
    def _canonical(cls, factors: Sequence[Factor]) -> Tuple[complex, TermKey]:
        """
        Bring a factor list into the stored key form.

        :return: (phase picked up on the way, key)
        """
        return 1, tuple(factors)

    @classmethod
    def _product(cls, left: TermKey, right: TermKey) -> Tuple[complex, TermKey]:
        return cls._canonical(left + right)

    @classmethod
    def _adjoint_term(cls, term: TermKey) -> TermKey:
        raise NotImplementedError

    # construction helpers

    @classmethod
    def _coerce_factor(cls, factor: Tuple[int, Any]) -> Factor:
        try:
            mode, label = factor
        except (TypeError, ValueError):
            raise InvalidTermError("not a (mode, label) pair: %r" % (factor,)) from None
        if isinstance(mode, bool) or not isinstance(mode, numbers.Integral) or mode < 0:
            raise InvalidTermError("mode must be a non-negative integer, got %r" % (mode,))
        return int(mode), cls._coerce_label(label)

    @classmethod
    def _parse_term(cls, text: str) -> List[Factor]:
        return [cls._parse_token(m.group(), m.start()) for m in _TOKEN.finditer(text)]

    @classmethod
    def _from_terms(cls: Type[T], terms: Mapping[TermKey, complex]) -> T:
        op = cls()
        op._terms = {k: complex(v) for k, v in terms.items() if v != 0}
        return op

    @classmethod
    def identity(cls: Type[T]) -> T:
        return cls((), 1.0)

    @classmethod
    def zero(cls: Type[T]) -> T:
        return cls()

    @classmethod
    def from_string(cls: Type[T], text: str) -> T:
        """
        Parse the multi-term form produced by ``str(op)``.

        :param text: lines like ``(1+2j) [4^ 3]`` joined by ``+``
        :return: operator
        """
        result: Dict[TermKey, complex] = {}
        if text.strip() == "0":
            return cls()
        position = 0
        for match in _OPERATOR_LINE.finditer(text):
            gap = text[position : match.start()].strip()
            if gap not in ("", "+"):
                raise TermParseError("unexpected text %r" % gap, position)
            try:
                coefficient = complex(match.group(1))
            except ValueError:
                raise TermParseError(
                    "bad coefficient %r" % match.group(1), match.start(1)
                ) from None
            phase, key = cls._canonical(cls._parse_term(match.group(2)))
            result[key] = result.get(key, 0) + phase * coefficient
            position = match.end()
        if text[position:].strip() not in ("", "+"):
            raise TermParseError("unexpected text %r" % text[position:].strip(), position)
        return cls._from_terms(result)

    # views

    @property
    def terms(self) -> Mapping[TermKey, complex]:
        """
        Read-only view of the term map.
        """
        return MappingProxyType(self._terms)

    def items(self) -> List[Tuple[TermKey, complex]]:
        """
        :return: (term, coefficient) pairs sorted by term.
        """
        return sorted(self._terms.items(), key=lambda kv: term_sort_key(kv[0]))

    def __iter__(self) -> Iterator[Tuple[TermKey, complex]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def term_string(self, term: TermKey) -> str:
        return " ".join(self._format_factor(f) for f in term)

    def constant(self) -> complex:
        """
        :return: coefficient of the identity term.
        """
        return self._terms.get((), 0j)

    def max_modes(self) -> int:
        """
        :return: 1 + highest mode index, 0 for the identity or zero operator.
        """
        return max((mode + 1 for term in self._terms for mode, _ in term), default=0)

    def many_body_order(self) -> int:
        """
        :return: length of the longest term.
        """
        return max((len(term) for term in self._terms), default=0)

    # algebra

    def _check_variant(self, other: "TermOperator") -> None:
        if other.variant != self.variant:
            raise VariantMismatchError(
                "cannot combine %s and %s operators" % (self.variant, other.variant)
            )

    def _operand(self, other: Any) -> Optional["TermOperator"]:
        if _is_scalar(other):
            return type(self)((), other)
        if isinstance(other, TermOperator):
            self._check_variant(other)
            return other
        return None

    def _combine(self: T, other: "TermOperator", sign: int) -> T:
        result = dict(self._terms)
        for key, value in other._terms.items():
            total = result.get(key, 0) + sign * value
            if total == 0:
                result.pop(key, None)
            else:
                result[key] = total
        return self._from_terms(result)

    def __add__(self: T, other: Any) -> T:
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return self._combine(operand, 1)

    def __radd__(self: T, other: Any) -> T:
        return self.__add__(other)

    def __sub__(self: T, other: Any) -> T:
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return self._combine(operand, -1)

    def __rsub__(self: T, other: Any) -> T:
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return (-self)._combine(operand, 1)

    def __neg__(self: T) -> T:
        return self._from_terms({k: -v for k, v in self._terms.items()})

    def __mul__(self: T, other: Any) -> T:
        if _is_scalar(other):
            return self._from_terms({k: v * other for k, v in self._terms.items()})
        if not isinstance(other, TermOperator):
            return NotImplemented
        self._check_variant(other)
        result: Dict[TermKey, complex] = {}
        for left, a in self._terms.items():
            for right, b in other._terms.items():
                phase, key = self._product(left, right)
                result[key] = result.get(key, 0) + phase * a * b
        return self._from_terms(result)

    def __rmul__(self: T, other: Any) -> T:
        if _is_scalar(other):
            return self._from_terms({k: other * v for k, v in self._terms.items()})
        return NotImplemented

    def __truediv__(self: T, other: Any) -> T:
        if not _is_scalar(other):
            return NotImplemented
        return self._from_terms({k: v / other for k, v in self._terms.items()})

    def __pow__(self: T, exponent: int) -> T:
        if isinstance(exponent, bool) or not isinstance(exponent, int):
            raise TypeError("exponent must be an integer, got %r" % (exponent,))
        if exponent < 0:
            raise ValueError("exponent must be non-negative, got %d" % exponent)
        result = self.identity()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, TermOperator):
            return NotImplemented
        return self.variant == other.variant and self._terms == other._terms

    def isclose(self, other: "TermOperator", tolerance: float = 1e-12) -> bool:
        """
        Compare term maps coefficient by coefficient.

        :param other: operator of the same variant
        :param tolerance: largest allowed coefficient difference
        """
        self._check_variant(other)
        for key in set(self._terms) | set(other._terms):
            if abs(self._terms.get(key, 0) - other._terms.get(key, 0)) > tolerance:
                return False
        return True

    def hermitian_conjugate(self: T) -> T:
        """
        Adjoint: coefficients conjugated, factor order reversed and
        ladder actions flipped.
        """
        result: Dict[TermKey, complex] = {}
        for key, value in self._terms.items():
            adjoint = self._adjoint_term(key)
            result[adjoint] = result.get(adjoint, 0) + value.conjugate()
        return self._from_terms(result)

    def compress(self: T, tolerance: float = 1e-12) -> T:
        """
        Drop terms whose coefficient magnitude is at most ``tolerance``.
        """
        if tolerance < 0:
            raise ValueError("tolerance must be non-negative, got %r" % tolerance)
        return self._from_terms(
            {k: v for k, v in self._terms.items() if abs(v) > tolerance}
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " +\n".join(
            "%s [%s]" % (format_complex(value), self.term_string(key))
            for key, value in self.items()
        )

    def __repr__(self) -> str:
        return "%s(%d terms)" % (type(self).__name__, len(self._terms))


class _LadderOperator(TermOperator):
    @classmethod
    def _coerce_label(cls, label: Any) -> Label:
        if isinstance(label, Action):
            return label
        if isinstance(label, bool) or not isinstance(label, numbers.Integral):
            raise InvalidTermError("not a ladder action: %r" % (label,))
        try:
            return Action(int(label))
        except ValueError:
            raise InvalidTermError("not a ladder action: %r" % (label,)) from None

    @classmethod
    def _parse_token(cls, token: str, offset: int) -> Factor:
        match = re.fullmatch(r"(\d+)(\^?)", token)
        if match is None:
            raise TermParseError("malformed ladder token %r" % token, offset)
        return int(match.group(1)), Action.RAISE if match.group(2) else Action.LOWER

    @classmethod
    def _format_factor(cls, factor: Factor) -> str:
        mode, action = factor
        return "%d^" % mode if action is Action.RAISE else "%d" % mode

    @classmethod
    def _adjoint_term(cls, term: TermKey) -> TermKey:
        flipped = [(mode, cast(Action, action).flipped()) for mode, action in reversed(term)]
        return cls._canonical(flipped)[1]


class FermionOperator(_LadderOperator):
    """
    Products of fermionic ladder operators, e.g. ``FermionOperator("4^ 3", 0.5)``.

    Terms are stored exactly as written; use
    :func:`ferminal.ops.normal_order.normal_order` to reach the canonical form.
    """

    variant = Variant.FERMION


class BosonOperator(_LadderOperator):
    """
    Products of bosonic ladder operators. Factors on different modes
    commute, so terms are sorted by mode on construction; the written
    order within a mode is kept.
    """

    variant = Variant.BOSON

    @classmethod
    def _canonical(cls, factors: Sequence[Factor]) -> Tuple[complex, TermKey]:
        return 1, tuple(sorted(factors, key=lambda f: f[0]))


class QuadOperator(TermOperator):
    """
    Products of quadrature operators q_i and p_i, e.g. ``QuadOperator("q0 p1 q3")``.
    Sorted by mode on construction like :class:`BosonOperator`.
    """

    variant = Variant.QUAD

    @classmethod
    def _coerce_label(cls, label: Any) -> Label:
        try:
            return QuadKind(label)
        except ValueError:
            raise InvalidTermError("not a quadrature: %r" % (label,)) from None

    @classmethod
    def _parse_token(cls, token: str, offset: int) -> Factor:
        match = re.fullmatch(r"([qp])(\d+)", token)
        if match is None:
            raise TermParseError("malformed quadrature token %r" % token, offset)
        return int(match.group(2)), QuadKind(match.group(1))

    @classmethod
    def _format_factor(cls, factor: Factor) -> str:
        return "%s%d" % (factor[1].value, factor[0])

    @classmethod
    def _canonical(cls, factors: Sequence[Factor]) -> Tuple[complex, TermKey]:
        return 1, tuple(sorted(factors, key=lambda f: f[0]))

    @classmethod
    def _adjoint_term(cls, term: TermKey) -> TermKey:
        return cls._canonical(list(reversed(term)))[1]


class QubitOperator(TermOperator):
    """
    Sums of Pauli strings, e.g. ``QubitOperator("X0 Z1 Y3", 0.5)``.

    Products on the same qubit are resolved as soon as they appear, so
    every stored term touches each qubit at most once.
    """

    variant = Variant.QUBIT

    @classmethod
    def _coerce_label(cls, label: Any) -> Label:
        try:
            return PauliAxis(label)
        except ValueError:
            raise InvalidTermError("not a Pauli axis: %r" % (label,)) from None

    @classmethod
    def _parse_token(cls, token: str, offset: int) -> Factor:
        match = re.fullmatch(r"([XYZ])(\d+)", token)
        if match is None:
            raise TermParseError("malformed Pauli token %r" % token, offset)
        return int(match.group(2)), PauliAxis(match.group(1))

    @classmethod
    def _format_factor(cls, factor: Factor) -> str:
        return "%s%d" % (factor[1].value, factor[0])

    @classmethod
    def _canonical(cls, factors: Sequence[Factor]) -> Tuple[complex, TermKey]:
        ordered = sorted(factors, key=lambda f: f[0])
        for previous, current in zip(ordered, ordered[1:]):
            if previous[0] == current[0]:
                raise InvalidTermError("qubit %d appears twice in one term" % current[0])
        return 1, tuple(ordered)

    @classmethod
    def _product(cls, left: TermKey, right: TermKey) -> Tuple[complex, TermKey]:
        phase: complex = 1
        merged: List[Factor] = []
        i = j = 0
        while i < len(left) and j < len(right):
            if left[i][0] < right[j][0]:
                merged.append(left[i])
                i += 1
            elif left[i][0] > right[j][0]:
                merged.append(right[j])
                j += 1
            else:
                factor_phase, axis = _PAULI_TABLE[
                    (cast(PauliAxis, left[i][1]), cast(PauliAxis, right[j][1]))
                ]
                phase *= factor_phase
                if axis is not None:
                    merged.append((left[i][0], axis))
                i += 1
                j += 1
        merged.extend(left[i:])
        merged.extend(right[j:])
        return phase, tuple(merged)

    @classmethod
    def _adjoint_term(cls, term: TermKey) -> TermKey:
        return term


OPERATOR_CLASSES: Dict[Variant, Type[TermOperator]] = {
    Variant.FERMION: FermionOperator,
    Variant.BOSON: BosonOperator,
    Variant.QUBIT: QubitOperator,
    Variant.QUAD: QuadOperator,
}


def operator_class(variant: Union[Variant, str]) -> Type[TermOperator]:
    """
    :param variant: a :class:`Variant` or its name such as ``"fermion"``
    """
    try:
        return OPERATOR_CLASSES[Variant(variant)]
    except ValueError:
        raise ValueError("unknown operator variant %r" % (variant,)) from None


def parse(variant: Union[Variant, str], text: str, coefficient: Scalar = 1.0) -> TermOperator:
    """
    Build a single-term operator from its string form.

    :param variant: operator algebra
    :param text: term string; empty for the identity
    :param coefficient: weight
    """
    return operator_class(variant)(text, coefficient)


def hermitian_conjugate(op: T) -> T:
    return op.hermitian_conjugate()


def compress(op: T, tolerance: Optional[float] = None) -> T:
    """
    :param tolerance: defaults to the configured ``compress_tolerance``
    """
    if tolerance is None:
        from ferminal.config import get_settings

        tolerance = get_settings().compress_tolerance
    return op.compress(tolerance)
