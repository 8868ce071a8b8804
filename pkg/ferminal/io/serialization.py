"""
JSON layouts shared by the archive format and the command line.

Operators:

    {"variant": "fermion", "terms": [{"term": "1^ 0", "re": 0.5, "im": 0.0}, ...]}

The object adds the variant to the bare list of term records, which is
written with ``bare=True`` and accepted on input; the variant of a bare
list is read off the first factor (``X1`` qubit, ``q0`` quad, otherwise
fermion) unless given, so boson lists need it passed explicitly.

Complex arrays are nested lists whose innermost axis holds ``[re, im]``;
real arrays may omit that axis.
"""

import json
import logging
from typing import Any, Dict, Optional, Sequence, Tuple, Union

import numpy
from numpy.typing import NDArray

from ferminal.exceptions import SchemaError
from ferminal.ops import TermOperator, Variant, operator_class
from ferminal.quadratic import CircuitDescription
from ferminal.tensors import InteractionTensor

logger = logging.getLogger(__name__)


def _guess_variant(records: Sequence[Any]) -> Variant:
    for record in records:
        if isinstance(record, dict) and isinstance(record.get("term"), str) and record["term"].strip():
            first = record["term"].split()[0][0]
            if first in "XYZ":
                return Variant.QUBIT
            if first in "qp":
                return Variant.QUAD
            return Variant.FERMION
    return Variant.FERMION


def operator_to_json(op: TermOperator, bare: bool = False) -> Any:
    """
    :param bare: emit only the list of term records, without the variant
    """
    records = [
        {"term": op.term_string(term), "re": float(value.real), "im": float(value.imag)}
        for term, value in op.items()
    ]
    if bare:
        return records
    return {"variant": op.variant.value, "terms": records}


def operator_from_json(
    data: Any, variant: Optional[Union[Variant, str]] = None
) -> TermOperator:
    """
    :param data: decoded JSON, either the object form or a bare term list
    :param variant: overrides the stored or guessed variant
    :raises SchemaError: a record is missing a field or has the wrong type
    """
    if isinstance(data, dict):
        if "terms" not in data:
            raise SchemaError("terms", "missing")
        records = data["terms"]
        if variant is None:
            variant = data.get("variant", None)
    else:
        records = data
    if not isinstance(records, list):
        raise SchemaError("terms", "expected a list of term records")
    if variant is None:
        variant = _guess_variant(records)
    try:
        cls = operator_class(variant)
    except ValueError as error:
        raise SchemaError("variant", str(error)) from None

    result = cls()
    for index, record in enumerate(records):
        path = "terms[%d]" % index
        if not isinstance(record, dict):
            raise SchemaError(path, "expected an object")
        text = record.get("term")
        if not isinstance(text, str):
            raise SchemaError(path + ".term", "expected a string")
        parts = []
        for part in ("re", "im"):
            value = record.get(part, 0.0)
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise SchemaError("%s.%s" % (path, part), "expected a number, got %r" % (value,))
            parts.append(float(value))
        result += cls(text, complex(parts[0], parts[1]))
    logger.debug("read %s operator with %d terms", cls.variant, len(result))
    return result


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _check_outline(data: Any, path: str, ndim: int, n: int) -> None:
    # lengths along the first-entry spine and the type of one leaf
    node = data
    for axis in range(ndim):
        if not isinstance(node, list) or len(node) != n:
            raise SchemaError(path, "expected %d entries along axis %d" % (n, axis))
        if n == 0:
            return
        node = node[0]
    if isinstance(node, list):
        if len(node) != 2 or not all(_is_number(part) for part in node):
            raise SchemaError(path, "expected a number or an [re, im] pair")
    elif not _is_number(node):
        raise SchemaError(path, "expected a number, got %r" % (node,))


def check_tensor_json(data: Any, path: str = "", n_modes: Optional[int] = None) -> int:
    """
    Cheap layout check of an encoded tensor: required fields, ``n``, and
    the array lengths and element type, without decoding the arrays.

    :param n_modes: expected number of modes, when known
    :return: the stored number of modes
    :raises SchemaError: a field is missing or has the wrong layout
    """
    prefix = path + "." if path else ""
    if not isinstance(data, dict):
        raise SchemaError(path or "tensor", "expected an object")
    for name in ("n", "constant", "one_body", "two_body"):
        if name not in data:
            raise SchemaError(prefix + name, "missing")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise SchemaError(prefix + "n", "expected a non-negative integer, got %r" % (n,))
    if n_modes is not None and n != n_modes:
        raise SchemaError(prefix + "n", "expected %d modes, got %d" % (n_modes, n))
    constant = data["constant"]
    if not _is_number(constant) and not (
        isinstance(constant, list) and len(constant) == 2 and all(_is_number(part) for part in constant)
    ):
        raise SchemaError(prefix + "constant", "expected a number or an [re, im] pair")
    _check_outline(data["one_body"], prefix + "one_body", 2, n)
    _check_outline(data["two_body"], prefix + "two_body", 4, n)
    return n


def array_to_json(array: NDArray[Any]) -> Any:
    """
    Nested lists with a trailing [re, im] axis.
    """
    array = numpy.asarray(array, dtype=complex)
    return numpy.stack([array.real, array.imag], axis=-1).tolist()


def array_from_json(
    data: Any, path: str, ndim: int, shape: Optional[Tuple[int, ...]] = None
) -> NDArray[numpy.complex128]:
    """
    :param path: dotted field path used in error messages
    :param ndim: number of axes of the decoded array
    :param shape: exact shape, when known
    :raises SchemaError: ragged data, non-numbers or a wrong shape
    """
    try:
        raw = numpy.asarray(data, dtype=float)
    except (TypeError, ValueError):
        raise SchemaError(path, "expected a rectangular array of numbers") from None
    if shape is not None and raw.size == 0 and 0 in shape:
        return numpy.zeros(shape, dtype=complex)
    if raw.ndim == ndim + 1 and raw.shape[-1] == 2:
        array = raw[..., 0] + 1j * raw[..., 1]
    elif raw.ndim == ndim:
        array = raw.astype(complex)
    else:
        raise SchemaError(path, "expected %d axes, got shape %s" % (ndim, raw.shape))
    if shape is not None and array.shape != shape:
        raise SchemaError(path, "expected shape %s, got %s" % (shape, array.shape))
    return array


def complex_from_json(data: Any, path: str) -> complex:
    if _is_number(data):
        return complex(data)
    value = array_from_json(data, path, 0)
    return complex(value)


def tensor_to_json(tensor: InteractionTensor) -> Dict[str, Any]:
    return {
        "n": tensor.n_modes,
        "constant": [tensor.constant.real, tensor.constant.imag],
        "one_body": array_to_json(tensor.one_body),
        "two_body": array_to_json(tensor.two_body),
    }


def tensor_from_json(data: Any, path: str = "") -> InteractionTensor:
    """
    :param path: prefix of field paths in errors, e.g. ``"integrals"``
    """
    prefix = path + "." if path else ""
    n = check_tensor_json(data, path)
    return InteractionTensor(
        complex_from_json(data["constant"], prefix + "constant"),
        array_from_json(data["one_body"], prefix + "one_body", 2, (n, n)),
        array_from_json(data["two_body"], prefix + "two_body", 4, (n, n, n, n)),
    )


def circuit_to_json(circuit: CircuitDescription) -> Dict[str, Any]:
    return circuit.to_json()


def circuit_from_json(data: Any) -> CircuitDescription:
    try:
        return CircuitDescription.from_json(data)
    except (KeyError, TypeError) as error:
        raise SchemaError("operations", "malformed circuit (%s)" % error) from None


def dumps(data: Any) -> str:
    """
    Deterministic JSON text; floats keep their shortest round-trip form.
    """
    return json.dumps(data, indent=2, sort_keys=True)
