"""
Molpro-style FCIDUMP integral files.

The header is a Fortran namelist,

     &FCI NORB=   2,NELEC= 2,MS2=0,
      ORBSYM=1,1,
      ISYM=1,
     &END

followed by ``value i j k l`` lines with 1-based spatial orbital indices:
``i j k l`` all non-zero is the chemist-order integral (ij|kl), ``i j 0 0``
is h_ij and ``0 0 0 0`` is the core constant. Lines ``i 0 0 0`` (orbital
energies) are ignored.
"""

import logging
import re
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

import numpy
from numpy.typing import NDArray

from ferminal.exceptions import FcidumpError
from ferminal.tensors import InteractionTensor, unique_two_body_indices

logger = logging.getLogger(__name__)

DUPLICATE_TOLERANCE = 1e-10
FLOAT_FORMAT = " %.17g"

_HEADER_FIELD = re.compile(r"([A-Za-z_]\w*)\s*=\s*([^A-Za-z&/$=]*)")
_INTEGER = re.compile(r"-?\d+")


@dataclass
class FcidumpData:
    """
    Contents of an FCIDUMP file over spatial orbitals.
    """

    norb: int
    nelec: int
    one_body: NDArray[numpy.float64]
    """
    h_pq over spatial orbitals.
    """
    two_body: NDArray[numpy.float64]
    """
    Physicist order, h_pqrs = (ps|qr).
    """
    constant: float = 0.0
    ms2: int = 0
    orbsym: List[int] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.one_body.shape != (self.norb, self.norb) or self.two_body.shape != (self.norb,) * 4:
            raise ValueError("integral shapes do not match NORB=%d" % self.norb)

    def chemist_two_body(self) -> NDArray[numpy.float64]:
        """
        (ij|kl) as eri[i, j, k, l].
        """
        return numpy.ascontiguousarray(self.two_body.transpose(0, 3, 1, 2))

    def to_interaction_tensor(self) -> InteractionTensor:
        """
        Spin-orbital Hamiltonian, alpha on even and beta on odd modes.
        """
        return InteractionTensor.from_spatial(self.constant, self.one_body, self.two_body)


def _parse_header(lines: List[str]) -> Tuple[Dict[str, List[int]], int]:
    first = 0
    while first < len(lines) and not lines[first].strip():
        first += 1
    if first == len(lines) or "&FCI" not in lines[first].upper():
        raise FcidumpError("missing &FCI header", first + 1 if first < len(lines) else None)

    header = []
    end = first
    while True:
        if end == len(lines):
            raise FcidumpError("header is not terminated by &END")
        line = lines[end]
        stripped = line.strip().upper()
        terminated = "&END" in stripped or "$END" in stripped or stripped == "/" or stripped.endswith("/")
        header.append(re.sub(r"&END|\$END|&FCI|/", " ", line, flags=re.IGNORECASE))
        end += 1
        if terminated:
            break

    fields: Dict[str, List[int]] = {}
    for match in _HEADER_FIELD.finditer(" ".join(header)):
        fields[match.group(1).upper()] = [int(value) for value in _INTEGER.findall(match.group(2))]
    return fields, end


def _header_int(fields: Dict[str, List[int]], name: str, default: Optional[int] = None) -> int:
    values = fields.get(name)
    if not values:
        if default is None:
            raise FcidumpError("header has no %s" % name)
        return default
    return values[0]


def _two_body_key(i: int, j: int, k: int, l: int) -> Tuple[int, int, int, int]:
    ij = (max(i, j), min(i, j))
    kl = (max(k, l), min(k, l))
    return ij + kl if ij >= kl else kl + ij


def _store(
    seen: Dict[Tuple[int, ...], Tuple[float, int]], key: Tuple[int, ...], value: float, line: int
) -> bool:
    previous = seen.get(key)
    if previous is not None:
        if abs(previous[0] - value) > DUPLICATE_TOLERANCE:
            raise FcidumpError(
                "value %r contradicts %r given on line %d" % (value, previous[0], previous[1]), line
            )
        return False
    seen[key] = (value, line)
    return True


def _read_value(token: str, line: int) -> float:
    try:
        return float(token.replace("D", "E").replace("d", "e"))
    except ValueError:
        raise FcidumpError("cannot read value %r" % token, line) from None


def parse_fcidump(text: str) -> FcidumpData:
    """
    Parse the text of an FCIDUMP file.

    The two-electron lines may list any member of each eight-fold symmetry
    class; the full tensor is completed from them.

    :raises FcidumpError: missing header, out-of-range index or two lines
        giving different values to the same integral
    """
    lines = text.splitlines()
    fields, body = _parse_header(lines)
    norb = _header_int(fields, "NORB")
    nelec = _header_int(fields, "NELEC")
    ms2 = _header_int(fields, "MS2", 0)
    orbsym = fields.get("ORBSYM", [])
    if norb < 0 or nelec < 0:
        raise FcidumpError("NORB and NELEC must be non-negative, got %d and %d" % (norb, nelec))

    constant = 0.0
    one_body = numpy.zeros((norb, norb))
    eri = numpy.zeros((norb,) * 4)
    seen: Dict[Tuple[int, ...], Tuple[float, int]] = {}

    for number, line in enumerate(lines[body:], start=body + 1):
        tokens = line.split()
        if not tokens:
            continue
        if len(tokens) != 5:
            raise FcidumpError("expected a value and four indices, got %r" % line.strip(), number)
        value = _read_value(tokens[0], number)
        try:
            i, j, k, l = (int(token) for token in tokens[1:])
        except ValueError:
            raise FcidumpError("indices must be integers in %r" % line.strip(), number) from None
        for index in (i, j, k, l):
            if not 0 <= index <= norb:
                raise FcidumpError("index %d is out of range for NORB=%d" % (index, norb), number)

        if i == j == k == l == 0:
            if _store(seen, (0,), value, number):
                constant = value
        elif k == l == 0:
            if i == 0 or j == 0:
                continue
            p, q = i - 1, j - 1
            if _store(seen, (max(p, q), min(p, q)), value, number):
                one_body[p, q] = one_body[q, p] = value
        elif i and j and k and l:
            p, q, r, s = i - 1, j - 1, k - 1, l - 1
            if _store(seen, _two_body_key(p, q, r, s), value, number):
                for a, b in ((p, q), (q, p)):
                    for c, d in ((r, s), (s, r)):
                        eri[a, b, c, d] = eri[c, d, a, b] = value
        else:
            raise FcidumpError("unexpected index pattern %d %d %d %d" % (i, j, k, l), number)

    logger.debug("fcidump: NORB=%d NELEC=%d, %d distinct values", norb, nelec, len(seen))
    return FcidumpData(
        norb=norb,
        nelec=nelec,
        ms2=ms2,
        constant=constant,
        one_body=one_body,
        # h_iklj = (ij|kl)
        two_body=numpy.ascontiguousarray(eri.transpose(0, 2, 3, 1)),
        orbsym=orbsym,
    )


def load_fcidump(file_name: str) -> FcidumpData:
    with open(file_name, "r") as f:
        return parse_fcidump(f.read())


def _real(value: complex, what: str) -> float:
    if abs(numpy.imag(value)) > DUPLICATE_TOLERANCE:
        raise ValueError("%s %r is not real" % (what, value))
    return float(numpy.real(value))


def _dump_lines(data: FcidumpData) -> Iterator[str]:
    yield " &FCI NORB=%4d,NELEC=%2d,MS2=%d," % (data.norb, data.nelec, data.ms2)
    if data.orbsym:
        yield "  ORBSYM=%s" % ",".join(str(symmetry) for symmetry in data.orbsym)
    else:
        yield "  ORBSYM=%s" % ("1," * data.norb)
    yield "  ISYM=1,"
    yield " &END"

    eri = data.chemist_two_body()
    for i, j, k, l in unique_two_body_indices(data.norb):
        value = _real(eri[i, j, k, l], "integral")
        if value:
            yield (FLOAT_FORMAT + " %4d %4d %4d %4d") % (value, i + 1, j + 1, k + 1, l + 1)
    for i in range(data.norb):
        for j in range(i + 1):
            value = _real(data.one_body[i, j], "one-body integral")
            if value:
                yield (FLOAT_FORMAT + " %4d %4d    0    0") % (value, i + 1, j + 1)
    yield (FLOAT_FORMAT + "    0    0    0    0") % _real(data.constant, "constant")


def dump_fcidump(data: FcidumpData) -> str:
    """
    FCIDUMP text for real integrals with the eight-fold symmetry. Each
    symmetry class is written once, at full double precision, so parsing
    the text gives back the same integrals.
    """
    return "".join(line + "\n" for line in _dump_lines(data))


def write_fcidump(data: FcidumpData, file_name: str) -> None:
    with open(file_name, "w") as f:
        f.write(dump_fcidump(data))
