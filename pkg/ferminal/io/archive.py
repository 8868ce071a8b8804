"""
Molecular problem records persisted as (optionally gzip-compressed) JSON.

    {
      "format": "ferminal-archive",
      "version": 1,
      "geometry": [["H", [0.0, 0.0, 0.0]], ["H", [0.0, 0.0, 0.74]]],
      "basis": "sto-3g",
      "multiplicity": 1,
      "charge": 0,
      "n_electrons": 2,
      "n_orbitals": 2,
      "integrals": {"n": 4, "constant": [re, im], "one_body": ..., "two_body": ...},
      "reference_energies": {"fci": -1.137...},
      "provenance": "free text"
    }

Geometry is in angstrom. The integral arrays are decoded on first access.
"""

import gzip
import json
import logging
from typing import Any, BinaryIO, Dict, List, Optional, Sequence, Tuple

from ferminal.exceptions import SchemaError, VersionMismatchError
from ferminal.tensors import InteractionTensor, active_space
from .serialization import check_tensor_json, tensor_from_json, tensor_to_json

logger = logging.getLogger(__name__)

FORMAT_NAME = "ferminal-archive"
FORMAT_VERSION = 1
GZIP_MAGIC = b"\x1f\x8b"
REFERENCE_METHODS = ("hf", "mp2", "cisd", "ccsd", "fci")

Atom = Tuple[str, Tuple[float, float, float]]


def _integer(data: Dict[str, Any], name: str) -> int:
    if name not in data:
        raise SchemaError(name, "missing")
    value = data[name]
    if not isinstance(value, int) or isinstance(value, bool):
        raise SchemaError(name, "expected an integer, got %r" % (value,))
    return value


def _number(value: Any, path: str) -> float:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise SchemaError(path, "expected a number, got %r" % (value,))
    return float(value)


def _geometry(data: Any) -> List[Atom]:
    if not isinstance(data, list):
        raise SchemaError("geometry", "expected a list of atoms")
    atoms = []
    for index, entry in enumerate(data):
        path = "geometry[%d]" % index
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not isinstance(entry[0], str)
            or not isinstance(entry[1], list)
            or len(entry[1]) != 3
        ):
            raise SchemaError(path, "expected [label, [x, y, z]]")
        x, y, z = (_number(value, path) for value in entry[1])
        atoms.append((entry[0], (x, y, z)))
    return atoms


class MolecularArchive:
    """
    A molecule together with its spin-orbital Hamiltonian and whatever
    reference energies were computed for it.
    """

    def __init__(
        self,
        geometry: Sequence[Atom],
        basis: str,
        multiplicity: int,
        charge: int,
        n_electrons: int,
        n_orbitals: int,
        integrals: Optional[InteractionTensor] = None,
        reference_energies: Optional[Dict[str, float]] = None,
        provenance: str = "",
    ) -> None:
        self.geometry: List[Atom] = [
            (label, (float(x), float(y), float(z))) for label, (x, y, z) in geometry
        ]
        """
        (atom label, position in angstrom) pairs.
        """
        self.basis: str = basis
        self.multiplicity: int = multiplicity
        """
        2S + 1.
        """
        self.charge: int = charge
        """
        Electrons of the neutral molecule minus electrons of this system.
        """
        self.n_electrons: int = n_electrons
        self.n_orbitals: int = n_orbitals
        """
        Spatial orbitals; the integrals act on twice as many spin-orbitals.
        """
        self.reference_energies: Dict[str, float] = dict(reference_energies or {})
        self.provenance: str = provenance
        self._integrals: Optional[InteractionTensor] = integrals
        self._raw_integrals: Optional[Any] = None
        self.validate()

    @property
    def n_qubits(self) -> int:
        return 2 * self.n_orbitals

    @property
    def integrals(self) -> InteractionTensor:
        """
        Spin-orbital Hamiltonian, decoded from the file on first access.

        :raises SchemaError: the stored arrays are malformed
        """
        if self._integrals is None:
            if self._raw_integrals is None:
                self._integrals = InteractionTensor.zero(self.n_qubits)
            else:
                tensor = tensor_from_json(self._raw_integrals, "integrals")
                if tensor.n_modes != self.n_qubits:
                    raise SchemaError(
                        "integrals.n",
                        "expected %d spin-orbitals for %d orbitals, got %d"
                        % (self.n_qubits, self.n_orbitals, tensor.n_modes),
                    )
                logger.debug("decoded integrals over %d spin-orbitals", tensor.n_modes)
                self._integrals = tensor
                self._raw_integrals = None
        return self._integrals

    @integrals.setter
    def integrals(self, tensor: InteractionTensor) -> None:
        self._integrals = tensor
        self._raw_integrals = None

    def validate(self) -> None:
        """
        :raises SchemaError: inconsistent spin, electron or orbital counts
        """
        if self.multiplicity < 1:
            raise SchemaError("multiplicity", "must be at least 1, got %d" % self.multiplicity)
        if self.n_electrons < 0 or self.n_orbitals < 0:
            raise SchemaError("n_electrons", "electron and orbital counts must be non-negative")
        if (self.n_electrons + self.multiplicity) % 2 == 0:
            raise SchemaError(
                "multiplicity",
                "%d electrons cannot have multiplicity %d" % (self.n_electrons, self.multiplicity),
            )
        if self.multiplicity - 1 > self.n_electrons:
            raise SchemaError(
                "multiplicity", "%d electrons cannot reach multiplicity %d" % (self.n_electrons, self.multiplicity)
            )
        if self.n_electrons > self.n_qubits:
            raise SchemaError(
                "n_electrons", "%d electrons do not fit in %d spin-orbitals" % (self.n_electrons, self.n_qubits)
            )
        if self._integrals is not None and self._integrals.n_modes != self.n_qubits:
            raise SchemaError(
                "integrals.n", "expected %d spin-orbitals, got %d" % (self.n_qubits, self._integrals.n_modes)
            )
        for method, energy in self.reference_energies.items():
            if method not in REFERENCE_METHODS:
                raise SchemaError("reference_energies.%s" % method, "unknown method")
            _number(energy, "reference_energies.%s" % method)

    def get_molecular_hamiltonian(self) -> InteractionTensor:
        return self.integrals

    def get_active_space(
        self, occupied: Sequence[int], active: Sequence[int]
    ) -> "MolecularArchive":
        """
        Archive of the active-space problem: occupied orbitals are frozen
        into the constant and the remaining ones dropped.

        :param occupied: spatial orbitals kept doubly occupied
        :param active: spatial orbitals that stay in the problem
        """
        core, tensor = active_space(self.integrals, occupied, active)
        tensor = InteractionTensor(core, tensor.one_body, tensor.two_body)
        provenance = "active space of %s frozen, %s active" % (list(occupied), list(active))
        if self.provenance:
            provenance = self.provenance + "; " + provenance
        return MolecularArchive(
            self.geometry,
            self.basis,
            self.multiplicity,
            self.charge,
            self.n_electrons - 2 * len(occupied),
            len(active),
            integrals=tensor,
            provenance=provenance,
        )

    # persistence

    def to_json(self) -> Dict[str, Any]:
        return {
            "format": FORMAT_NAME,
            "version": FORMAT_VERSION,
            "geometry": [[label, list(position)] for label, position in self.geometry],
            "basis": self.basis,
            "multiplicity": self.multiplicity,
            "charge": self.charge,
            "n_electrons": self.n_electrons,
            "n_orbitals": self.n_orbitals,
            "integrals": tensor_to_json(self.integrals),
            "reference_energies": dict(sorted(self.reference_energies.items())),
            "provenance": self.provenance,
        }

    @classmethod
    def from_json(cls, data: Any) -> "MolecularArchive":
        """
        :raises SchemaError: a field is missing or malformed
        :raises VersionMismatchError: the file was written by another format version
        """
        if not isinstance(data, dict):
            raise SchemaError("archive", "expected an object")
        if data.get("format") != FORMAT_NAME:
            raise SchemaError("format", "expected %r, got %r" % (FORMAT_NAME, data.get("format")))
        version = data.get("version")
        if version != FORMAT_VERSION:
            raise VersionMismatchError("archive version %r is not supported (expected %d)" % (version, FORMAT_VERSION))
        basis = data.get("basis", "")
        if not isinstance(basis, str):
            raise SchemaError("basis", "expected a string")
        references = data.get("reference_energies") or {}
        if not isinstance(references, dict):
            raise SchemaError("reference_energies", "expected an object")
        archive = cls(
            _geometry(data.get("geometry", [])),
            basis,
            _integer(data, "multiplicity"),
            _integer(data, "charge"),
            _integer(data, "n_electrons"),
            _integer(data, "n_orbitals"),
            reference_energies={
                str(method): _number(energy, "reference_energies.%s" % method)
                for method, energy in references.items()
            },
            provenance=str(data.get("provenance", "")),
        )
        if "integrals" not in data:
            raise SchemaError("integrals", "missing")
        # layout is checked now, the arrays are decoded on first access
        check_tensor_json(data["integrals"], "integrals", archive.n_qubits)
        archive._raw_integrals = data["integrals"]
        return archive

    def save(self, file_name: str, compress: Optional[bool] = None) -> None:
        """
        :param compress: gzip the file; by default only when the name ends in ``.gz``
        """
        if compress is None:
            compress = file_name.endswith(".gz")
        text = json.dumps(self.to_json(), sort_keys=True).encode("utf-8")
        if compress:
            with gzip.open(file_name, "wb") as f:
                f.write(text)
        else:
            with open(file_name, "wb") as f:
                f.write(text)
        logger.debug("saved archive to %s (%d bytes uncompressed)", file_name, len(text))

    @classmethod
    def load_from_file(cls, file_name: str) -> "MolecularArchive":
        """
        Load an archive from a file name. The file may either be compressed or uncompressed.
        """
        with open(file_name, "rb") as f:
            detect_magic = f.peek(len(GZIP_MAGIC))[: len(GZIP_MAGIC)]
            if detect_magic == GZIP_MAGIC:
                return cls.load_from_bytes(gzip.decompress(f.read()))
            return cls.load_from_stream(f)

    @classmethod
    def load_from_bytes(cls, data: bytes) -> "MolecularArchive":
        if data[: len(GZIP_MAGIC)] == GZIP_MAGIC:
            data = gzip.decompress(data)
        try:
            decoded = json.loads(data.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as error:
            raise SchemaError("archive", "not valid JSON (%s)" % error) from None
        return cls.from_json(decoded)

    @classmethod
    def load_from_stream(cls, stream: BinaryIO) -> "MolecularArchive":
        return cls.load_from_bytes(stream.read())

    def __repr__(self) -> str:
        return "MolecularArchive(%s, basis=%r, n_electrons=%d, n_orbitals=%d)" % (
            "".join(label for label, _ in self.geometry) or "-",
            self.basis,
            self.n_electrons,
            self.n_orbitals,
        )
