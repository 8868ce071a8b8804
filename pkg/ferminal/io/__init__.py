"""
File formats.

  - :mod:`ferminal.io.fcidump`: FCIDUMP integral files
  - :mod:`ferminal.io.archive`: :class:`MolecularArchive`, JSON problem records
  - :mod:`ferminal.io.serialization`: JSON layouts of operators, tensors,
    arrays and circuits

### Example

```python
from ferminal.io import MolecularArchive, load_fcidump

data = load_fcidump("h2.FCIDUMP")
archive = MolecularArchive(
    [("H", (0, 0, 0)), ("H", (0, 0, 0.74))], "sto-3g", 1, 0,
    data.nelec, data.norb, integrals=data.to_interaction_tensor(),
)
archive.save("h2.json.gz")
```
"""

from .serialization import (
    array_from_json,
    array_to_json,
    check_tensor_json,
    circuit_from_json,
    circuit_to_json,
    dumps,
    operator_from_json,
    operator_to_json,
    tensor_from_json,
    tensor_to_json,
)
from .fcidump import FcidumpData, dump_fcidump, load_fcidump, parse_fcidump, write_fcidump
from .archive import MolecularArchive

__all__ = [
    "array_from_json",
    "array_to_json",
    "check_tensor_json",
    "circuit_from_json",
    "circuit_to_json",
    "dumps",
    "operator_from_json",
    "operator_to_json",
    "tensor_from_json",
    "tensor_to_json",
    "FcidumpData",
    "dump_fcidump",
    "load_fcidump",
    "parse_fcidump",
    "write_fcidump",
    "MolecularArchive",
]
