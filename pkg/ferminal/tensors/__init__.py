"""
Coefficient tensors.

  - :mod:`ferminal.tensors.interaction`: :class:`InteractionTensor`,
    active spaces, the measurement-count estimate
  - :mod:`ferminal.tensors.rotation`: :class:`BasisRotation`, :func:`rotate_basis`
  - :mod:`ferminal.tensors.rdm`: :class:`RDMTensor`, :func:`rdm_from_state`,
    :func:`rdm_energy`

### Example

```python
import numpy
from ferminal.tensors import InteractionTensor, rotate_basis

tensor = InteractionTensor.from_spatial(0.7, h_pq, h_pqrs)
swap = numpy.kron([[0, 1], [1, 0]], numpy.eye(2))
rotated = rotate_basis(tensor, swap)
```
"""

from .interaction import (
    InteractionTensor,
    active_space,
    measurement_bound,
    single_determinant_energy,
    spin_orbitals,
    unique_two_body_indices,
)
from .rotation import BasisRotation, rotate_basis
from .rdm import RDMTensor, is_antisymmetric_rdm, rdm_energy, rdm_from_state

__all__ = [
    "InteractionTensor",
    "active_space",
    "measurement_bound",
    "single_determinant_energy",
    "spin_orbitals",
    "unique_two_body_indices",
    "BasisRotation",
    "rotate_basis",
    "RDMTensor",
    "is_antisymmetric_rdm",
    "rdm_energy",
    "rdm_from_state",
]
