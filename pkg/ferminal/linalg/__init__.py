"""
Sparse operator matrices and exact numerics.

  - :mod:`ferminal.linalg.sparse`: :func:`to_sparse`, eigensolvers,
    expectation values, particle-number sectors

### Example

```python
from ferminal.ops import QubitOperator
from ferminal.linalg import to_sparse, eigenspectrum

number = 0.5 * (QubitOperator("") - QubitOperator("Z0"))
print(eigenspectrum(to_sparse(number)))  # [0. 1.]
```
"""

from .sparse import (
    basis_state,
    eigenspectrum,
    expectation,
    ground_state,
    is_hermitian,
    lowering_matrices,
    particle_number_indices,
    restrict_to_particle_number,
    to_sparse,
)

__all__ = [
    "basis_state",
    "eigenspectrum",
    "expectation",
    "ground_state",
    "is_hermitian",
    "lowering_matrices",
    "particle_number_indices",
    "restrict_to_particle_number",
    "to_sparse",
]
