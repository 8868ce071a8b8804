"""
Maps between operator representations.

  - :mod:`ferminal.transforms.fenwick`: :class:`FenwickTree` index sets
  - :mod:`ferminal.transforms.encodings`: :func:`jordan_wigner`, :func:`bravyi_kitaev`
  - :mod:`ferminal.transforms.fourier`: plane-wave <-> dual-basis modes
  - :mod:`ferminal.transforms.conversion`: ladder/quadrature conversion,
    tensors <-> operators, :func:`extract_quadratic`, :func:`relabel_modes`

### Example

```python
from ferminal.ops import FermionOperator
from ferminal.transforms import bravyi_kitaev, jordan_wigner

hop = FermionOperator("0^ 1") + FermionOperator("1^ 0")
print(jordan_wigner(hop))
print(bravyi_kitaev(hop, 4))
```
"""

from .fenwick import FenwickNode, FenwickTree
from .encodings import bravyi_kitaev, jordan_wigner
from .fourier import fourier_transform, inverse_fourier_transform
from .conversion import (
    QuadDirection,
    boson_quad_convert,
    extract_quadratic,
    fermion_to_tensor,
    get_boson_operator,
    get_quad_operator,
    relabel_modes,
    tensor_to_fermion,
)

__all__ = [
    "FenwickNode",
    "FenwickTree",
    "bravyi_kitaev",
    "jordan_wigner",
    "fourier_transform",
    "inverse_fourier_transform",
    "QuadDirection",
    "boson_quad_convert",
    "extract_quadratic",
    "fermion_to_tensor",
    "get_boson_operator",
    "get_quad_operator",
    "relabel_modes",
    "tensor_to_fermion",
]
