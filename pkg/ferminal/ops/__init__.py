"""
Symbolic operator algebras.

  - :mod:`ferminal.ops.enums`: variants and factor labels
  - :mod:`ferminal.ops.operator`: :class:`FermionOperator`, :class:`BosonOperator`,
    :class:`QubitOperator`, :class:`QuadOperator`
  - :mod:`ferminal.ops.normal_order`: normal ordering, commutators, Hermiticity

### Example

```python
from ferminal.ops import FermionOperator, normal_order

w = FermionOperator("4^ 3 9 3^", 1 + 2j) - FermionOperator("2", 4)
assert len(normal_order(w ** 4)) == 0
```
"""

from .enums import Action, PauliAxis, QuadKind, Variant
from .operator import (
    BosonOperator,
    FermionOperator,
    QuadOperator,
    QubitOperator,
    TermKey,
    TermOperator,
    compress,
    hermitian_conjugate,
    operator_class,
    parse,
    term_sort_key,
)
from .normal_order import (
    commutator,
    count_modes,
    is_hermitian,
    is_normal_ordered,
    normal_order,
    number_operator,
    split_terms,
)

__all__ = [
    "Action",
    "PauliAxis",
    "QuadKind",
    "Variant",
    "BosonOperator",
    "FermionOperator",
    "QuadOperator",
    "QubitOperator",
    "TermKey",
    "TermOperator",
    "compress",
    "hermitian_conjugate",
    "operator_class",
    "parse",
    "term_sort_key",
    "commutator",
    "count_modes",
    "is_hermitian",
    "is_normal_ordered",
    "normal_order",
    "number_operator",
    "split_terms",
]
