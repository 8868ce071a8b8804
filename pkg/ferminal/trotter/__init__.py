"""
Trotterization.

  - :mod:`ferminal.trotter.error`: :class:`TermSequence`, the leading
    Trotter error operator and the symmetric Trotter step
  - :mod:`ferminal.trotter.qasm`: QASM listings of exponentiated Pauli strings

### Example

```python
from ferminal.ops import QubitOperator
from ferminal.trotter import qasm_text

print(qasm_text([QubitOperator("X0 Z1 Y3", 0.5), QubitOperator("Z3 Z4", 0.6)]))
```
"""

from .error import (
    TermSequence,
    effective_hamiltonian,
    second_order_trotter_unitary,
    trotter_error_bound,
    trotter_error_v1,
)
from .qasm import pauli_exp_to_qasm, qasm_lines, qasm_text, qasm_to_matrix

__all__ = [
    "TermSequence",
    "effective_hamiltonian",
    "second_order_trotter_unitary",
    "trotter_error_bound",
    "trotter_error_v1",
    "pauli_exp_to_qasm",
    "qasm_lines",
    "qasm_text",
    "qasm_to_matrix",
]
