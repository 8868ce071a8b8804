"""
:mod:`ferminal` is a Python library for building second-quantized
fermionic and bosonic Hamiltonians, mapping them onto qubits, and
checking the results numerically at desk scale.

Contains:
  - Symbolic operators (:mod:`ferminal.ops`)
  - Fermion-to-qubit encodings and other maps (:mod:`ferminal.transforms`)
  - Integral and density-matrix tensors (:mod:`ferminal.tensors`)
  - Quadratic Hamiltonians and Gaussian states (:mod:`ferminal.quadratic`)
  - Model Hamiltonians (:mod:`ferminal.models`)
  - Sparse matrices and eigensolvers (:mod:`ferminal.linalg`)
  - Trotter error operators and QASM output (:mod:`ferminal.trotter`)
  - FCIDUMP and JSON persistence (:mod:`ferminal.io`)

### Example

```python
from ferminal.ops import FermionOperator, normal_order
from ferminal.transforms import jordan_wigner

w = FermionOperator("4^ 3 9 3^", 1 + 2j) - FermionOperator("2", 4)
print(normal_order(w))
print(jordan_wigner(w))
```

### Installation

`pip install .`

"""

__version__ = "0.0.1"
