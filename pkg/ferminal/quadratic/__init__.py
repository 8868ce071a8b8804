"""
Quadratic Hamiltonians and fermionic Gaussian states.

  - :mod:`ferminal.quadratic.hamiltonian`: :class:`QuadraticHamiltonian`,
    :func:`diagonalize` into :class:`DiagonalForm`
  - :mod:`ferminal.quadratic.circuits`: Givens-rotation preparation
    circuits, their simulation and :func:`jw_gaussian_ground`

### Example

```python
from ferminal.models import mean_field_dwave
from ferminal.quadratic import gaussian_circuit, jw_gaussian_ground
from ferminal.transforms import extract_quadratic

qh = extract_quadratic(mean_field_dwave(2, 2, 2.0, 2.0))
circuit = gaussian_circuit(qh)
energy, state = jw_gaussian_ground(qh)
```
"""

from .hamiltonian import DiagonalForm, QuadraticHamiltonian, diagonalize
from .circuits import (
    CircuitDescription,
    GivensRotation,
    ParticleHoleTransform,
    gaussian_circuit,
    jw_gaussian_ground,
    simulate_circuit,
)

__all__ = [
    "DiagonalForm",
    "QuadraticHamiltonian",
    "diagonalize",
    "CircuitDescription",
    "GivensRotation",
    "ParticleHoleTransform",
    "gaussian_circuit",
    "jw_gaussian_ground",
    "simulate_circuit",
]
