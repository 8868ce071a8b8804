"""
Model Hamiltonians.

  - :mod:`ferminal.models.grid`: :class:`PlaneWaveGrid`, :class:`Nucleus`
  - :mod:`ferminal.models.hubbard`: :func:`fermi_hubbard`, :func:`bose_hubbard`
  - :mod:`ferminal.models.jellium`: :func:`jellium` in the plane-wave and dual bases
  - :mod:`ferminal.models.dwave`: :func:`mean_field_dwave`

### Example

```python
from ferminal.models import PlaneWaveGrid, fermi_hubbard, jellium

hubbard = fermi_hubbard(4, 1, tunneling=1.0, coulomb=4.0, periodic=True)
gas = jellium(PlaneWaveGrid(dimensions=2, length=3, scale=1.0), basis="dual")
```
"""

from .grid import Nucleus, PlaneWaveGrid, nuclei_in_cell
from .hubbard import bose_hubbard, down, fermi_hubbard, lattice_bonds, up
from .jellium import (
    JelliumBasis,
    dual_basis_external_potential,
    dual_basis_kinetic,
    dual_basis_potential,
    jellium,
    plane_wave_external_potential,
    plane_wave_kinetic,
    plane_wave_potential,
)
from .dwave import mean_field_dwave

__all__ = [
    "Nucleus",
    "PlaneWaveGrid",
    "nuclei_in_cell",
    "bose_hubbard",
    "down",
    "fermi_hubbard",
    "lattice_bonds",
    "up",
    "JelliumBasis",
    "dual_basis_external_potential",
    "dual_basis_kinetic",
    "dual_basis_potential",
    "jellium",
    "plane_wave_external_potential",
    "plane_wave_kinetic",
    "plane_wave_potential",
    "mean_field_dwave",
]
