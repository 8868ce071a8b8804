"""
Mean-field d-wave superconductor.
"""

import logging

from ferminal.ops import FermionOperator
from .hubbard import _hopping, down, lattice_bonds, up

logger = logging.getLogger(__name__)


def mean_field_dwave(
    x_dimension: int,
    y_dimension: int,
    tunneling: float,
    sc_gap: float,
    chemical_potential: float = 0.0,
    periodic: bool = True,
) -> FermionOperator:
    """
    -t sum_<ij>,s (a_is^ a_js + h.c.) - mu sum_i,s n_is
    - sum_<ij> D_ij (a_iu^ a_jd^ - a_id^ a_ju^ + h.c.)

    with D_ij = -sc_gap/2 on horizontal bonds and +sc_gap/2 on vertical
    bonds, the d_{x^2-y^2} sign pattern.
    """
    hopping = FermionOperator()
    pairing = FermionOperator()
    for site, neighbour, horizontal in lattice_bonds(x_dimension, y_dimension, periodic):
        if tunneling:
            hopping += _hopping(up(site), up(neighbour), -tunneling)
            hopping += _hopping(down(site), down(neighbour), -tunneling)
        gap = 0.5 * sc_gap if horizontal else -0.5 * sc_gap
        if gap:
            pairing += FermionOperator("%d^ %d^" % (up(site), down(neighbour)), gap)
            pairing += FermionOperator("%d^ %d^" % (down(site), up(neighbour)), -gap)
    if chemical_potential:
        for site in range(x_dimension * y_dimension):
            hopping += FermionOperator("%d^ %d" % (up(site), up(site)), -chemical_potential)
            hopping += FermionOperator("%d^ %d" % (down(site), down(site)), -chemical_potential)
    return hopping + pairing + pairing.hermitian_conjugate()
