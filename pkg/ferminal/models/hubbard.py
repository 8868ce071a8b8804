"""
Hubbard models on an x_dimension by y_dimension rectangular lattice.

Sites are numbered row by row, site = x + x_dimension * y. In the spinful
Fermi-Hubbard model site i carries the spin-orbitals 2i (up) and 2i + 1
(down).
"""

import logging
from typing import Iterator, Tuple

from ferminal.ops import BosonOperator, FermionOperator

logger = logging.getLogger(__name__)


def up(site: int) -> int:
    return 2 * site


def down(site: int) -> int:
    return 2 * site + 1


def lattice_bonds(
    x_dimension: int, y_dimension: int, periodic: bool
) -> Iterator[Tuple[int, int, bool]]:
    """
    Nearest-neighbour bonds, each listed once from a site to its right or
    bottom neighbour. An axis wraps around only when it is periodic and
    longer than two sites.

    :return: iterator of (site, neighbour, horizontal)
    """
    if x_dimension < 1 or y_dimension < 1:
        raise ValueError("lattice dimensions must be positive, got %dx%d" % (x_dimension, y_dimension))
    wrap_x = periodic and x_dimension > 2
    wrap_y = periodic and y_dimension > 2
    for y in range(y_dimension):
        for x in range(x_dimension):
            site = x + x_dimension * y
            if x + 1 < x_dimension:
                yield site, site + 1, True
            elif wrap_x:
                yield site, x_dimension * y, True
            if y + 1 < y_dimension:
                yield site, site + x_dimension, False
            elif wrap_y:
                yield site, x, False


def _hopping(i: int, j: int, coefficient: float) -> FermionOperator:
    return FermionOperator("%d^ %d" % (i, j), coefficient) + FermionOperator(
        "%d^ %d" % (j, i), coefficient
    )


def fermi_hubbard(
    x_dimension: int,
    y_dimension: int,
    tunneling: float,
    coulomb: float,
    chemical_potential: float = 0.0,
    magnetic_field: float = 0.0,
    periodic: bool = True,
    spinless: bool = False,
) -> FermionOperator:
    """
    -t sum_<ij>,s (a_is^ a_js + h.c.) + U sum_i n_iu n_id
    - mu sum_i,s n_is - h sum_i (n_iu - n_id)

    The spinless model has one mode per site and a nearest-neighbour
    density-density interaction U sum_<ij> n_i n_j instead; the magnetic
    field does not apply to it.

    :param tunneling: t
    :param coulomb: U
    :param chemical_potential: mu
    :param magnetic_field: h
    """
    n_sites = x_dimension * y_dimension
    hamiltonian = FermionOperator()
    for site, neighbour, _ in lattice_bonds(x_dimension, y_dimension, periodic):
        if spinless:
            if tunneling:
                hamiltonian += _hopping(site, neighbour, -tunneling)
            if coulomb:
                hamiltonian += FermionOperator(
                    "%d^ %d %d^ %d" % (site, site, neighbour, neighbour), coulomb
                )
        elif tunneling:
            hamiltonian += _hopping(up(site), up(neighbour), -tunneling)
            hamiltonian += _hopping(down(site), down(neighbour), -tunneling)

    for site in range(n_sites):
        if spinless:
            if chemical_potential:
                hamiltonian += FermionOperator("%d^ %d" % (site, site), -chemical_potential)
            continue
        if coulomb:
            hamiltonian += FermionOperator(
                "%d^ %d %d^ %d" % (up(site), up(site), down(site), down(site)), coulomb
            )
        for mode, field in ((up(site), -magnetic_field), (down(site), magnetic_field)):
            coefficient = field - chemical_potential
            if coefficient:
                hamiltonian += FermionOperator("%d^ %d" % (mode, mode), coefficient)
    logger.debug(
        "fermi-hubbard %dx%d (periodic=%s, spinless=%s): %d terms",
        x_dimension,
        y_dimension,
        periodic,
        spinless,
        len(hamiltonian),
    )
    return hamiltonian


def bose_hubbard(
    x_dimension: int,
    y_dimension: int,
    tunneling: float,
    interaction: float,
    chemical_potential: float = 0.0,
    periodic: bool = True,
) -> BosonOperator:
    """
    -t sum_<ij> (b_i^ b_j + h.c.) + U/2 sum_k n_k (n_k - 1) - mu sum_k n_k,
    one bosonic mode per site.
    """
    hamiltonian = BosonOperator()
    for site, neighbour, _ in lattice_bonds(x_dimension, y_dimension, periodic):
        if tunneling:
            hamiltonian += BosonOperator("%d^ %d" % (site, neighbour), -tunneling)
            hamiltonian += BosonOperator("%d^ %d" % (neighbour, site), -tunneling)
    for site in range(x_dimension * y_dimension):
        number = BosonOperator("%d^ %d" % (site, site))
        if interaction:
            hamiltonian += 0.5 * interaction * (number * number - number)
        if chemical_potential:
            hamiltonian += -chemical_potential * number
    return hamiltonian
