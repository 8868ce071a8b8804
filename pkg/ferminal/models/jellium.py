"""
Uniform electron gas (jellium) in a periodic cell, optionally with point
nuclei, in the plane-wave basis or its dual.

Plane-wave modes are labelled by the momentum k_nu of their grid point,
dual-basis modes by the position r_p. Both use
:meth:`PlaneWaveGrid.orbital_id` for mode numbering, so
:func:`ferminal.transforms.fourier_transform` maps one onto the other.
"""

import logging
from typing import List, Optional, Sequence

import numpy
from numpy.typing import NDArray

from ferminal._util import EnumShowNameOnly
from ferminal.ops import FermionOperator
from .grid import GridIndices, Nucleus, PlaneWaveGrid, nuclei_in_cell

logger = logging.getLogger(__name__)


class JelliumBasis(EnumShowNameOnly):
    PLANE_WAVE = "plane_wave"
    DUAL = "dual"


def _spins(spinless: bool) -> List[Optional[int]]:
    return [None] if spinless else [0, 1]


class _Lattice:
    """
    Grid points with their momenta, positions and pairwise index arithmetic.
    """

    def __init__(self, grid: PlaneWaveGrid) -> None:
        self.grid = grid
        self.points: List[GridIndices] = list(grid.all_points_indices())
        self.momenta: NDArray[numpy.float64] = numpy.array(
            [grid.momentum_vector(g) for g in self.points]
        )
        self.positions: NDArray[numpy.float64] = numpy.array(
            [grid.position_vector(g) for g in self.points]
        )
        self.squared: NDArray[numpy.float64] = (self.momenta**2).sum(axis=1)

    def shifted(self, a: int, b: int, sign: int) -> int:
        """
        Spatial index of the momentum k_a + sign * k_b, wrapped onto the grid.
        """
        nu = self.grid.centered(self.points[a]) + sign * self.grid.centered(self.points[b])
        return self.grid.orbital_id(self.grid.wrap(nu))

    def mode(self, spatial: int, spin: Optional[int]) -> int:
        return self.grid.orbital_id(self.points[spatial], spin)


def plane_wave_kinetic(grid: PlaneWaveGrid, spinless: bool = False) -> FermionOperator:
    lattice = _Lattice(grid)
    result = FermionOperator()
    for p, k_squared in enumerate(lattice.squared):
        if k_squared == 0:
            continue
        for spin in _spins(spinless):
            mode = lattice.mode(p, spin)
            result += FermionOperator("%d^ %d" % (mode, mode), 0.5 * k_squared)
    return result


def plane_wave_potential(grid: PlaneWaveGrid, spinless: bool = False) -> FermionOperator:
    """
    (2 pi / volume) sum_{nu != 0} sum_{p,q,s,s'} c_ps^ c_qs'^ c_{q+nu,s'} c_{p-nu,s} / k_nu^2
    """
    lattice = _Lattice(grid)
    prefactor = 2.0 * numpy.pi / grid.volume
    spins = _spins(spinless)
    result = FermionOperator()
    for nu, k_squared in enumerate(lattice.squared):
        if k_squared == 0:
            continue
        coefficient = prefactor / k_squared
        for p in range(grid.n_points):
            p_shifted = lattice.shifted(p, nu, -1)
            for q in range(grid.n_points):
                q_shifted = lattice.shifted(q, nu, 1)
                for spin_a in spins:
                    for spin_b in spins:
                        a = lattice.mode(p, spin_a)
                        b = lattice.mode(q, spin_b)
                        c = lattice.mode(q_shifted, spin_b)
                        d = lattice.mode(p_shifted, spin_a)
                        if a == b or c == d:
                            continue
                        result += FermionOperator(
                            "%d^ %d^ %d %d" % (a, b, c, d), coefficient
                        )
    return result


def plane_wave_external_potential(
    grid: PlaneWaveGrid, nuclei: Sequence[Nucleus], spinless: bool = False
) -> FermionOperator:
    """
    -(4 pi / volume) sum_{p != q, s} sum_j charge_j exp(i k_{p-q} . R_j) / k_{p-q}^2 c_ps^ c_qs
    """
    lattice = _Lattice(grid)
    prefactor = -4.0 * numpy.pi / grid.volume
    nuclei = nuclei_in_cell(grid, nuclei)
    result = FermionOperator()
    for p in range(grid.n_points):
        for q in range(grid.n_points):
            nu = lattice.shifted(p, q, -1)
            k_squared = lattice.squared[nu]
            if k_squared == 0:
                continue
            coefficient = sum(
                prefactor * n.charge * numpy.exp(1j * lattice.momenta[nu].dot(n.position)) / k_squared
                for n in nuclei
            )
            for spin in _spins(spinless):
                result += FermionOperator(
                    "%d^ %d" % (lattice.mode(p, spin), lattice.mode(q, spin)), coefficient
                )
    return result


def dual_basis_kinetic(grid: PlaneWaveGrid, spinless: bool = False) -> FermionOperator:
    """
    (1 / 2N) sum_{p,q,s} sum_nu k_nu^2 cos(k_nu . (r_q - r_p)) a_ps^ a_qs
    """
    lattice = _Lattice(grid)
    result = FermionOperator()
    for p in range(grid.n_points):
        for q in range(grid.n_points):
            separation = lattice.positions[q] - lattice.positions[p]
            coefficient = (
                lattice.squared * numpy.cos(lattice.momenta @ separation)
            ).sum() / (2.0 * grid.n_points)
            if coefficient == 0:
                continue
            for spin in _spins(spinless):
                result += FermionOperator(
                    "%d^ %d" % (lattice.mode(p, spin), lattice.mode(q, spin)), coefficient
                )
    return result


def dual_basis_potential(grid: PlaneWaveGrid, spinless: bool = False) -> FermionOperator:
    """
    (2 pi / volume) sum_{(p,s) != (q,s')} sum_{nu != 0} cos(k_nu . (r_p - r_q)) / k_nu^2 n_ps n_qs'
    """
    lattice = _Lattice(grid)
    prefactor = 2.0 * numpy.pi / grid.volume
    nonzero = lattice.squared > 0
    spins = _spins(spinless)
    result = FermionOperator()
    for p in range(grid.n_points):
        for q in range(grid.n_points):
            separation = lattice.positions[p] - lattice.positions[q]
            coefficient = prefactor * (
                numpy.cos(lattice.momenta[nonzero] @ separation) / lattice.squared[nonzero]
            ).sum()
            for spin_a in spins:
                for spin_b in spins:
                    a = lattice.mode(p, spin_a)
                    b = lattice.mode(q, spin_b)
                    if a == b:
                        continue
                    result += FermionOperator("%d^ %d %d^ %d" % (a, a, b, b), coefficient)
    return result


def dual_basis_external_potential(
    grid: PlaneWaveGrid, nuclei: Sequence[Nucleus], spinless: bool = False
) -> FermionOperator:
    """
    -(4 pi / volume) sum_{p,s} sum_j sum_{nu != 0} charge_j exp(i k_nu . (R_j - r_p)) / k_nu^2 n_ps
    """
    lattice = _Lattice(grid)
    prefactor = -4.0 * numpy.pi / grid.volume
    nonzero = lattice.squared > 0
    nuclei = nuclei_in_cell(grid, nuclei)
    result = FermionOperator()
    for p in range(grid.n_points):
        coefficient = 0j
        for n in nuclei:
            separation = numpy.asarray(n.position) - lattice.positions[p]
            coefficient += prefactor * n.charge * (
                numpy.exp(1j * lattice.momenta[nonzero] @ separation) / lattice.squared[nonzero]
            ).sum()
        for spin in _spins(spinless):
            mode = lattice.mode(p, spin)
            result += FermionOperator("%d^ %d" % (mode, mode), coefficient)
    return result


def jellium(
    grid: PlaneWaveGrid,
    nuclei: Optional[Sequence[Nucleus]] = None,
    basis: JelliumBasis = JelliumBasis.PLANE_WAVE,
    spinless: bool = False,
) -> FermionOperator:
    """
    Kinetic plus electron-electron terms, and the electron-nuclear
    attraction when ``nuclei`` are given.

    :param basis: :class:`JelliumBasis` or its value
    :param spinless: one mode per grid point instead of two
    """
    basis = JelliumBasis(basis)
    if basis is JelliumBasis.PLANE_WAVE:
        hamiltonian = plane_wave_kinetic(grid, spinless) + plane_wave_potential(grid, spinless)
        if nuclei:
            hamiltonian += plane_wave_external_potential(grid, nuclei, spinless)
    else:
        hamiltonian = dual_basis_kinetic(grid, spinless) + dual_basis_potential(grid, spinless)
        if nuclei:
            hamiltonian += dual_basis_external_potential(grid, nuclei, spinless)
    logger.debug(
        "jellium (%s, %d points, spinless=%s): %d terms",
        basis,
        grid.n_points,
        spinless,
        len(hamiltonian),
    )
    return hamiltonian
