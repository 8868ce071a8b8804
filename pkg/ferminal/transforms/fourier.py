"""
Discrete Fourier transform between plane-wave and plane-wave dual modes.
"""

import logging
from typing import Dict, Optional, Tuple

import numpy

from ferminal.config import get_settings
from ferminal.exceptions import UnsupportedVariantError
from ferminal.models.grid import PlaneWaveGrid
from ferminal.ops import Action, FermionOperator, TermOperator, Variant, normal_order

logger = logging.getLogger(__name__)


def _transform(
    op: TermOperator, grid: PlaneWaveGrid, spinless: bool, sign: int, tolerance: Optional[float]
) -> FermionOperator:
    if op.variant is not Variant.FERMION:
        raise UnsupportedVariantError("fourier transforms act on fermion operators, got %s" % op.variant)
    if tolerance is None:
        tolerance = get_settings().fourier_tolerance
    points = list(grid.all_points_indices())
    # phases[g, h] = exp(i k_g . r_h), symmetric on the centered lattice
    momenta = numpy.array([grid.momentum_vector(g) for g in points])
    positions = numpy.array([grid.position_vector(h) for h in points])
    phases = numpy.exp(1j * momenta @ positions.T) / numpy.sqrt(grid.n_points)

    images: Dict[Tuple[int, Action], FermionOperator] = {}

    def image(mode: int, action: Action) -> FermionOperator:
        if (mode, action) not in images:
            spatial = grid.orbital_id(grid.grid_indices(mode, spinless))
            spin = None if spinless else mode % 2
            exponent = sign if action is Action.RAISE else -sign
            row = phases[spatial] if exponent > 0 else phases[spatial].conj()
            result = FermionOperator()
            for h, point in enumerate(points):
                result += FermionOperator(((grid.orbital_id(point, spin), action),), row[h])
            images[(mode, action)] = result
        return images[(mode, action)]

    result = FermionOperator()
    for term, coefficient in op.items():
        product = FermionOperator((), coefficient)
        for mode, action in term:
            product = product * image(mode, Action(action))
        result += product
    result = normal_order(result).compress(tolerance)
    logger.debug("fourier transform: %d terms -> %d terms", len(op), len(result))
    return result


def fourier_transform(
    op: TermOperator, grid: PlaneWaveGrid, spinless: bool = False, tolerance: Optional[float] = None
) -> FermionOperator:
    """
    Rewrite an operator on plane-wave modes c_nu in terms of dual-basis
    modes a_p:

        c_nu^ = N^{-1/2} sum_p a_p^ exp(-i k_nu . r_p)
        c_nu  = N^{-1/2} sum_p a_p  exp(+i k_nu . r_p)

    The result is normal-ordered and compressed.

    :param spinless: modes are grid points rather than interleaved spin-orbitals
    :param tolerance: compression, defaults to ``fourier_tolerance``
    """
    return _transform(op, grid, spinless, -1, tolerance)


def inverse_fourier_transform(
    op: TermOperator, grid: PlaneWaveGrid, spinless: bool = False, tolerance: Optional[float] = None
) -> FermionOperator:
    """
    Inverse of :func:`fourier_transform`, from dual-basis back to plane-wave modes.
    """
    return _transform(op, grid, spinless, 1, tolerance)
