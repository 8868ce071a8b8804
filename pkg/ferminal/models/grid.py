"""
Hypercubic grids for plane-wave and plane-wave dual bases.
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy
from numpy.typing import NDArray

GridIndices = Tuple[int, ...]


@dataclass(frozen=True)
class PlaneWaveGrid:
    """
    ``length`` points per axis in ``dimensions`` dimensions, inside a cube
    of side ``scale``. Positions and momenta use the centered integer range
    -floor(L/2) ... ceil(L/2)-1 on each axis.
    """

    dimensions: int
    length: int
    scale: float = 1.0
    """
    Side of the cell, so the volume is ``scale ** dimensions``.
    """

    def __post_init__(self) -> None:
        if self.dimensions not in (1, 2, 3):
            raise ValueError("dimensions must be 1, 2 or 3, got %r" % self.dimensions)
        if self.length < 1:
            raise ValueError("grid length must be at least 1, got %r" % self.length)
        if self.scale <= 0:
            raise ValueError("grid scale must be positive, got %r" % self.scale)

    @property
    def volume(self) -> float:
        return float(self.scale) ** self.dimensions

    @property
    def n_points(self) -> int:
        return int(self.length**self.dimensions)

    def n_modes(self, spinless: bool = False) -> int:
        return self.n_points if spinless else 2 * self.n_points

    def all_points_indices(self) -> Iterator[GridIndices]:
        """
        Every grid point, in spatial-orbital order.
        """
        for spatial in range(self.n_points):
            yield self.spatial_indices(spatial)

    def centered(self, indices: Sequence[int]) -> NDArray[numpy.int64]:
        """
        Integer vector nu of a point, each entry in the centered range.
        """
        return numpy.asarray(indices, dtype=numpy.int64) - self.length // 2

    def wrap(self, nu: Sequence[int]) -> GridIndices:
        """
        Grid indices of the centered integer vector nu, taken modulo the grid.
        """
        half = self.length // 2
        return tuple(int((n + half) % self.length) for n in nu)

    def position_vector(self, indices: Sequence[int]) -> NDArray[numpy.float64]:
        self.__check(indices)
        return self.scale * self.centered(indices) / float(self.length)

    def momentum_vector(self, indices: Sequence[int]) -> NDArray[numpy.float64]:
        self.__check(indices)
        return 2.0 * numpy.pi * self.centered(indices) / self.scale

    def orbital_id(self, indices: Sequence[int], spin: Optional[int] = None) -> int:
        """
        Mode index of a grid point; the first axis varies fastest. With a
        spin, up (0) and down (1) modes are interleaved.
        """
        self.__check(indices)
        spatial = sum(int(i) * self.length**axis for axis, i in enumerate(indices))
        if spin is None:
            return spatial
        if spin not in (0, 1):
            raise ValueError("spin must be 0 or 1, got %r" % spin)
        return 2 * spatial + spin

    def spatial_indices(self, spatial: int) -> GridIndices:
        if not 0 <= spatial < self.n_points:
            raise ValueError("spatial orbital %d is not on the grid" % spatial)
        result: List[int] = []
        for _ in range(self.dimensions):
            result.append(spatial % self.length)
            spatial //= self.length
        return tuple(result)

    def grid_indices(self, mode: int, spinless: bool) -> GridIndices:
        """
        Grid point a mode sits on.
        """
        if not 0 <= mode < self.n_modes(spinless):
            raise ValueError("mode %d is outside a grid of %d modes" % (mode, self.n_modes(spinless)))
        return self.spatial_indices(mode if spinless else mode // 2)

    def wrap_position(self, position: Sequence[float]) -> Tuple[float, ...]:
        """
        Reduce a position into the cell [-scale/2, scale/2) on every axis.
        """
        if len(position) != self.dimensions:
            raise ValueError("position needs %d coordinates, got %d" % (self.dimensions, len(position)))
        half = self.scale / 2.0
        return tuple(float((x + half) % self.scale - half) for x in position)

    def __check(self, indices: Sequence[int]) -> None:
        if len(indices) != self.dimensions:
            raise ValueError("expected %d grid indices, got %d" % (self.dimensions, len(indices)))
        for i in indices:
            if not 0 <= i < self.length:
                raise ValueError("grid index %d out of range [0, %d)" % (i, self.length))


@dataclass(frozen=True)
class Nucleus:
    """
    Point charge for the external potential.
    """

    charge: float
    position: Tuple[float, ...]

    def __post_init__(self) -> None:
        if self.charge <= 0:
            raise ValueError("nuclear charge must be positive, got %r" % self.charge)


def nuclei_in_cell(grid: PlaneWaveGrid, nuclei: Sequence[Nucleus]) -> List[Nucleus]:
    """
    Copies of ``nuclei`` with positions reduced modulo the cell.
    """
    return [Nucleus(n.charge, grid.wrap_position(n.position)) for n in nuclei]
