"""Encoders for positions on an integer grid.

A position's neighborhood -- the square of cells within Chebyshev radius R --
is hashed cell-by-cell into the bit array.  Because the hash is a pure
function of the cell, nearby positions re-derive the same bits for their
shared cells and overlap proportionally to proximity, with no stored state
and no bound on the coordinate space.

Two variants:

* fixed: every neighborhood cell contributes a bit (w == (2R+1)**2).
* topw:  only the w cells with the highest order keys contribute; since a
         cell's order key never changes, nearby positions tend to select the
         same cells.  The radius can grow with the entity's speed so that
         "near" means near relative to how fast it is moving.

GPS input goes through `gps_to_grid`, a spherical-mercator adapter; the
encoders themselves only ever see integer cells, so any planar data works.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import (
    ConfigError,
    Finding,
    InputError,
    ProjectionError,
    RangeError,
    raise_on_errors,
    warnings_only,
)
from .hashing import coordinate_hash, mix64  # re-exported: normative hash surface
from .sdr import SDR

_I32_MIN = -(1 << 31)
_I32_MAX = (1 << 31) - 1

# Spherical mercator constants: WGS84 equatorial radius and the latitude
# beyond which the square projection is undefined.
EARTH_RADIUS_M = 6378137.0
MAX_MERCATOR_LAT = 85.05113


class GridCoordinate(NamedTuple):
    """Signed 32-bit (x, y) cell on the flattened grid."""

    x: int
    y: int


def _check_i32(v: int, what: str) -> None:
    if v < _I32_MIN or v > _I32_MAX:
        raise RangeError(f"{what} {v} exceeds the signed 32-bit range")


def neighborhood(center, radius: int) -> list[GridCoordinate]:
    """All cells within Chebyshev distance ``radius``, in ascending (x, y)
    order; raises RangeError if any cell would leave the 32-bit grid."""
    cx, cy = center
    _check_i32(cx - radius, "neighborhood x")
    _check_i32(cx + radius, "neighborhood x")
    _check_i32(cy - radius, "neighborhood y")
    _check_i32(cy + radius, "neighborhood y")
    return [
        GridCoordinate(x, y)
        for x in range(cx - radius, cx + radius + 1)
        for y in range(cy - radius, cy + radius + 1)
    ]


class GeospatialEncoder:
    """Grid-position encoder with fixed-neighborhood and top-w variants.

    Parameters
    ----------
    n : total bits.
    radius : base neighborhood radius R (cells).
    variant : "fixed" or "topw".
    w : bits to select (topw only; fixed derives w = (2R+1)**2).
    seed : 64-bit hash seed.
    speed_scale : cells of extra radius per unit of speed (topw).
    radius_min, radius_max : clamps for the speed-adaptive radius;
        both default to ``radius``.
    """

    def __init__(
        self,
        n: int,
        radius: int = 2,
        *,
        variant: str = "fixed",
        w: int | None = None,
        seed: int = 0,
        speed_scale: float = 0.0,
        radius_min: int | None = None,
        radius_max: int | None = None,
    ):
        findings: list[Finding] = []
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            findings.append(Finding("error", f"n must be a positive integer, got {n!r}"))
        if not isinstance(radius, int) or isinstance(radius, bool) or radius < 0:
            findings.append(Finding("error", f"radius must be a non-negative integer, got {radius!r}"))
        if variant not in ("fixed", "topw"):
            findings.append(Finding("error", f"variant must be 'fixed' or 'topw', got {variant!r}"))
        raise_on_errors(findings)

        self.n = n
        self.radius = radius
        self.variant = variant
        self.seed = int(seed)
        self.speed_scale = float(speed_scale)
        self.radius_min = radius if radius_min is None else radius_min
        self.radius_max = radius if radius_max is None else radius_max

        if self.radius_min < 0 or self.radius_min > self.radius_max:
            findings.append(
                Finding("error", f"need 0 <= radius_min <= radius_max, got "
                                 f"[{self.radius_min}, {self.radius_max}]")
            )

        full = (2 * radius + 1) ** 2
        if variant == "fixed":
            if w is not None and w != full:
                findings.append(
                    Finding("error", f"fixed variant at radius {radius} has w = {full}, got w={w}")
                )
            self.w = full
        else:
            if w is None:
                findings.append(Finding("error", "topw variant requires w"))
                self.w = 0
            else:
                self.w = w
                min_pool = (2 * self.radius_min + 1) ** 2
                if not (1 <= w <= min_pool):
                    findings.append(
                        Finding("error", f"topw requires 1 <= w <= (2*radius_min+1)**2 "
                                         f"= {min_pool}, got w={w}")
                    )
        if self.w and self.w ** 2 / self.n > 1:
            findings.append(
                Finding("warning",
                        f"w**2/n = {self.w ** 2 / self.n:.2f} > 1: expect noticeable "
                        "bit-index collisions; increase n")
            )
        raise_on_errors(findings)
        self.warnings = warnings_only(findings)

    def encode_fixed(self, coord) -> SDR:
        """Hash every cell of the radius-R neighborhood into the bit array.
        Collisions may leave slightly fewer than (2R+1)**2 one-bits."""
        bits = {
            coordinate_hash(cell, self.seed, self.n)[0]
            for cell in neighborhood(coord, self.radius)
        }
        return SDR(self.n, tuple(sorted(bits)))

    def select_topw(self, coord, radius: int | None = None) -> list[GridCoordinate]:
        """The w neighborhood cells with the largest order keys, best first.

        The order is strict and total: descending order key, ties broken by
        ascending (x, y) -- so the selection is independent of enumeration
        order.
        """
        r = self.radius if radius is None else radius
        pool = neighborhood(coord, r)
        if not 1 <= self.w <= len(pool):
            raise ConfigError(
                f"cannot select w={self.w} cells from a radius-{r} "
                f"neighborhood of {len(pool)}"
            )
        ranked = sorted(
            pool,
            key=lambda cell: (-coordinate_hash(cell, self.seed, self.n)[1], cell),
        )
        return ranked[: self.w]

    def encode_topw(self, coord, radius: int | None = None) -> SDR:
        bits = {
            coordinate_hash(cell, self.seed, self.n)[0]
            for cell in self.select_topw(coord, radius)
        }
        return SDR(self.n, tuple(sorted(bits)))

    def radius_from_speed(self, speed: float) -> int:
        """Affine-then-clamp speed-to-radius map: radius grows by
        ``speed_scale`` cells per speed unit from ``radius_min`` and is
        clamped to [radius_min, radius_max].  Monotone in speed."""
        try:
            s = float(speed)
        except (TypeError, ValueError):
            raise InputError(f"expected a number for speed, got {speed!r}") from None
        if math.isnan(s) or s < 0:
            raise InputError(f"speed must be non-negative, got {speed!r}")
        grown = self.radius_min + math.floor(s * self.speed_scale)
        return min(max(grown, self.radius_min), self.radius_max)

    def encode(self, coord, speed: float | None = None) -> SDR:
        """Variant dispatch; a speed (topw only) adapts the radius."""
        if self.variant == "fixed":
            if speed is not None:
                raise InputError("the fixed variant does not take a speed")
            return self.encode_fixed(coord)
        radius = None if speed is None else self.radius_from_speed(speed)
        return self.encode_topw(coord, radius)


def gps_to_grid(lat: float, lon: float, cell_size: float) -> GridCoordinate:
    """Project (lat, lon) in degrees onto the spherical-mercator plane and
    quantize to ``cell_size``-meter grid cells.

    Uses y = R * atanh(sin(lat)), the algebraic twin of the usual
    log-tan form that is exact at the equator.  Latitudes at or beyond
    +-85.05113 degrees fall outside the projection.
    """
    for name, v in (("lat", lat), ("lon", lon)):
        if not isinstance(v, (int, float)) or isinstance(v, bool) or not math.isfinite(v):
            raise InputError(f"{name} must be a finite number, got {v!r}")
    if not (isinstance(cell_size, (int, float)) and math.isfinite(cell_size) and cell_size > 0):
        raise InputError(f"cell_size must be a positive number of meters, got {cell_size!r}")
    if abs(lat) >= MAX_MERCATOR_LAT:
        raise ProjectionError(
            f"latitude {lat} is outside the mercator validity band "
            f"(|lat| < {MAX_MERCATOR_LAT})"
        )
    if abs(lon) > 180.0:
        raise ProjectionError(f"longitude {lon} must be within [-180, 180]")
    x_m = EARTH_RADIUS_M * math.radians(lon)
    y_m = EARTH_RADIUS_M * math.atanh(math.sin(math.radians(lat)))
    gx = math.floor(x_m / cell_size)
    gy = math.floor(y_m / cell_size)
    _check_i32(gx, "grid x")
    _check_i32(gy, "grid y")
    return GridCoordinate(gx, gy)


__all__ = [
    "GridCoordinate",
    "GeospatialEncoder",
    "neighborhood",
    "gps_to_grid",
    "coordinate_hash",
    "mix64",
    "EARTH_RADIUS_M",
    "MAX_MERCATOR_LAT",
]
