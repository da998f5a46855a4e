"""Effective-potential surfaces E+-^R(z1, z2) and their diagonal cuts.

Surfaces are sampled on the near quadrant z1 > 0 > z2 (one particle on each
side of the origin), scaled by E0 = mu*B0 and r0 = (2 mu/B0)^(1/3), and can
be written out as CSV plus a JSON metadata sidecar for external plotting.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .hamiltonians import FieldConfig, eigensystem, two_level_block
from .params import PhysicalParams

#: Output values are clipped at +-CLIP_E0 * E0 so the dipole divergence does
#: not swamp plot ranges; the raw values are kept alongside.
CLIP_E0 = 50.0


class Branch(enum.Enum):
    MINUS = "minus"
    PLUS = "plus"


@dataclass(frozen=True)
class GridSpec:
    """Rectangular sampling grid, in units of r0, strictly inside the near quadrant."""

    z1_min: float = 0.03
    z1_max: float = 3.0
    z2_min: float = -3.0
    z2_max: float = -0.03
    n1: int = 101
    n2: int = 101
    log_spacing: bool = False

    def __post_init__(self):
        if not (0 < self.z1_min < self.z1_max):
            raise ValueError("need 0 < z1_min < z1_max")
        if not (self.z2_min < self.z2_max < 0):
            raise ValueError("need z2_min < z2_max < 0")
        if self.n1 < 2 or self.n2 < 2:
            raise ValueError("grid resolution must be at least 2x2")

    def axes(self):
        if self.log_spacing:
            z1 = np.geomspace(self.z1_min, self.z1_max, self.n1)
            z2 = -np.geomspace(-self.z2_min, -self.z2_max, self.n2)[::-1]
        else:
            z1 = np.linspace(self.z1_min, self.z1_max, self.n1)
            z2 = np.linspace(self.z2_min, self.z2_max, self.n2)
        return z1, z2


@dataclass(frozen=True)
class PotentialSurface:
    """Sampled effective energy over (z1, z2), everything in scaled units."""

    z1: np.ndarray  # shape (n1,), units of r0
    z2: np.ndarray  # shape (n2,), units of r0
    values: np.ndarray  # shape (n1, n2), units of E0, unclipped
    branch: Branch
    config: FieldConfig
    params: PhysicalParams
    e0: float
    r0: float

    @property
    def clipped(self) -> np.ndarray:
        return np.clip(self.values, -CLIP_E0, CLIP_E0)


@dataclass(frozen=True)
class ForceField:
    """Negated gradients of a surface: f1 = -dE/dz1, f2 = -dE/dz2 (scaled units)."""

    f1: np.ndarray
    f2: np.ndarray


@dataclass(frozen=True)
class DiagonalCut:
    """E+-^R along z2 = -z1 (the z1 + z2 = 0 contour), scaled units."""

    z1: np.ndarray
    values: np.ndarray
    branch: Branch
    config: FieldConfig
    params: PhysicalParams
    e0: float
    r0: float


def _scales(params: PhysicalParams):
    if params.B0 > 0:
        return params.E0, params.r0
    # Unscaled fallback for zero constant field.
    return 1.0, 1.0


def _energy(params, config, branch: Branch, z1: float, z2: float) -> float:
    pair = eigensystem(two_level_block(params, config, z1, z2))
    return pair.e_minus if branch is Branch.MINUS else pair.e_plus


def sample_surface(
    params: PhysicalParams,
    config: FieldConfig,
    branch: Branch,
    grid: GridSpec | None = None,
) -> PotentialSurface:
    """Sample E+-^R on the near quadrant; grid coordinates are in units of r0."""
    grid = grid or GridSpec()
    e0, r0 = _scales(params)
    z1_axis, z2_axis = grid.axes()
    values = np.empty((grid.n1, grid.n2))
    for i, z1 in enumerate(z1_axis):
        for j, z2 in enumerate(z2_axis):
            values[i, j] = _energy(params, config, branch, z1 * r0, z2 * r0) / e0
    return PotentialSurface(
        z1=z1_axis, z2=z2_axis, values=values,
        branch=branch, config=config, params=params, e0=e0, r0=r0,
    )


def diagonal_cut(
    params: PhysicalParams,
    config: FieldConfig,
    branch: Branch,
    z1_values: np.ndarray,
) -> DiagonalCut:
    """E+-^R(z1, -z1) for z1 > 0 (in units of r0); the Z = 0 relative-coordinate profile."""
    z1_values = np.asarray(z1_values, dtype=float)
    if np.any(z1_values <= 0):
        raise ValueError("diagonal cut requires z1 > 0")
    e0, r0 = _scales(params)
    values = np.array(
        [_energy(params, config, branch, z * r0, -z * r0) / e0 for z in z1_values]
    )
    return DiagonalCut(
        z1=z1_values, values=values,
        branch=branch, config=config, params=params, e0=e0, r0=r0,
    )


def effective_force(surface: PotentialSurface) -> ForceField:
    """Finite-difference forces -dE/dz1, -dE/dz2 on the surface grid.

    Central differences in the interior, one-sided at the edges; step equals
    the local grid spacing.
    """
    if surface.values.shape[0] < 3 or surface.values.shape[1] < 3:
        raise ValueError("force evaluation needs at least 3 samples per axis")
    de1 = np.gradient(surface.values, surface.z1, axis=0)
    de2 = np.gradient(surface.values, surface.z2, axis=1)
    return ForceField(f1=-de1, f2=-de2)


def _config_metadata(params: PhysicalParams, config: FieldConfig) -> dict:
    return {
        "field_kind": config.kind.value,
        "params": {
            "mu": params.mu, "m": params.m, "b": params.b,
            "B0": params.B0, "hbar": params.hbar, "r_c": params.r_c,
        },
    }


def write_surface_csv(surface: PotentialSurface, path: str | Path) -> None:
    """CSV with columns z1_over_r0, z2_over_r0, E_over_E0 (clipped) plus raw values."""
    path = Path(path)
    meta = _config_metadata(surface.params, surface.config)
    clipped = surface.clipped
    with path.open("w", newline="") as fh:
        fh.write(f"# branch: {surface.branch.value}\n")
        fh.write(f"# field_kind: {meta['field_kind']}\n")
        for key, val in meta["params"].items():
            fh.write(f"# {key}: {val!r}\n")
        fh.write(f"# E0: {surface.e0!r}  r0: {surface.r0!r}  clip: {CLIP_E0!r}\n")
        fh.write("z1_over_r0,z2_over_r0,E_over_E0,E_over_E0_raw\n")
        for i, z1 in enumerate(surface.z1):
            for j, z2 in enumerate(surface.z2):
                fh.write(
                    f"{z1!r},{z2!r},{clipped[i, j]!r},{surface.values[i, j]!r}\n"
                )


def write_cut_csv(cut: DiagonalCut, path: str | Path) -> None:
    path = Path(path)
    meta = _config_metadata(cut.params, cut.config)
    with path.open("w", newline="") as fh:
        fh.write(f"# branch: {cut.branch.value}\n")
        fh.write(f"# field_kind: {meta['field_kind']}\n")
        for key, val in meta["params"].items():
            fh.write(f"# {key}: {val!r}\n")
        fh.write(f"# E0: {cut.e0!r}  r0: {cut.r0!r}\n")
        fh.write("z1_over_r0,E_over_E0\n")
        for z1, val in zip(cut.z1, cut.values):
            fh.write(f"{z1!r},{val!r}\n")


def write_metadata_json(
    obj: PotentialSurface | DiagonalCut, path: str | Path, extra: dict | None = None
) -> None:
    """JSON sidecar carrying the full field configuration and parameter set."""
    meta = _config_metadata(obj.params, obj.config)
    meta["branch"] = obj.branch.value
    meta["scales"] = {"E0": obj.e0, "r0": obj.r0}
    if extra:
        meta.update(extra)
    Path(path).write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")
