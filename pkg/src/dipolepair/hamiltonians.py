"""Reduced Hamiltonians for the two field configurations.

Case 1 applies B(z) = B0 + b*z over all space; Case 2 applies a field only on
the right side of the origin (constant B0, or B0 + b*z).  Both leave the
{|T>, |S>} subspace coupled through a single off-diagonal element, so the
eigenstructure reduces to a 2x2 block parameterized by (f, coupling) and a
mixing angle.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .params import PhysicalParams
from .spinops import S, T0, T_M1, T_P1, SpinOperator, SpinVector


class FieldKind(enum.Enum):
    CASE1_EVERYWHERE = "case1_everywhere"
    CASE2_CONSTANT_RIGHT = "case2_constant_right"
    CASE2_INHOMOGENEOUS_RIGHT = "case2_inhomogeneous_right"


@dataclass(frozen=True)
class FieldConfig:
    """Magnetic field configuration; B0 and b are read from PhysicalParams."""

    kind: FieldKind

    @property
    def is_case1(self) -> bool:
        return self.kind is FieldKind.CASE1_EVERYWHERE


@dataclass(frozen=True)
class TwoLevelBlock:
    """The 2x2 {|T>, |S>} block: H = 2f*I + (coupling)*sigma_x + (2f)*sigma_z.

    ``angle`` is the singlet-triplet mixing angle (omega for Case 1, theta for
    Case 2) on the branch sin(angle) = coupling/sqrt(coupling^2 + 4f^2),
    cos(angle) >= 0.
    """

    f: float
    coupling: float
    angle: float
    kind: FieldKind

    @property
    def beta_norm(self) -> float:
        return math.hypot(self.coupling, 2.0 * self.f)


@dataclass(frozen=True)
class EigenPair:
    """Eigenstates |-a>, |+a> of the {|T>, |S>} block with their energies."""

    state_minus: SpinVector
    state_plus: SpinVector
    e_minus: float
    e_plus: float


@dataclass(frozen=True)
class LevelCrossingReport:
    ok: bool
    margins: dict
    levels: dict

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class AsymptoticLimits:
    """Closed-form limits of the Case-1 eigenstructure at small or large r."""

    e_minus: float
    e_plus: float
    state_minus: SpinVector
    state_plus: SpinVector


def _require_separated(z1: float, z2: float) -> None:
    if z1 == z2:
        raise ValueError("z1 == z2: dipole potential is singular at coincidence")


def field_at(params: PhysicalParams, config: FieldConfig, z: float) -> float:
    """Magnetic field B(z) for the given configuration."""
    if config.kind is FieldKind.CASE1_EVERYWHERE:
        return params.B0 + params.b * z
    if z <= 0:
        return 0.0
    if config.kind is FieldKind.CASE2_CONSTANT_RIGHT:
        return params.B0
    return params.B0 + params.b * z


def b_total(params: PhysicalParams, config: FieldConfig, z1: float, z2: float) -> float:
    """Case-2 field sum B_T = B(z1)*theta(z1-z2) + B(z2)*theta(z2-z1).

    With one particle on each side only the right-side particle sees a field,
    so B_T = B(max(z1, z2)).  Symmetric under particle exchange.
    """
    _require_separated(z1, z2)
    return field_at(params, config, max(z1, z2))


def reduced_hamiltonian(
    params: PhysicalParams, config: FieldConfig, z1: float, z2: float
) -> SpinOperator:
    """4x4 reduced Hamiltonian U + H_I in the coupled basis (kinetic terms dropped)."""
    _require_separated(z1, z2)
    r = abs(z1 - z2)
    f = params.f(r)
    h = np.diag([-2.0 * f, -2.0 * f, 4.0 * f, 0.0]).astype(complex)
    if config.kind is FieldKind.CASE1_EVERYWHERE:
        z_rel = z1 - z2
        z_com = 0.5 * (z1 + z2)
        shift = 2.0 * params.mu * (params.B0 + params.b * z_com)
        h[T_M1, T_M1] += shift
        h[T_P1, T_P1] += -shift
        h[T0, S] += -params.g * z_rel
        h[S, T0] += -params.g * z_rel
    else:
        mu_bt = params.mu * b_total(params, config, z1, z2)
        h[T_M1, T_M1] += mu_bt
        h[T_P1, T_P1] += -mu_bt
        h[T0, S] += mu_bt
        h[S, T0] += mu_bt
    return SpinOperator(h)


def two_level_block(
    params: PhysicalParams, config: FieldConfig, z1: float, z2: float
) -> TwoLevelBlock:
    """Extract (f, coupling, mixing angle) of the {|T>, |S>} subspace."""
    _require_separated(z1, z2)
    r = abs(z1 - z2)
    f = params.f(r)
    if config.kind is FieldKind.CASE1_EVERYWHERE:
        coupling = -params.g * (z1 - z2)
    else:
        coupling = params.mu * b_total(params, config, z1, z2)
    # Branch: sin(angle) = coupling/|beta|, cos(angle) = 2f/|beta| >= 0.
    angle = math.atan2(coupling, 2.0 * f)
    return TwoLevelBlock(f=f, coupling=coupling, angle=angle, kind=config.kind)


def eigensystem(block: TwoLevelBlock) -> EigenPair:
    """Analytic eigenpairs of the 2x2 block.

    E-+ = 2f -+ sqrt(coupling^2 + 4f^2), computed from the Bloch-vector norm
    rather than sec(angle) to stay branch-safe, with
    |-a> = -sin(angle/2)|T> + cos(angle/2)|S> and
    |+a> =  cos(angle/2)|T> + sin(angle/2)|S>.
    """
    norm = block.beta_norm
    # 2f - norm cancels catastrophically when |coupling| << f; the rationalized
    # form -coupling^2/(2f + norm) is exact and stable (f >= 0 always).
    e_minus = (
        -block.coupling**2 / (2.0 * block.f + norm)
        if 2.0 * block.f + norm > 0
        else 2.0 * block.f - norm
    )
    e_plus = 2.0 * block.f + norm
    half = 0.5 * block.angle
    minus = np.zeros(4, dtype=complex)
    minus[T0] = -math.sin(half)
    minus[S] = math.cos(half)
    plus = np.zeros(4, dtype=complex)
    plus[T0] = math.cos(half)
    plus[S] = math.sin(half)
    return EigenPair(
        state_minus=SpinVector(minus),
        state_plus=SpinVector(plus),
        e_minus=e_minus,
        e_plus=e_plus,
    )


class Regime(enum.Enum):
    SMALL_R = "small_r"
    LARGE_R = "large_r"


def asymptotic_limits(params: PhysicalParams, regime: Regime, z: float) -> AsymptoticLimits:
    """Case-1 limiting forms of E-+ and |+-a> at relative coordinate z.

    Small r: E- -> -(b^2/16) r^5, E+ -> 4 mu^2/r^3, states -> |S>, |T>.
    Large r (z > 0): E-+ -> -+ g*r with product-state spins
    |-a> -> (|T>+|S>)/sqrt2 and |+a> -> (|T>-|S>)/sqrt2.
    """
    r = abs(z)
    if r <= 0:
        raise ValueError("z must be nonzero")
    if regime is Regime.SMALL_R:
        e_minus = -(params.b**2) * r**5 / 16.0
        e_plus = 4.0 * params.mu**2 / r**3
        minus = np.zeros(4, dtype=complex)
        minus[S] = 1.0
        plus = np.zeros(4, dtype=complex)
        plus[T0] = 1.0
    else:
        sign = 1.0 if z > 0 else -1.0
        e_minus = -params.g * r
        e_plus = params.g * r
        # For z > 0 the branch has sin(omega) -> -1, omega -> -pi/2.
        minus = np.zeros(4, dtype=complex)
        minus[T0] = sign / math.sqrt(2.0)
        minus[S] = 1.0 / math.sqrt(2.0)
        plus = np.zeros(4, dtype=complex)
        plus[T0] = 1.0 / math.sqrt(2.0)
        plus[S] = -sign / math.sqrt(2.0)
    return AsymptoticLimits(
        e_minus=e_minus,
        e_plus=e_plus,
        state_minus=SpinVector(minus),
        state_plus=SpinVector(plus),
    )


def level_crossing_check(
    params: PhysicalParams, config: FieldConfig, z1: float, z2: float
) -> LevelCrossingReport:
    """Check the case-specific no-crossing inequalities with explicit margins.

    Case 1 requires the {|T>, |S>} band to sit strictly between the two
    field-shifted |T+-1> levels: -2f + 2 mu B0 > E+ > E- > -2f - 2 mu B0
    (center of mass near the origin).  Case 2 requires 2 mu B_T < 3 f(r).
    """
    block = two_level_block(params, config, z1, z2)
    pair = eigensystem(block)
    f = block.f
    if config.kind is FieldKind.CASE1_EVERYWHERE:
        z_com = 0.5 * (z1 + z2)
        shift = 2.0 * params.mu * (params.B0 + params.b * z_com)
        upper = -2.0 * f + abs(shift)
        lower = -2.0 * f - abs(shift)
        margins = {
            "upper_gap": upper - pair.e_plus,
            "band_gap": pair.e_plus - pair.e_minus,
            "lower_gap": pair.e_minus - lower,
        }
        levels = {
            "E_T_upper": upper,
            "E_plus": pair.e_plus,
            "E_minus": pair.e_minus,
            "E_T_lower": lower,
        }
        ok = margins["upper_gap"] > 0 and margins["lower_gap"] > 0
    else:
        mu_bt = abs(block.coupling)
        margins = {"crossing_margin": 3.0 * f - 2.0 * mu_bt}
        levels = {
            "E_minus": pair.e_minus,
            "E_T_minus1": -2.0 * f + mu_bt,
            "E_T_plus1": -2.0 * f - mu_bt,
            "E_plus": pair.e_plus,
        }
        ok = margins["crossing_margin"] > 0
    return LevelCrossingReport(ok=ok, margins=margins, levels=levels)


def adiabatic_min_time(
    params: PhysicalParams, config: FieldConfig, z1: float, z2: float
) -> float:
    """Lower bound on the field switching time for adiabatic evolution.

    Case 1: hbar b^2 r^11 / (32 mu^3 sqrt(b^2 r^8 + 16 mu^2)); zero when
    b = 0.  Case 2: the estimate (9/80) hbar / f(r) at the level-crossing
    boundary 2 mu B_T = 3f.
    """
    _require_separated(z1, z2)
    r = abs(z1 - z2)
    if config.kind is FieldKind.CASE1_EVERYWHERE:
        if params.b == 0:
            return 0.0
        num = params.hbar * params.b**2 * r**11
        den = 32.0 * params.mu**3 * math.sqrt(params.b**2 * r**8 + 16.0 * params.mu**2)
        return num / den
    return (9.0 / 80.0) * params.hbar / params.f(r)
