"""Left-half-space reduced density matrices and protective-measurement predictions.

The mixed spin-position state |-a> = -sin(theta/2)|T> + cos(theta/2)|S>
yields, after tracing out the right side, the diagonal density matrix
diag(1-sin t, 1+sin t, 1-sin t, 1+sin t)/4 in the basis
{|+L>_1, |-L>_1, |+L>_2, |-L>_2}.  All predictions here assume exactly
non-overlapping left/right packets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

#: S_z1 + S_z2 restricted to the left basis {|+L>_1, |-L>_1, |+L>_2, |-L>_2},
#: in units of hbar: the spin projection of whichever particle is on the left.
SZ_LEFT = np.diag([0.5, -0.5, 0.5, -0.5])

SX_SINGLE = np.array([[0, 0.5], [0.5, 0]])
SY_SINGLE = np.array([[0, -0.5j], [0.5j, 0]])


@dataclass(frozen=True)
class LeftDensityMatrix:
    """4x4 reduced density matrix on the left side (real in this model)."""

    mat: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "mat", np.asarray(self.mat, dtype=float).reshape(4, 4))

    def validate(self, tol: float = 1e-12) -> None:
        m = self.mat
        if np.linalg.norm(m - m.T) > tol:
            raise ValueError("density matrix is not Hermitian")
        if abs(np.trace(m) - 1.0) > tol:
            raise ValueError("density matrix trace deviates from 1")
        if np.min(np.linalg.eigvalsh(m)) < -tol:
            raise ValueError("density matrix is not positive semidefinite")


@dataclass(frozen=True)
class MeasurementPrediction:
    theta: float
    expectation_sz: float
    p_plus: float
    p_minus: float


def _rho_component_t() -> np.ndarray:
    return np.diag([0.25, 0.25, 0.25, 0.25])


def _rho_component_ts() -> np.ndarray:
    # Cross term Tr_right |T><S|: quarter-weighted projector differences.
    return np.diag([0.25, -0.25, 0.25, -0.25])


def rho_left(state: str, theta: float | None = None) -> LeftDensityMatrix:
    """Reduced density matrix on the left for |S>, |T>, the TS cross term,
    or |-a(theta)>.

    The TS cross term is a component matrix (traceless), not a state.  For
    "-a" the identity rho(L,-a) = rho(L,S) - sin(theta) * rho(L,TS) gives the
    diagonal closed form.
    """
    key = state.lower().replace("_", "-")
    if key in ("s", "t"):
        return LeftDensityMatrix(_rho_component_t())
    if key in ("ts", "ts-cross"):
        return LeftDensityMatrix(_rho_component_ts())
    if key in ("-a", "minus-a", "minusa"):
        if theta is None:
            raise ValueError("theta is required for the -a state")
        return LeftDensityMatrix(_rho_component_t() - math.sin(theta) * _rho_component_ts())
    raise ValueError(f"unknown state {state!r}")


def _sz_total_left(rho: np.ndarray) -> float:
    return float(np.trace(rho @ SZ_LEFT))


def protective_expectation(theta: float) -> MeasurementPrediction:
    """Outcome of a single protective Stern-Gerlach measurement on the left.

    <S_z1 + S_z2>_left = tr(rho Sz) = -sin(theta)/2, with ensemble
    probabilities p(+1/2) = (1 - sin theta)/2 and p(-1/2) = (1 + sin theta)/2.
    The right-side counterpart is +sin(theta)/2.
    """
    if not -math.pi < theta <= math.pi:
        raise ValueError("theta must lie in (-pi, pi]")
    rho = rho_left("-a", theta).mat
    expectation = _sz_total_left(rho)
    sin_t = math.sin(theta)
    return MeasurementPrediction(
        theta=theta,
        expectation_sz=expectation,
        p_plus=0.5 * (1.0 - sin_t),
        p_minus=0.5 * (1.0 + sin_t),
    )


def transverse_expectations(theta: float) -> tuple[float, float]:
    """<S_x1 + S_x2> and <S_y1 + S_y2> on the left side, computed from rho.

    Both vanish because the right-side field is along z and rho is diagonal.
    """
    rho = rho_left("-a", theta).mat
    sx = np.zeros((4, 4), dtype=complex)
    sy = np.zeros((4, 4), dtype=complex)
    for particle in (0, 1):
        sl = slice(2 * particle, 2 * particle + 2)
        sx[sl, sl] += SX_SINGLE
        sy[sl, sl] += SY_SINGLE
    return (
        float(np.real(np.trace(rho @ sx))),
        float(np.real(np.trace(rho @ sy))),
    )


def minus_a_spin_amplitudes(theta: float) -> np.ndarray:
    """Spin part of |-a> in the product basis {|++>, |+->, |-+>, |-->}."""
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    sqrt2 = math.sqrt(2.0)
    # -s|T> + c|S> with |T>=(|+->+|-+>)/sqrt2, |S>=(|+->-|-+>)/sqrt2
    return np.array([0.0, (c - s) / sqrt2, -(c + s) / sqrt2, 0.0])


def spin_concurrence(theta: float) -> float:
    """Concurrence of the two-qubit spin part of |+-a>: |cos(theta)|.

    theta = 0 gives the maximally entangled singlet/triplet; theta = pi/2
    gives the unentangled product states of the large-separation limit.
    """
    amps = minus_a_spin_amplitudes(theta)
    # Pure-state concurrence C = 2|a_{+-} a_{-+} - a_{++} a_{--}|.
    return float(2.0 * abs(amps[1] * amps[2] - amps[0] * amps[3]))


def protectable(level_report) -> bool:
    """Whether |+-a> are protectively measurable: all level margins positive."""
    return bool(level_report.ok) and all(m > 0 for m in level_report.margins.values())


def standard_measurement_simulation(
    theta: float, n_trials: int, seed: int
) -> dict:
    """Simulated ensemble of collapsing S_z measurements on the left side.

    Samples +-1/2 with p(+1/2) = (1 - sin theta)/2 from a seeded generator;
    the empirical mean estimates the protective single-measurement value
    -sin(theta)/2.
    """
    if n_trials < 1:
        raise ValueError("n_trials must be at least 1")
    pred = protective_expectation(theta)
    rng = np.random.default_rng(seed)
    plus = int(rng.binomial(n_trials, pred.p_plus))
    minus = n_trials - plus
    mean = 0.5 * (plus - minus) / n_trials
    return {
        "theta": theta,
        "n_trials": n_trials,
        "seed": seed,
        "n_plus": plus,
        "n_minus": minus,
        "freq_plus": plus / n_trials,
        "freq_minus": minus / n_trials,
        "empirical_mean": mean,
        "protective_value": pred.expectation_sz,
    }
