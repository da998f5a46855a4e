"""Independent brute-force oracles for cross-checking the analytic paths.

Each routine here deliberately avoids the closed forms it is used to verify:
dense diagonalization instead of the analytic 2x2 eigenstructure, explicit
partial traces instead of the diagonal density-matrix formula, adaptive
quadrature instead of the WKB closed form, and numeric differentiation of the
trap packets instead of the Gaussian-integral results.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.integrate import quad

from .confinement import TrapConfig
from .params import PhysicalParams
from .spinops import S, T0


def diagonalize_ts_block(hamiltonian_4x4: np.ndarray):
    """Numeric eigenpairs of the {|T>, |S>} subblock of a 4x4 Hamiltonian.

    Returns (e_minus, e_plus, vec_minus, vec_plus) with vectors as (T, S)
    component pairs, phase-fixed so the S component is real non-negative.
    """
    block = hamiltonian_4x4[np.ix_([T0, S], [T0, S])]
    vals, vecs = np.linalg.eigh(block)
    out_vecs = []
    for k in range(2):
        v = vecs[:, k]
        phase = v[1] if abs(v[1]) > 1e-14 else v[0]
        v = v * (abs(phase) / phase)
        out_vecs.append(v)
    return float(vals[0]), float(vals[1]), out_vecs[0], out_vecs[1]


def partial_trace_left(theta: float) -> np.ndarray:
    """rho(L,-a) from an explicit 16-dim construction of |-a>.

    Each particle carries spin {+,-} tensor side {R, L} (orthogonal packets);
    the full state combines the coupled spin states with the matching
    symmetrized/antisymmetrized side wavefunctions.  The left reduced matrix
    element between |s L>_i and |s' L>_i is read off as
    <psi| (|s' L><s L|)_i |psi>, with cross-particle blocks vanishing.
    """
    # Single-particle basis: index = 2*spin + side with spin in {0:+, 1:-},
    # side in {0:R, 1:L}.  Full basis: 4 x 4 = 16.
    def ket(spin1, side1, spin2, side2):
        v = np.zeros(16)
        v[(2 * spin1 + side1) * 4 + (2 * spin2 + side2)] = 1.0
        return v

    s2 = math.sqrt(2.0)
    # Symmetric / antisymmetric side wavefunctions psi_+- combined with spins.
    def spatial(sign, spin1, spin2):
        return (ket(spin1, 0, spin2, 1) + sign * ket(spin1, 1, spin2, 0)) / s2

    singlet = (spatial(+1, 0, 1) - spatial(+1, 1, 0)) / s2
    # The triplet's antisymmetric spatial factor is taken as (L1 R2 - R1 L2);
    # this phase makes the half-space field couple the {T, S} pair with a
    # positive off-diagonal element, so the lower eigenstate aligns the
    # right-side spin with the field.
    triplet0 = -(spatial(-1, 0, 1) + spatial(-1, 1, 0)) / s2
    psi = -math.sin(theta / 2.0) * triplet0 + math.cos(theta / 2.0) * singlet

    rho = np.zeros((4, 4))
    # Left-basis ordering {|+L>_1, |-L>_1, |+L>_2, |-L>_2}.
    for i, particle in enumerate((1, 2)):
        for s_out in (0, 1):
            for s_in in (0, 1):
                op = np.zeros((16, 16))
                for other in range(4):
                    if particle == 1:
                        row = (2 * s_out + 1) * 4 + other
                        col = (2 * s_in + 1) * 4 + other
                    else:
                        row = other * 4 + (2 * s_out + 1)
                        col = other * 4 + (2 * s_in + 1)
                    op[row, col] = 1.0
                rho[2 * i + s_in, 2 * i + s_out] = psi @ op @ psi
    return rho


def concurrence_spin_flip(amps: np.ndarray) -> float:
    """Two-qubit concurrence via the spin-flip eigenvalue formula on rho.

    Uses the Hermitian form sqrt(rho) rho_tilde sqrt(rho); eigenvalues below
    machine noise are clipped to zero before the square root so they cannot
    leak sqrt(eps)-sized contributions into the lambda differences.
    """
    sy = np.array([[0, -1j], [1j, 0]])
    rho = np.outer(amps, np.conj(amps))
    flip = np.kron(sy, sy)
    rho_tilde = flip @ rho.conj() @ flip
    d, v = np.linalg.eigh(rho)
    sqrt_rho = (v * np.sqrt(np.clip(d, 0.0, None))) @ v.conj().T
    vals = np.linalg.eigvalsh(sqrt_rho @ rho_tilde @ sqrt_rho)
    vals = np.clip(vals, 0.0, None)
    vals[vals < vals.max() * 1e-12] = 0.0
    lam = np.sqrt(np.sort(vals)[::-1])
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def wkb_half_action_quadrature(params: PhysicalParams, energy: float) -> float:
    """Adaptive quadrature of int_0^{r_m} sqrt(m (V - E)) dz for the
    simplified clamped barrier V = 4 mu^2 / max(|z|, r_c)^3."""
    mu, m, r_c = params.mu, params.m, params.r_c
    r_m = (240.0 * mu**2 / params.b**2) ** 0.125

    def integrand(z):
        v = 4.0 * mu**2 / max(abs(z), r_c) ** 3
        return math.sqrt(max(m * (v - energy), 0.0))

    val, _ = quad(integrand, 0.0, r_m, points=[r_c], limit=400)
    return val


def harmonic_levels(k: float, mass: float, hbar: float, n: int) -> np.ndarray:
    """Exact levels hbar*omega*(n + 1/2) of H = p^2/mass + k z^2/2
    (particle mass mass/2, omega = sqrt(2k/mass))."""
    omega = math.sqrt(2.0 * k / mass)
    return hbar * omega * (np.arange(n) + 0.5)


def _packet_z(trap: TrapConfig, sign: int, z: np.ndarray) -> np.ndarray:
    """Normalized symmetric/antisymmetric relative-coordinate packet along z."""
    alpha = trap.xi / 2.0
    g_r = (alpha / math.pi) ** 0.25 * np.exp(-alpha * (z - trap.z0) ** 2 / 2.0)
    g_l = (alpha / math.pi) ** 0.25 * np.exp(-alpha * (z + trap.z0) ** 2 / 2.0)
    u = g_r + sign * g_l
    norm = math.sqrt(np.trapezoid(u * u, z))
    return u / norm


def delta_expectation_quadrature(trap: TrapConfig) -> float:
    """<delta^3(x1-x2)> for the normalized symmetric two-particle state.

    x and y integrals factorize analytically; the z-axis coincidence integral
    is evaluated numerically.
    """
    xi, z0 = trap.xi, trap.z0
    # Transverse part of 2 * int psi_R^2 psi_L^2 d^3x.
    transverse = (xi / math.pi) ** 3 * (math.pi / (2.0 * xi))

    def integrand(z):
        return math.exp(-xi * ((z - z0 / 2.0) ** 2 + (z + z0 / 2.0) ** 2))

    width = 10.0 / math.sqrt(xi) + z0
    iz, _ = quad(integrand, -width, width, limit=200)
    overlap_sq = math.exp(-0.5 * xi * z0**2)
    return 2.0 * transverse * iz / (1.0 + overlap_sq)


def kinetic_expectation_numeric(trap: TrapConfig, which: str) -> float:
    """Numeric <p^2>/m (relative, hbar = 1) or <P^2>/2m (center of mass).

    Uses |grad u|^2 quadrature with a 4th-order finite-difference derivative
    of the packet on a fine grid.
    """
    if which == "com":
        alpha = 2.0 * trap.xi
        width = 12.0 / math.sqrt(alpha)
        z = np.linspace(-width, width, 200001)
        u = (alpha / math.pi) ** 0.25 * np.exp(-alpha * z**2 / 2.0)
        coeff = 1.0 / (2.0 * trap.m)
    else:
        sign = +1 if which == "singlet" else -1
        width = 14.0 / math.sqrt(trap.xi) + 2.0 * trap.z0
        z = np.linspace(-width, width, 200001)
        u = _packet_z(trap, sign, z)
        coeff = 1.0 / trap.m
    dz = z[1] - z[0]
    du = np.empty_like(u)
    # 4th-order central differences in the interior.
    du[2:-2] = (-u[4:] + 8 * u[3:-1] - 8 * u[1:-3] + u[:-4]) / (12 * dz)
    du[:2] = du[2]
    du[-2:] = du[-3]
    return coeff * float(np.trapezoid(du * du, z))
