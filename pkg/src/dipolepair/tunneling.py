"""Born-Oppenheimer double-well analysis of the relative coordinate.

The upper effective potential V(z) = 2 mu^2/|z|^3 + sqrt(g^2 z^2 + 4 mu^4/z^6)
forms a double well with minima at +-r_m = +-(240 mu^2/b^2)^(1/8).  After
regularizing the central dipole divergence at a cutoff r_c, the relative
motion (kinetic term p^2/m, reduced mass m/2) is solved exactly on a grid by
a symmetric tridiagonal eigensolve, giving the parity-split doublet and the
left-right exchange oscillation.  Semiclassical barrier penetration comes
from the closed-form WKB exponent with the incomplete-beta term, checked
elsewhere against direct quadrature.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.integrate import trapezoid
from scipy.linalg import eigh_tridiagonal
from scipy.optimize import minimize_scalar
from scipy.special import beta as beta_complete
from scipy.special import betainc

from .params import PhysicalParams


class Regularization(enum.Enum):
    CLAMP_AT_CUTOFF = "clamp_at_cutoff"
    HARD_WALL = "hard_wall"


@dataclass(frozen=True)
class BOPotential:
    """Even double-well potential for the relative coordinate.

    The dipole core is regularized for |z| < r_c: either clamped to V(r_c)
    (default, keeps V continuous and the central barrier finite) or replaced
    by a hard wall for sensitivity checks.
    """

    params: PhysicalParams
    regularization: Regularization = Regularization.CLAMP_AT_CUTOFF

    @property
    def r_m(self) -> float:
        return well_minimum(self.params)

    def _raw(self, z: np.ndarray) -> np.ndarray:
        mu, g = self.params.mu, self.params.g
        az = np.abs(z)
        return 2.0 * mu**2 / az**3 + np.sqrt(g**2 * z**2 + 4.0 * mu**4 / az**6)

    def __call__(self, z):
        z = np.asarray(z, dtype=float)
        az = np.abs(z)
        r_c = self.params.r_c
        if self.regularization is Regularization.HARD_WALL:
            out = np.where(az < r_c, np.inf, self._raw(np.where(az < r_c, r_c, z)))
        else:
            out = self._raw(np.where(az < r_c, r_c, z))
        return out if out.ndim else float(out)


def well_minimum(params: PhysicalParams) -> float:
    """Minimum location r_m = (240 mu^2 / b^2)^(1/8) of the double well."""
    if params.b <= 0:
        raise ValueError("b = 0: the potential has no finite minimum")
    return (240.0 * params.mu**2 / params.b**2) ** 0.125


def bo_potential(
    params: PhysicalParams,
    regularization: Regularization = Regularization.CLAMP_AT_CUTOFF,
) -> BOPotential:
    if params.r_c <= 0:
        raise ValueError("bo_potential requires r_c > 0")
    r_m = well_minimum(params)
    if params.r_c >= r_m:
        raise ValueError(
            f"cutoff r_c={params.r_c} swallows the wells at r_m={r_m}"
        )
    return BOPotential(params=params, regularization=regularization)


class Parity(enum.Enum):
    SYMMETRIC = "symmetric"
    ANTISYMMETRIC = "antisymmetric"
    NONE = "none"


@dataclass(frozen=True)
class GridWavefunction:
    """Real eigenfunction on a uniform symmetric grid, trapezoid-normalized."""

    z: np.ndarray
    values: np.ndarray
    energy: float
    parity: Parity

    def norm(self) -> float:
        return float(np.sqrt(trapezoid(self.values**2, self.z)))

    def overlap(self, other: "GridWavefunction") -> float:
        return float(trapezoid(self.values * other.values, self.z))

    def probability_right(self) -> float:
        mask = self.z > 0
        return float(trapezoid(self.values[mask] ** 2, self.z[mask]))


@dataclass(frozen=True)
class SplittingResult:
    e_s: float
    e_a: float
    delta: float
    delta_matrix_element: float
    hbar: float
    phi_s: GridWavefunction
    phi_a: GridWavefunction
    phi_r: GridWavefunction
    phi_l: GridWavefunction

    @property
    def t_swap(self) -> float:
        """Time pi*hbar/(2 Delta) for a full left-right exchange."""
        if self.delta == 0:
            return math.inf
        return math.pi * self.hbar / (2.0 * self.delta)


def _classify_parity(z: np.ndarray, psi: np.ndarray, tol: float = 1e-8) -> Parity:
    mirrored = psi[::-1]
    scale = np.max(np.abs(psi))
    if np.max(np.abs(psi - mirrored)) <= tol * scale:
        return Parity.SYMMETRIC
    if np.max(np.abs(psi + mirrored)) <= tol * scale:
        return Parity.ANTISYMMETRIC
    return Parity.NONE


def solve_eigenstates(
    potential,
    half_width: float,
    n_points: int = 2001,
    n_states: int = 4,
    mass: float | None = None,
    hbar: float | None = None,
) -> list[GridWavefunction]:
    """Lowest eigenstates of H = p^2/m + V(z) on [-L, L] with Dirichlet ends.

    ``potential`` is any callable of z (typically a BOPotential).  The kinetic
    term is p^2/m, i.e. reduced mass m/2 for the two-particle relative
    coordinate.  Standard 3-point Laplacian, symmetric tridiagonal eigensolve.
    """
    if n_points < 3:
        raise ValueError("n_points must be at least 3")
    if isinstance(potential, BOPotential):
        mass = potential.params.m if mass is None else mass
        hbar = potential.params.hbar if hbar is None else hbar
        if half_width < 3.0 * potential.r_m:
            raise ValueError("domain must extend to at least 3 r_m")
    if mass is None or hbar is None:
        raise ValueError("mass and hbar are required for a bare callable potential")

    z = np.linspace(-half_width, half_width, n_points)
    dz = z[1] - z[0]
    # p^2/m -> -(hbar^2/m) d^2/dz^2
    kin = hbar**2 / (mass * dz**2)
    v = np.asarray(potential(z), dtype=float)
    if not np.all(np.isfinite(v[1:-1])):
        # Hard-wall regularization: huge but finite barrier keeps the solve stable.
        v = np.where(np.isfinite(v), v, np.max(v[np.isfinite(v)]) * 1e6)
    diag = 2.0 * kin + v
    off = np.full(n_points - 1, -kin)
    energies, vecs = eigh_tridiagonal(
        diag, off, select="i", select_range=(0, n_states - 1)
    )
    vmax = np.max(np.abs(v))
    symmetric_potential = bool(np.max(np.abs(v - v[::-1])) <= 1e-12 * max(vmax, 1.0))

    if symmetric_potential:
        energies, vecs = _purify_parity(z, energies, vecs, diag, off)

    states = []
    for idx in range(n_states):
        psi = vecs[:, idx]
        norm = np.sqrt(trapezoid(psi**2, z))
        psi = psi / norm
        # Deterministic global sign: largest-magnitude sample positive.
        peak = np.argmax(np.abs(psi))
        if psi[peak] < 0:
            psi = -psi
        states.append(
            GridWavefunction(
                z=z, values=psi, energy=float(energies[idx]),
                parity=_classify_parity(z, psi),
            )
        )
    return states


def _rayleigh(psi, diag, off):
    h_psi = diag * psi
    h_psi[1:] += off * psi[:-1]
    h_psi[:-1] += off * psi[1:]
    return float(psi @ h_psi) / float(psi @ psi)


def _purify_parity(z, energies, vecs, diag, off):
    """Rotate near-degenerate doublets onto parity eigenvectors.

    For a symmetric potential every eigenvector is a parity eigenstate, but
    inverse iteration returns arbitrary (left/right localized) mixtures when
    a tunneling doublet is degenerate to solver precision.  The symmetric and
    antisymmetric projections of such a pair span the same subspace; their
    Rayleigh quotients recover the sector energies.
    """
    energies = np.array(energies, dtype=float)
    vecs = np.array(vecs, dtype=float)
    scale = np.max(np.abs(energies)) + np.abs(off[0])
    for idx in range(vecs.shape[1]):
        psi = vecs[:, idx]
        mirrored = psi[::-1]
        sym = 0.5 * (psi + mirrored)
        asym = 0.5 * (psi - mirrored)
        n_sym, n_asym = np.linalg.norm(sym), np.linalg.norm(asym)
        if min(n_sym, n_asym) <= 1e-8 * max(n_sym, n_asym):
            continue
        # Mixed state: its partner must be (numerically) degenerate.  Replace
        # the pair by the normalized projections, ordered by energy.
        partner = None
        for j in (idx - 1, idx + 1):
            if 0 <= j < vecs.shape[1] and abs(energies[j] - energies[idx]) <= 1e-6 * scale:
                partner = j
                break
        if partner is None or partner < idx:
            continue
        sym /= n_sym
        asym /= n_asym
        e_sym = _rayleigh(sym, diag, off)
        e_asym = _rayleigh(asym, diag, off)
        pairs = sorted([(e_sym, sym), (e_asym, asym)], key=lambda t: t[0])
        for j, (e, v) in zip((idx, partner), pairs):
            energies[j] = e
            vecs[:, j] = v
    return energies, vecs


def _tridiagonal_apply(z, psi, potential, mass, hbar):
    dz = z[1] - z[0]
    kin = hbar**2 / (mass * dz**2)
    v = np.asarray(potential(z), dtype=float)
    out = (2.0 * kin + v) * psi
    out[1:] -= kin * psi[:-1]
    out[:-1] -= kin * psi[1:]
    return out


def splitting(
    potential: BOPotential,
    half_width: float | None = None,
    n_points: int = 2001,
) -> SplittingResult:
    """Parity splitting Delta = (E_A - E_S)/2 of the double-well doublet.

    Also evaluates Delta as -<phi_R|H|phi_L> on the same grid; the two values
    agree exactly in the two-level subspace.  phi_R = (phi_S + phi_A)/sqrt2 is
    sign-fixed to concentrate on z > 0.

    The eigensolve runs in a dimensionless system (length in r_m, energy in
    f(r_m), hbar = 1) so physical constant sets stay well conditioned; all
    returned quantities are converted back to the input units.
    """
    params = potential.params
    r_m = potential.r_m
    f_m = params.f(r_m)
    half_width = half_width if half_width is not None else 4.0 * r_m
    if half_width < 3.0 * r_m:
        raise ValueError("domain must extend to at least 3 r_m")

    scaled_mass = params.m * r_m**2 * f_m / params.hbar**2

    def scaled_potential(x):
        return np.asarray(potential(np.asarray(x) * r_m)) / f_m

    ground, first = solve_eigenstates(
        scaled_potential, half_width / r_m, n_points, n_states=2,
        mass=scaled_mass, hbar=1.0,
    )
    if ground.parity is not Parity.SYMMETRIC or first.parity is not Parity.ANTISYMMETRIC:
        raise RuntimeError(
            "expected symmetric ground state below antisymmetric first excited state, "
            f"got {ground.parity.value} / {first.parity.value}"
        )
    x = ground.z
    phi_s = ground.values
    phi_a = first.values
    # Choose phi_A's sign so (phi_S + phi_A)/sqrt2 localizes on the right.
    right = x > 0
    if trapezoid((phi_s[right] + phi_a[right]) ** 2, x[right]) < 0.5:
        phi_a = -phi_a
    phi_r = (phi_s + phi_a) / math.sqrt(2.0)
    phi_l = (phi_s - phi_a) / math.sqrt(2.0)

    h_phi_l = _tridiagonal_apply(x, phi_l, scaled_potential, scaled_mass, 1.0)
    dx = x[1] - x[0]
    # Eigenvectors are orthonormal under the discrete inner product; the
    # trapezoid weight matches it up to negligible boundary terms.
    matrix_element = float(phi_r @ h_phi_l) * dx

    # Back to physical units: z = x*r_m, E = eps*f_m, psi -> psi/sqrt(r_m).
    z = x * r_m
    scale = 1.0 / math.sqrt(r_m)

    def physical(wf_values, energy, parity):
        return GridWavefunction(z, wf_values * scale, energy=energy, parity=parity)

    e_s = ground.energy * f_m
    e_a = first.energy * f_m
    return SplittingResult(
        e_s=e_s,
        e_a=e_a,
        delta=0.5 * (e_a - e_s),
        delta_matrix_element=-matrix_element * f_m,
        hbar=params.hbar,
        phi_s=physical(phi_s, e_s, ground.parity),
        phi_a=physical(phi_a, e_a, first.parity),
        phi_r=physical(phi_r, math.nan, Parity.NONE),
        phi_l=physical(phi_l, math.nan, Parity.NONE),
    )


def oscillation(result: SplittingResult, t):
    """Left-right occupation probabilities of |phi_R(t)>.

    p_right = cos^2(Delta t/hbar), p_left = sin^2(Delta t/hbar).  Delta = 0
    means a static (degenerate, symmetry-broken) configuration: p_right = 1.
    """
    t = np.asarray(t, dtype=float)
    if result.delta == 0:
        p_right, p_left = np.ones_like(t), np.zeros_like(t)
    else:
        phase = result.delta * t / result.hbar
        p_right = np.cos(phase) ** 2
        p_left = np.sin(phase) ** 2
    if p_right.ndim == 0:
        return float(p_right), float(p_left)
    return p_right, p_left


def incomplete_beta(a: float, b: float, x: float) -> float:
    """Incomplete beta integral B_{a,b}(x) = int_0^x t^(a-1) (1-t)^(b-1) dt."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    return float(betainc(a, b, x) * beta_complete(a, b))


def _wkb_momenta(params: PhysicalParams):
    """(r_m, k_m, k_c) for the simplified barrier V(z) = 4 mu^2/|z|^3."""
    r_m = well_minimum(params)
    r_c = params.r_c
    if r_c <= 0 or r_c >= r_m:
        raise ValueError("WKB estimate needs 0 < r_c < r_m")
    k_m = math.sqrt(params.m * 4.0 * params.mu**2 / r_m**3)
    k_c = math.sqrt(params.m * 4.0 * params.mu**2 / r_c**3)
    return r_m, k_m, k_c


def wkb_exponent_integral(params: PhysicalParams, energy: float) -> float:
    """Closed-form half-barrier action integral (momentum*length units).

    Evaluates int_0^{r_m} sqrt(m (V(z) - E)) dz for the simplified clamped
    barrier V = 4 mu^2/|z|^3 as
    -2 sqrt(k_m^2 - k^2) r_m - k r_m (k_m/k)^(1/3) B_{5/6,1/2}(k/k_m)
    + 3 sqrt(k_c^2 - k^2) r_c,
    with E = k^2/m and k_m, k_c the momenta at the minimum and cutoff;
    positive orders of r_c are dropped (valid for r_c/r_m << 1).  The full
    symmetric barrier action is twice this value.
    """
    r_m, k_m, k_c = _wkb_momenta(params)
    if params.r_c / r_m > 0.1:
        warnings.warn(
            f"r_c/r_m = {params.r_c / r_m:.3g} > 0.1: outside the r_c expansion regime",
            stacklevel=2,
        )
    v_m = k_m**2 / params.m
    if energy < 0 or energy > v_m * (1.0 + 1e-12):
        raise ValueError("energy must satisfy 0 <= E <= V(r_m)")
    k = math.sqrt(params.m * min(energy, v_m))
    if k == 0:
        beta_term = 0.0
    else:
        beta_term = k * r_m * (k_m / k) ** (1.0 / 3.0) * incomplete_beta(
            5.0 / 6.0, 0.5, k / k_m
        )
    return (
        -2.0 * math.sqrt(max(k_m**2 - k**2, 0.0)) * r_m
        - beta_term
        + 3.0 * math.sqrt(k_c**2 - k**2) * params.r_c
    )


def tunneling_probability(params: PhysicalParams, energy: float = 0.0) -> float:
    """WKB barrier penetration probability w(E) = exp(-2 |full action| / hbar).

    At E = 0 this reduces to
    exp[-8 sqrt(m mu^2/hbar^2) (3/sqrt(r_c) - 2/sqrt(r_m))].
    """
    bracket = wkb_exponent_integral(params, energy)
    return math.exp(-4.0 * abs(bracket) / params.hbar)


def wkb_exponent(params: PhysicalParams, energy: float = 0.0) -> float:
    """The (negative) exponent of tunneling_probability."""
    return -4.0 * abs(wkb_exponent_integral(params, energy)) / params.hbar


def numeric_well_minimum(params: PhysicalParams) -> float:
    """Golden-section argmin of the unregularized double-well potential."""
    mu, g = params.mu, params.g
    r_m = well_minimum(params)

    def raw(z):
        return 2.0 * mu**2 / z**3 + math.sqrt(g**2 * z**2 + 4.0 * mu**4 / z**6)

    res = minimize_scalar(
        raw, bracket=None, bounds=(0.2 * r_m, 5.0 * r_m), method="bounded",
        options={"xatol": 1e-12 * r_m},
    )
    return float(res.x)
