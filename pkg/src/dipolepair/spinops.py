"""Spin algebra for two spin-1/2 particles.

Everything lives in the ordered coupled basis {|T-1>, |T1>, |T>, |S>} shared
by all modules.  Operators can also be assembled from raw Pauli tensor
products in the product basis {|++>, |+->, |-+>, |-->} and rotated into the
coupled basis, which is how the eigenrelation self-check works.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .params import PhysicalParams

# Indices into the coupled basis.
T_M1, T_P1, T0, S = 0, 1, 2, 3

BASIS_LABELS = ("T-1", "T1", "T", "S")

SQRT2 = np.sqrt(2.0)

# Pauli matrices in the single-particle {|+>, |->} basis.
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

#: Columns are the coupled basis states expressed in the product basis
#: {|++>, |+->, |-+>, |-->}:  |T-1>=|-->, |T1>=|++>,
#: |T>=(|+->+|-+>)/sqrt2, |S>=(|+->-|-+>)/sqrt2.
COUPLING_MATRIX = np.array(
    [
        [0, 1, 0, 0],
        [0, 0, 1 / SQRT2, 1 / SQRT2],
        [0, 0, 1 / SQRT2, -1 / SQRT2],
        [1, 0, 0, 0],
    ],
    dtype=complex,
)


@dataclass(frozen=True)
class SpinVector:
    """State of the two-spin system, 4 complex amplitudes in the coupled basis."""

    amps: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.amps, dtype=complex).reshape(4)
        object.__setattr__(self, "amps", a)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def require_normalized(self, tol: float = 1e-12) -> None:
        if abs(self.norm - 1.0) > tol:
            raise ValueError(f"state norm {self.norm} deviates from 1 by more than {tol}")

    def overlap(self, other: "SpinVector") -> complex:
        return complex(np.vdot(self.amps, other.amps))


@dataclass(frozen=True)
class SpinOperator:
    """4x4 operator in the coupled basis {|T-1>, |T1>, |T>, |S>}."""

    mat: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.mat, dtype=complex).reshape(4, 4)
        object.__setattr__(self, "mat", m)

    def is_hermitian(self, tol: float = 1e-12) -> bool:
        return bool(np.linalg.norm(self.mat - self.mat.conj().T) <= tol)

    def apply(self, state: SpinVector) -> SpinVector:
        return SpinVector(self.mat @ state.amps)

    def commutator_norm(self, other: "SpinOperator") -> float:
        c = self.mat @ other.mat - other.mat @ self.mat
        return float(np.linalg.norm(c))


def basis_state(index: int) -> SpinVector:
    amps = np.zeros(4, dtype=complex)
    amps[index] = 1.0
    return SpinVector(amps)


def dipole_coupling(params: PhysicalParams, r: float) -> float:
    """Dipole-dipole coupling f(r) = mu^2/r^3 for separation r > 0."""
    return params.f(r)


def potential_matrix(params: PhysicalParams, r: float) -> SpinOperator:
    """Spin-spin interaction f(r)*diag(-2, -2, 4, 0) in the coupled basis."""
    f = dipole_coupling(params, r)
    return SpinOperator(np.diag([-2.0 * f, -2.0 * f, 4.0 * f, 0.0]))


def total_sz_operator() -> SpinOperator:
    """S_z1 + S_z2 in units of hbar: diag(-1, +1, 0, 0) in the coupled basis."""
    return SpinOperator(np.diag([-1.0, 1.0, 0.0, 0.0]))


def sigma_dot_sigma_product_basis() -> np.ndarray:
    """sigma_1 . sigma_2 assembled from Pauli tensor products (product basis)."""
    out = np.zeros((4, 4), dtype=complex)
    for s in (SIGMA_X, SIGMA_Y, SIGMA_Z):
        out += np.kron(s, s)
    return out


def sigma_z1_sigma_z2_product_basis() -> np.ndarray:
    return np.kron(SIGMA_Z, SIGMA_Z)


def to_coupled_basis(mat_product: np.ndarray) -> np.ndarray:
    """Rotate an operator from the product basis into the coupled basis."""
    c = COUPLING_MATRIX
    return c.conj().T @ mat_product @ c


@dataclass(frozen=True)
class SpinRelationReport:
    """Result of the eigenrelation self-check of the coupled basis operators."""

    deviations: dict = field(default_factory=dict)

    @property
    def max_deviation(self) -> float:
        return max(self.deviations.values())


def verify_spin_relations() -> SpinRelationReport:
    """Check the six coupled-basis eigenrelations from raw tensor products.

    sigma1.sigma2 acts as -3 on |S> and +1 on each triplet state;
    sigma_z1*sigma_z2 acts as -1 on |S> and |T>, +1 on |T+-1>.  Operators are
    built in the product basis and rotated, never hard-coded.
    """
    ss = to_coupled_basis(sigma_dot_sigma_product_basis())
    zz = to_coupled_basis(sigma_z1_sigma_z2_product_basis())

    expected = {
        "sigma.sigma |S> = -3|S>": (ss, S, -3.0),
        "sigma.sigma |T-1> = |T-1>": (ss, T_M1, 1.0),
        "sigma.sigma |T1> = |T1>": (ss, T_P1, 1.0),
        "sigma.sigma |T> = |T>": (ss, T0, 1.0),
        "sz1 sz2 |S> = -|S>": (zz, S, -1.0),
        "sz1 sz2 |T> = -|T>": (zz, T0, -1.0),
        "sz1 sz2 |T-1> = |T-1>": (zz, T_M1, 1.0),
        "sz1 sz2 |T1> = |T1>": (zz, T_P1, 1.0),
    }
    deviations = {}
    for name, (op, idx, eig) in expected.items():
        vec = basis_state(idx).amps
        deviations[name] = float(np.linalg.norm(op @ vec - eig * vec))
    return SpinRelationReport(deviations)
