"""Physical parameters and derived scales for the two-dipole system."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalParams:
    """Dimensional constants of the two-particle dipole system.

    Gaussian-unit convention: ``mu**2 / r**3`` is an energy directly, with no
    4*pi factors.  ``b`` is the field gradient and ``B0`` the constant field,
    both allowed to be zero; everything else must be strictly positive.

    Attributes
    ----------
    mu : magnetic moment
    m : particle mass
    b : field gradient (field / length)
    B0 : constant field
    hbar : reduced Planck constant (1.0 in the internal unit system)
    r_c : short-distance cutoff length for the regularized potential
    """

    mu: float
    m: float
    b: float = 0.0
    B0: float = 0.0
    hbar: float = 1.0
    r_c: float = 0.0

    def __post_init__(self):
        if self.mu <= 0:
            raise ValueError("mu must be positive")
        if self.m <= 0:
            raise ValueError("m must be positive")
        if self.hbar <= 0:
            raise ValueError("hbar must be positive")
        if self.b < 0:
            raise ValueError("b must be >= 0")
        if self.B0 < 0:
            raise ValueError("B0 must be >= 0")
        if self.r_c < 0:
            raise ValueError("r_c must be >= 0")

    @property
    def g(self) -> float:
        """Gradient coupling g = b*mu/2 of the singlet-triplet block."""
        return self.b * self.mu / 2.0

    @property
    def E0(self) -> float:
        """Energy scale mu*B0 used to normalize plotted surfaces."""
        return self.mu * self.B0

    @property
    def r0(self) -> float:
        """Length scale where the constant-field energy equals 2f: (2mu/B0)^(1/3)."""
        if self.B0 <= 0:
            raise ValueError("r0 requires B0 > 0")
        return (2.0 * self.mu / self.B0) ** (1.0 / 3.0)

    def f(self, r: float) -> float:
        """Dipole-dipole coupling mu^2/r^3 at separation r > 0."""
        if r <= 0:
            raise ValueError(f"separation must be positive, got {r}")
        return self.mu**2 / r**3


#: Neutron-scale constants in Gaussian (cgs) units: mass in g, moment in
#: erg/G, hbar in erg*s, cutoff 1e-13 cm (about the neutron Compton wavelength).
NEUTRON_CGS = dict(
    m=1.6749e-24,
    mu=9.662e-24,
    hbar=1.0546e-27,
    r_c=1.0e-13,
)
