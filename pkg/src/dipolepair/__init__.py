"""Two interacting spin-1/2 magnetic dipoles: reduced Hamiltonians,
effective-potential surfaces, double-well tunneling, and half-space
measurement predictions."""

from .hamiltonians import (
    EigenPair,
    FieldConfig,
    FieldKind,
    Regime,
    TwoLevelBlock,
    adiabatic_min_time,
    asymptotic_limits,
    eigensystem,
    level_crossing_check,
    reduced_hamiltonian,
    two_level_block,
)
from .params import NEUTRON_CGS, PhysicalParams
from .spinops import (
    SpinOperator,
    SpinVector,
    dipole_coupling,
    potential_matrix,
    total_sz_operator,
    verify_spin_relations,
)
from .surfaces import Branch, GridSpec, diagonal_cut, effective_force, sample_surface
from .tunneling import (
    BOPotential,
    bo_potential,
    incomplete_beta,
    oscillation,
    solve_eigenstates,
    splitting,
    tunneling_probability,
    well_minimum,
    wkb_exponent,
    wkb_exponent_integral,
)

__version__ = "0.1.0"

__all__ = [
    "NEUTRON_CGS",
    "PhysicalParams",
    "SpinOperator",
    "SpinVector",
    "dipole_coupling",
    "potential_matrix",
    "total_sz_operator",
    "verify_spin_relations",
    "EigenPair",
    "FieldConfig",
    "FieldKind",
    "Regime",
    "TwoLevelBlock",
    "adiabatic_min_time",
    "asymptotic_limits",
    "eigensystem",
    "level_crossing_check",
    "reduced_hamiltonian",
    "two_level_block",
    "Branch",
    "GridSpec",
    "diagonal_cut",
    "effective_force",
    "sample_surface",
    "BOPotential",
    "bo_potential",
    "incomplete_beta",
    "oscillation",
    "solve_eigenstates",
    "splitting",
    "tunneling_probability",
    "well_minimum",
    "wkb_exponent",
    "wkb_exponent_integral",
]
