"""Self-contained invariant and oracle suites behind ``dipolepair validate``.

Each suite compares an analytic path against its independent oracle and
reports observed-vs-expected numbers.  ``mutate`` injects a small deliberate
perturbation into one analytic result so the harness itself can be sanity
checked (a healthy run must then report a failure).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import confinement, hamiltonians, measurement, oracles, spinops, tunneling
from .hamiltonians import FieldConfig, FieldKind
from .params import PhysicalParams


@dataclass
class SuiteResult:
    name: str
    ok: bool
    elapsed_s: float
    details: dict = field(default_factory=dict)


def _check_spinops(mutate: str | None) -> dict:
    report = spinops.verify_spin_relations()
    dev = report.max_deviation
    return {"ok": dev <= 1e-12, "max_deviation": dev, "expected": "<= 1e-12"}


def _check_eigensystem(mutate: str | None) -> dict:
    rng = np.random.default_rng(20040503)
    worst = 0.0
    config = FieldConfig(FieldKind.CASE1_EVERYWHERE)
    for _ in range(200):
        params = PhysicalParams(
            mu=rng.uniform(0.2, 5.0), m=1.0,
            b=rng.uniform(0.0, 3.0), B0=rng.uniform(0.0, 3.0),
        )
        z1 = rng.uniform(0.05, 3.0)
        z2 = -rng.uniform(0.05, 3.0)
        block = hamiltonians.two_level_block(params, config, z1, z2)
        pair = hamiltonians.eigensystem(block)
        h = hamiltonians.reduced_hamiltonian(params, config, z1, z2).mat.real
        e_lo, e_hi, _, _ = oracles.diagonalize_ts_block(h)
        e_plus = pair.e_plus
        if mutate == "eigenvalue":
            e_plus *= 1.0 + 1e-6
        scale = max(abs(e_hi), abs(e_lo), 1e-300)
        worst = max(worst, abs(pair.e_minus - e_lo) / scale, abs(e_plus - e_hi) / scale)
    return {"ok": worst <= 1e-10, "max_relative_error": worst, "expected": "<= 1e-10"}


def _check_well_minimum(mutate: str | None) -> dict:
    worst = 0.0
    for b in (0.1, 1.0, 10.0):
        params = PhysicalParams(mu=1.0, m=1.0, b=b, r_c=1e-3)
        analytic = tunneling.well_minimum(params)
        numeric = tunneling.numeric_well_minimum(params)
        worst = max(worst, abs(numeric - analytic) / analytic)
    return {"ok": worst <= 1e-6, "max_relative_error": worst, "expected": "<= 1e-6"}


def _check_wkb(mutate: str | None) -> dict:
    params = PhysicalParams(mu=1.0, m=1.0, b=np.sqrt(240.0), r_c=0.005)
    v_m = 4.0 * params.mu**2 / tunneling.well_minimum(params) ** 3
    worst = 0.0
    for energy in (0.0, 0.5 * v_m, v_m):
        closed = abs(tunneling.wkb_exponent_integral(params, energy))
        quadrature = oracles.wkb_half_action_quadrature(params, energy)
        worst = max(worst, abs(closed - quadrature) / quadrature)
    return {"ok": worst <= 0.01, "max_relative_error": worst, "expected": "<= 1%"}


def _check_splitting(mutate: str | None) -> dict:
    params = PhysicalParams(mu=1.0, m=3.0, b=np.sqrt(240.0), r_c=0.5)
    result = tunneling.splitting(tunneling.bo_potential(params), n_points=2001)
    rel = abs(result.delta - result.delta_matrix_element) / abs(result.delta)
    ordered = result.e_s <= result.e_a
    return {
        "ok": rel <= 1e-8 and ordered,
        "identity_relative_error": rel,
        "parity_ordered": ordered,
        "expected": "identity <= 1e-8, E_S <= E_A",
    }


def _check_measurement(mutate: str | None) -> dict:
    rng = np.random.default_rng(7)
    worst_rho = 0.0
    worst_c = 0.0
    for _ in range(50):
        theta = rng.uniform(-np.pi, np.pi)
        closed = measurement.rho_left("-a", theta).mat
        brute = oracles.partial_trace_left(theta)
        worst_rho = max(worst_rho, float(np.max(np.abs(closed - brute))))
        c_closed = measurement.spin_concurrence(theta)
        c_brute = oracles.concurrence_spin_flip(
            measurement.minus_a_spin_amplitudes(theta)
        )
        worst_c = max(worst_c, abs(c_closed - c_brute))
    return {
        "ok": worst_rho <= 1e-12 and worst_c <= 1e-12,
        "max_rho_deviation": worst_rho,
        "max_concurrence_deviation": worst_c,
        "expected": "<= 1e-12",
    }


def _check_confinement(mutate: str | None) -> dict:
    trap = confinement.TrapConfig(m=1.0, Omega=2.0, z0=1.5)
    delta_s, delta_t = confinement.hyperfine_expectations(trap)
    delta_num = oracles.delta_expectation_quadrature(trap)
    com, rel_s, rel_t = confinement.kinetic_expectations(trap)
    errors = {
        "delta_S": abs(delta_s - delta_num) / delta_num,
        "com": abs(com - oracles.kinetic_expectation_numeric(trap, "com")) / com,
        "rel_S": abs(rel_s - oracles.kinetic_expectation_numeric(trap, "singlet")) / rel_s,
        "rel_T": abs(rel_t - oracles.kinetic_expectation_numeric(trap, "triplet")) / rel_t,
    }
    worst = max(errors.values())
    return {
        "ok": worst <= 1e-6 and delta_t == 0.0,
        "relative_errors": errors,
        "delta_T": delta_t,
        "expected": "<= 1e-6, delta_T == 0",
    }


_SUITES = {
    "spinops.relations": _check_spinops,
    "hamiltonians.eigensystem": _check_eigensystem,
    "tunneling.well_minimum": _check_well_minimum,
    "tunneling.wkb": _check_wkb,
    "tunneling.splitting": _check_splitting,
    "measurement.rho_and_concurrence": _check_measurement,
    "confinement.expectations": _check_confinement,
}


def run_all(mutate: str | None = None) -> list[SuiteResult]:
    results = []
    for name, fn in _SUITES.items():
        start = time.perf_counter()
        out = fn(mutate)
        elapsed = time.perf_counter() - start
        ok = bool(out.pop("ok"))
        results.append(SuiteResult(name=name, ok=ok, elapsed_s=elapsed, details=out))
    return results
