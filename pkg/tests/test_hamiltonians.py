import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dipolepair import (
    FieldConfig,
    FieldKind,
    PhysicalParams,
    Regime,
    adiabatic_min_time,
    asymptotic_limits,
    eigensystem,
    level_crossing_check,
    reduced_hamiltonian,
    two_level_block,
)
from dipolepair.hamiltonians import b_total, field_at
from dipolepair.oracles import diagonalize_ts_block

CASE1 = FieldConfig(FieldKind.CASE1_EVERYWHERE)
CASE2_CONST = FieldConfig(FieldKind.CASE2_CONSTANT_RIGHT)
CASE2_INHOM = FieldConfig(FieldKind.CASE2_INHOMOGENEOUS_RIGHT)


def test_field_profiles():
    params = PhysicalParams(mu=1.0, m=1.0, b=2.0, B0=3.0)
    assert field_at(params, CASE1, -1.5) == 3.0 - 3.0
    assert field_at(params, CASE2_CONST, -1.5) == 0.0
    assert field_at(params, CASE2_CONST, 1.5) == 3.0
    assert field_at(params, CASE2_INHOM, 1.5) == 3.0 + 3.0


def test_b_total_sees_only_the_right_particle():
    params = PhysicalParams(mu=1.0, m=1.0, b=2.0, B0=3.0)
    assert b_total(params, CASE2_INHOM, 1.0, -4.0) == 5.0
    # Symmetric under particle exchange.
    assert b_total(params, CASE2_INHOM, -4.0, 1.0) == 5.0


def test_reduced_hamiltonian_is_hermitian_and_blocked():
    params = PhysicalParams(mu=1.2, m=1.0, b=0.8, B0=0.5)
    for config in (CASE1, CASE2_CONST, CASE2_INHOM):
        h = reduced_hamiltonian(params, config, 0.9, -1.4)
        assert h.is_hermitian()
        # |T+-1> decouple from the {|T>, |S>} block.
        assert np.allclose(h.mat[:2, 2:], 0.0)


def test_two_level_block_matches_reduced_hamiltonian():
    params = PhysicalParams(mu=1.2, m=1.0, b=0.8, B0=0.5)
    for config in (CASE1, CASE2_CONST, CASE2_INHOM):
        z1, z2 = 0.9, -1.4
        block = two_level_block(params, config, z1, z2)
        h = reduced_hamiltonian(params, config, z1, z2).mat.real
        assert h[2, 2] == pytest.approx(4.0 * block.f, rel=1e-14)
        assert h[3, 3] == 0.0
        assert h[2, 3] == pytest.approx(block.coupling, rel=1e-14)


def test_mixing_angle_branch():
    params = PhysicalParams(mu=1.0, m=1.0, b=2.0)
    block = two_level_block(params, CASE1, 1.0, -1.0)
    # cos(angle) >= 0 and sin(angle) carries the coupling sign.
    assert math.cos(block.angle) >= 0.0
    assert math.copysign(1.0, math.sin(block.angle)) == math.copysign(
        1.0, block.coupling
    )


def test_eigensystem_against_dense_oracle():
    rng = np.random.default_rng(11)
    for _ in range(50):
        params = PhysicalParams(
            mu=rng.uniform(0.2, 5.0), m=1.0,
            b=rng.uniform(0.0, 3.0), B0=rng.uniform(0.0, 3.0),
        )
        config = rng.choice([CASE1, CASE2_CONST, CASE2_INHOM])
        z1, z2 = rng.uniform(0.05, 3.0), -rng.uniform(0.05, 3.0)
        block = two_level_block(params, config, z1, z2)
        pair = eigensystem(block)
        h = reduced_hamiltonian(params, config, z1, z2).mat.real
        e_lo, e_hi, v_lo, v_hi = diagonalize_ts_block(h)
        scale = max(abs(e_lo), abs(e_hi))
        assert abs(pair.e_minus - e_lo) <= 1e-10 * scale
        assert abs(pair.e_plus - e_hi) <= 1e-10 * scale
        # Directions only: the global eigenvector sign is a free convention.
        lo = pair.state_minus.amps[[2, 3]].real
        hi = pair.state_plus.amps[[2, 3]].real
        assert min(np.max(np.abs(lo - v_lo)), np.max(np.abs(lo + v_lo))) <= 1e-10
        assert min(np.max(np.abs(hi - v_hi)), np.max(np.abs(hi + v_hi))) <= 1e-10


@settings(max_examples=60)
@given(
    mu=st.floats(min_value=0.2, max_value=5.0),
    b=st.floats(min_value=0.0, max_value=3.0),
    z1=st.floats(min_value=0.05, max_value=3.0),
    z2=st.floats(min_value=-3.0, max_value=-0.05),
)
def test_eigenvalue_sum_and_product_invariants(mu, b, z1, z2):
    params = PhysicalParams(mu=mu, m=1.0, b=b)
    block = two_level_block(params, CASE1, z1, z2)
    pair = eigensystem(block)
    # tr = 4f and det = -coupling^2 of the 2x2 block.
    scale = max(abs(pair.e_plus), abs(pair.e_minus), 1e-30)
    assert pair.e_minus + pair.e_plus == pytest.approx(4.0 * block.f, abs=1e-12 * scale)
    assert pair.e_minus * pair.e_plus == pytest.approx(
        -block.coupling**2, abs=1e-12 * scale**2
    )
    assert pair.state_minus.overlap(pair.state_plus) == pytest.approx(0.0, abs=1e-12)


def test_small_r_asymptotics():
    params = PhysicalParams(mu=1.0, m=1.0, b=0.5)
    r = 1e-2 * (4.0 * params.mu / params.b) ** 0.25
    block = two_level_block(params, CASE1, r / 2.0, -r / 2.0)
    pair = eigensystem(block)
    limit = asymptotic_limits(params, Regime.SMALL_R, r)
    assert abs(pair.e_minus - limit.e_minus) <= 1e-3 * abs(limit.e_minus)
    # E+ -> 4f = 4 mu^2/r^3.
    assert abs(pair.e_plus - limit.e_plus) <= 1e-3 * limit.e_plus


def test_large_r_asymptotics():
    params = PhysicalParams(mu=1.0, m=1.0, b=0.5)
    r = 1e2 * (4.0 * params.mu / params.b) ** 0.25
    block = two_level_block(params, CASE1, r / 2.0, -r / 2.0)
    pair = eigensystem(block)
    limit = asymptotic_limits(params, Regime.LARGE_R, r)
    assert abs(pair.e_minus - limit.e_minus) <= 1e-3 * abs(limit.e_minus)
    assert abs(pair.e_plus - limit.e_plus) <= 1e-3 * limit.e_plus
    # The lower state approaches the product state (|T> + |S>)/sqrt2.
    overlap = abs(pair.state_minus.overlap(limit.state_minus))
    assert overlap == pytest.approx(1.0, abs=1e-3)


def test_level_crossing_case1():
    params = PhysicalParams(mu=1.0, m=1.0, b=0.01, B0=5.0)
    report = level_crossing_check(params, CASE1, 0.5, -0.5)
    assert bool(report)
    assert all(m > 0 for m in report.margins.values())
    # No constant field: the |T+-1> levels collapse onto -2f and must cross.
    weak = PhysicalParams(mu=1.0, m=1.0, b=0.01, B0=0.0)
    assert not level_crossing_check(weak, CASE1, 0.5, -0.5)


def test_level_crossing_case2_threshold():
    # 2 mu B_T < 3 f(r) required; tune B0 across the threshold.
    z1, z2 = 0.5, -0.5
    f = 1.0  # mu^2/r^3 with mu = 1, r = 1
    safe = PhysicalParams(mu=1.0, m=1.0, B0=1.4 * f)
    tight = PhysicalParams(mu=1.0, m=1.0, B0=1.6 * f)
    assert level_crossing_check(safe, CASE2_CONST, z1, z2).ok
    assert not level_crossing_check(tight, CASE2_CONST, z1, z2).ok


def test_adiabatic_time_case1():
    # b = 0: nothing to switch adiabatically against.
    static = PhysicalParams(mu=1.0, m=1.0, b=0.0)
    assert adiabatic_min_time(static, CASE1, 1.0, -1.0) == 0.0
    # Unit constants, r = 1: T >> b^2/(32 mu^3 sqrt(b^2 + 16 mu^2)).
    params = PhysicalParams(mu=1.0, m=1.0, b=1.0)
    expected = 1.0 / (32.0 * math.sqrt(17.0))
    assert adiabatic_min_time(params, CASE1, 0.5, -0.5) == pytest.approx(expected)


def test_adiabatic_time_case2():
    params = PhysicalParams(mu=2.0, m=1.0, B0=1.0)
    r = 1.5
    expected = (9.0 / 80.0) * params.hbar / params.f(r)
    got = adiabatic_min_time(params, CASE2_CONST, r / 2.0, -r / 2.0)
    assert got == pytest.approx(expected, rel=1e-14)


def test_coincident_particles_rejected():
    params = PhysicalParams(mu=1.0, m=1.0)
    with pytest.raises(ValueError):
        reduced_hamiltonian(params, CASE1, 0.3, 0.3)
    with pytest.raises(ValueError):
        two_level_block(params, CASE2_CONST, -0.2, -0.2)
