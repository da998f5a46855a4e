import math

import numpy as np
import pytest
from scipy.integrate import quad

from dipolepair import NEUTRON_CGS, PhysicalParams
from dipolepair.oracles import harmonic_levels, wkb_half_action_quadrature
from dipolepair.tunneling import (
    Parity,
    Regularization,
    bo_potential,
    incomplete_beta,
    numeric_well_minimum,
    oscillation,
    solve_eigenstates,
    splitting,
    tunneling_probability,
    well_minimum,
    wkb_exponent,
    wkb_exponent_integral,
)

NEUTRON_B = 1.4968e18  # gradient (G/cm) placing the wells at r_m = 1e-10 cm


@pytest.fixture
def params():
    return PhysicalParams(mu=1.0, m=3.0, b=math.sqrt(240.0), r_c=0.5)


def test_well_minimum_closed_form_vs_numeric():
    for b in (0.05, 0.5, 5.0, 50.0):
        params = PhysicalParams(mu=1.0, m=1.0, b=b, r_c=1e-4)
        analytic = well_minimum(params)
        numeric = numeric_well_minimum(params)
        assert numeric == pytest.approx(analytic, rel=1e-6)


def test_potential_value_at_minimum():
    params = PhysicalParams(mu=1.3, m=1.0, b=0.7, r_c=1e-4)
    potential = bo_potential(params)
    r_m = potential.r_m
    assert potential(r_m) == pytest.approx(10.0 * params.f(r_m), rel=1e-10)


def test_bo_potential_preconditions():
    with pytest.raises(ValueError):
        bo_potential(PhysicalParams(mu=1.0, m=1.0, b=1.0, r_c=0.0))
    with pytest.raises(ValueError):
        # Cutoff beyond the minimum swallows the wells.
        bo_potential(PhysicalParams(mu=1.0, m=1.0, b=1.0, r_c=10.0))
    with pytest.raises(ValueError):
        well_minimum(PhysicalParams(mu=1.0, m=1.0, b=0.0))


def test_bo_potential_even_and_clamped(params):
    potential = bo_potential(params)
    z = np.array([-1.2, -0.1, 0.1, 1.2])
    v = potential(z)
    assert v[0] == v[3] and v[1] == v[2]
    # Inside the cutoff the clamp freezes the value at V(r_c).
    assert potential(0.01) == potential(params.r_c)
    wall = bo_potential(params, Regularization.HARD_WALL)
    assert math.isinf(wall(0.01))


def test_solver_reproduces_harmonic_levels():
    # H = p^2/m + k z^2/2 with m = 2, k = 8: exact ladder hbar*omega*(n+1/2).
    mass, k, hbar = 2.0, 8.0, 1.0
    states = solve_eigenstates(
        lambda z: 0.5 * k * np.asarray(z) ** 2,
        half_width=12.0, n_points=4001, n_states=4, mass=mass, hbar=hbar,
    )
    exact = harmonic_levels(k, mass, hbar, 4)
    for state, e in zip(states, exact):
        assert state.energy == pytest.approx(e, rel=1e-4)
    assert states[0].parity is Parity.SYMMETRIC
    assert states[1].parity is Parity.ANTISYMMETRIC


def test_splitting_identity_and_ordering(params):
    result = splitting(bo_potential(params), n_points=2001)
    assert result.e_s < result.e_a
    assert result.phi_s.parity is Parity.SYMMETRIC
    assert result.phi_a.parity is Parity.ANTISYMMETRIC
    assert result.delta > 0
    # Spectral gap equals the localized-state matrix element -<phi_R|H|phi_L>.
    assert result.delta_matrix_element == pytest.approx(result.delta, rel=1e-8)
    # phi_R is right-localized and normalized.
    assert result.phi_r.probability_right() > 0.99
    assert result.phi_r.norm() == pytest.approx(1.0, abs=1e-10)


def test_swap_time_and_oscillation(params):
    result = splitting(bo_potential(params), n_points=2001)
    t_swap = result.t_swap
    assert t_swap == pytest.approx(math.pi * params.hbar / (2.0 * result.delta))
    p_right, p_left = oscillation(result, t_swap)
    assert p_right <= 1e-10
    assert p_left == pytest.approx(1.0, abs=1e-10)
    times = np.linspace(0.0, 4.0 * t_swap, 1000)
    p_r, p_l = oscillation(result, times)
    assert np.max(np.abs(p_r + p_l - 1.0)) <= 1e-12


def test_incomplete_beta_reference_value():
    # B_{5/6,1/2}(1) is the complete beta function, about 2.2405.
    assert incomplete_beta(5.0 / 6.0, 0.5, 1.0) == pytest.approx(2.24, abs=0.01)
    quad_val, _ = quad(lambda t: t ** (-1.0 / 6.0) / math.sqrt(1.0 - t), 0.0, 0.5)
    assert incomplete_beta(5.0 / 6.0, 0.5, 0.5) == pytest.approx(quad_val, rel=1e-10)
    with pytest.raises(ValueError):
        incomplete_beta(5.0 / 6.0, 0.5, 1.5)


def test_wkb_closed_form_vs_quadrature():
    params = PhysicalParams(mu=1.0, m=1.0, b=math.sqrt(240.0), r_c=0.005)
    v_m = 4.0 * params.mu**2 / well_minimum(params) ** 3
    for energy in (0.0, 0.3 * v_m, v_m):
        closed = abs(wkb_exponent_integral(params, energy))
        reference = wkb_half_action_quadrature(params, energy)
        assert closed == pytest.approx(reference, rel=0.01)


def test_wkb_zero_energy_reduction():
    params = PhysicalParams(mu=1.0, m=1.0, b=math.sqrt(240.0), r_c=0.005)
    r_m = well_minimum(params)
    expected = -8.0 * math.sqrt(params.m * params.mu**2) / params.hbar * (
        3.0 / math.sqrt(params.r_c) - 2.0 / math.sqrt(r_m)
    )
    assert wkb_exponent(params, 0.0) == pytest.approx(expected, rel=1e-12)
    assert tunneling_probability(params, 0.0) == pytest.approx(
        math.exp(expected), rel=1e-12
    )


def test_wkb_energy_domain():
    params = PhysicalParams(mu=1.0, m=1.0, b=math.sqrt(240.0), r_c=0.005)
    v_m = 4.0 * params.mu**2 / well_minimum(params) ** 3
    with pytest.raises(ValueError):
        wkb_exponent_integral(params, -0.1 * v_m)
    with pytest.raises(ValueError):
        wkb_exponent_integral(params, 1.5 * v_m)
    # The top of the barrier itself is a valid boundary case.
    assert abs(wkb_exponent_integral(params, v_m)) > 0


def test_wkb_warns_outside_expansion_regime():
    params = PhysicalParams(mu=1.0, m=1.0, b=math.sqrt(240.0), r_c=0.5)
    with pytest.warns(UserWarning, match="r_c/r_m"):
        wkb_exponent_integral(params, 0.0)


def test_neutron_scale_probability():
    params = PhysicalParams(b=NEUTRON_B, **NEUTRON_CGS)
    r_m = well_minimum(params)
    assert r_m / params.r_c >= 1e3
    w = tunneling_probability(params, 0.0)
    assert 0.3 <= w <= 0.5
