"""Envelope exponent and field samples: oracle values and exact symmetries."""

from __future__ import annotations

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dressedprobe import (
    CGS,
    AtomEnsemble,
    CausalityViolation,
    ProbeField,
    PumpField,
    ResonancePole,
    SuperpositionState,
    exponent,
    exponent_grid,
    field_sample,
    k_scale,
    modulation_depth,
    sideband_brackets,
)

import oracles
from conftest import (
    ALPHA,
    BETA,
    D_SQUARED,
    DETUNING,
    FROZEN,
    OMEGA0,
    PROBE_DELTA,
    RABI,
    RHO_DENSE,
    RHO_TRAIN,
)


@pytest.fixture(scope="module")
def geometry(pump):
    omega_prime = pump.omega_prime
    return {
        "omega_prime": omega_prime,
        "period": 2.0 * math.pi / omega_prime,
        "length": 2.0 * math.pi * CGS.c / omega_prime,
        "z_half": math.pi * CGS.c / omega_prime,
        "t_half": math.pi / omega_prime,
    }


class TestSidebandBrackets:
    def test_exact_fractions_at_zero_detuning(self, ensemble_dense):
        rabi = 6.0e9
        pump = PumpField.for_ensemble(ensemble_dense, detuning=0.0, rabi=rabi)
        brackets = sideband_brackets(
            pump, pump.omega_p - 2.0 * rabi, rabi, guard=0.0
        )
        assert brackets.b1 == pytest.approx(5.0 / 6.0, rel=1e-12)
        assert brackets.b2 == pytest.approx(3.0 / 2.0, rel=1e-12)

    def test_documented_values(self, pump, probe):
        brackets = sideband_brackets(pump, probe.omega, pump.omega_prime)
        assert brackets.b1 == pytest.approx(FROZEN["b1"], rel=1e-12)
        assert brackets.b2 == pytest.approx(FROZEN["b2"], rel=1e-12)
        b1, b2 = oracles.sideband_brackets(DETUNING, RABI, PROBE_DELTA)
        assert brackets.b1 == pytest.approx(float(b1), rel=1e-12)
        assert brackets.b2 == pytest.approx(float(b2), rel=1e-12)

    def test_pole_at_hypercombination_offset(self, pump):
        omega_prime = pump.omega_prime
        with pytest.raises(ResonancePole) as info:
            sideband_brackets(
                pump, pump.omega_p - omega_prime, omega_prime
            )
        assert info.value.denominator == "omega_p - omega - omega_prime"

    def test_exact_pole_hit_with_zero_guard(self):
        # Small exact numbers: delta_po = omega_prime = 3 exactly.
        pump = PumpField(omega_p=10.0, rabi=3.0, detuning=0.0)
        with pytest.raises(ResonancePole):
            sideband_brackets(pump, 7.0, 3.0, guard=0.0)

    def test_rayleigh_pole(self, pump):
        with pytest.raises(ResonancePole) as info:
            sideband_brackets(pump, pump.omega_p, pump.omega_prime)
        assert info.value.denominator == "omega_p - omega"


class TestExponent:
    def test_entry_face_is_exactly_zero(
        self, ensemble_dense, pump, state, probe
    ):
        for t in (0.0, 1e-12, 3.7e-11):
            mod = exponent(ensemble_dense, pump, state, probe, 0.0, t)
            assert mod.g == 0.0
            assert mod.depth == 0.0

    def test_pure_dressed_state_is_unmodulated(
        self, ensemble_dense, pump, probe, geometry
    ):
        pure = SuperpositionState(alpha=1.0, beta=0.0)
        mod = exponent(
            ensemble_dense, pump, pure, probe, geometry["z_half"], 1e-11
        )
        assert mod.g == 0.0

    def test_documented_k_scale(self, ensemble_dense, pump, probe):
        assert k_scale(ensemble_dense, pump, probe.omega) == pytest.approx(
            FROZEN["k_dense"], rel=1e-12
        )

    def test_documented_exponent_value(
        self, ensemble_dense, pump, state, probe, geometry
    ):
        mod = exponent(
            ensemble_dense,
            pump,
            state,
            probe,
            geometry["z_half"],
            geometry["t_half"],
        )
        # At theta = w' z / c = pi and w' t = pi the closed form collapses
        # to 2 alpha beta K (b2 - b1) for real amplitudes.
        assert mod.g.real == pytest.approx(FROZEN["re_g_dense"], rel=1e-12)
        assert mod.g.imag == pytest.approx(0.0, abs=1e-9)
        assert mod.k_scale == pytest.approx(FROZEN["k_dense"], rel=1e-12)

    def test_negative_z_rejected(self, ensemble_dense, pump, state, probe):
        with pytest.raises(ValueError):
            exponent(ensemble_dense, pump, state, probe, -1.0, 0.0)

    def test_antiperiodicity_on_grid(
        self, ensemble_dense, pump, state, probe, geometry
    ):
        z = np.linspace(0.0, geometry["length"], 64, endpoint=False)
        t = np.linspace(0.0, geometry["period"], 64, endpoint=False)
        g = exponent_grid(ensemble_dense, pump, state, probe.omega, z, t)
        g_shifted = exponent_grid(
            ensemble_dense,
            pump,
            state,
            probe.omega,
            z,
            t + 0.5 * geometry["period"],
        )
        assert np.max(np.abs(g + g_shifted) / (1.0 + np.abs(g))) < 1e-9

    def test_periodicity_in_time_and_space(
        self, ensemble_dense, pump, state, probe, geometry
    ):
        z0, t0 = 0.31 * geometry["length"], 0.2 * geometry["period"]
        ref = exponent(ensemble_dense, pump, state, probe, z0, t0).g
        shift_t = exponent(
            ensemble_dense, pump, state, probe, z0, t0 + geometry["period"]
        ).g
        shift_z = exponent(
            ensemble_dense, pump, state, probe, z0 + geometry["length"], t0
        ).g
        assert shift_t == pytest.approx(ref, rel=1e-9)
        assert shift_z == pytest.approx(ref, rel=1e-9)

    def test_zero_mean_over_period(
        self, ensemble_dense, pump, state, probe, geometry
    ):
        t = np.linspace(0.0, geometry["period"], 1024, endpoint=False)
        g = exponent_grid(
            ensemble_dense,
            pump,
            state,
            probe.omega,
            np.array([0.4 * geometry["length"]]),
            t,
        )[0]
        assert abs(float(np.mean(g.real))) < 1e-9

    def test_exponent_linear_in_density(self, pump, state, probe, geometry):
        lo_gas = AtomEnsemble(
            omega0=OMEGA0, d=math.sqrt(D_SQUARED), rho=RHO_TRAIN
        )
        hi_gas = AtomEnsemble(
            omega0=OMEGA0, d=math.sqrt(D_SQUARED), rho=2.0 * RHO_TRAIN
        )
        z, t = 0.23 * geometry["length"], 0.71 * geometry["period"]
        lo = exponent(lo_gas, pump, state, probe, z, t)
        hi = exponent(hi_gas, pump, state, probe, z, t)
        assert hi.g == 2.0 * lo.g
        assert hi.depth == 2.0 * lo.depth

    def test_pure_function_bit_identical(
        self, ensemble_dense, pump, state, probe, geometry
    ):
        args = (ensemble_dense, pump, state, probe, geometry["z_half"], 1e-11)
        assert exponent(*args).g == exponent(*args).g

    @settings(max_examples=25, deadline=None)
    @given(
        z_frac=st.floats(min_value=0.0, max_value=2.0),
        t_frac=st.floats(min_value=0.0, max_value=2.0),
        beta_mag=st.floats(min_value=0.01, max_value=0.7),
        phase=st.floats(min_value=0.0, max_value=2.0 * math.pi),
    )
    def test_half_period_flip_property(self, z_frac, t_frac, beta_mag, phase):
        ensemble = AtomEnsemble(
            omega0=OMEGA0, d=math.sqrt(D_SQUARED), rho=RHO_DENSE
        )
        pump = PumpField.for_ensemble(ensemble, detuning=DETUNING, rabi=RABI)
        state = SuperpositionState(
            alpha=math.sqrt(1.0 - beta_mag**2),
            beta=beta_mag * cmath.exp(1j * phase),
        )
        probe = ProbeField(omega=pump.omega_p - PROBE_DELTA)
        omega_prime = pump.omega_prime
        z = z_frac * 2.0 * math.pi * CGS.c / omega_prime
        t = t_frac * 2.0 * math.pi / omega_prime
        g = exponent(ensemble, pump, state, probe, z, t).g
        flipped = exponent(
            ensemble, pump, state, probe, z, t + math.pi / omega_prime
        ).g
        assert abs(g + flipped) <= 1e-9 * (1.0 + abs(g))


class TestDepth:
    def test_zero_at_entry(self, ensemble_train, pump, state, probe):
        assert modulation_depth(ensemble_train, pump, state, probe, 0.0) == 0.0

    def test_documented_value(self, ensemble_train, pump, state, probe, geometry):
        depth = modulation_depth(
            ensemble_train, pump, state, probe, geometry["z_half"]
        )
        assert depth == pytest.approx(FROZEN["depth_train"], rel=1e-12)

    def test_closed_form_for_real_amplitudes(
        self, ensemble_train, pump, state, probe, geometry
    ):
        z = 0.18 * geometry["length"]
        theta = pump.omega_prime * z / CGS.c
        brackets = sideband_brackets(pump, probe.omega, pump.omega_prime)
        scale = k_scale(ensemble_train, pump, probe.omega)
        expected = (
            scale
            * ALPHA
            * BETA
            * abs(1.0 - cmath.exp(-1j * theta))
            * abs(brackets.b1 - brackets.b2)
        )
        depth = modulation_depth(ensemble_train, pump, state, probe, z)
        assert depth == pytest.approx(expected, rel=1e-12)

    def test_periodic_in_z(self, ensemble_train, pump, state, probe, geometry):
        z = 0.37 * geometry["length"]
        a = modulation_depth(ensemble_train, pump, state, probe, z)
        b = modulation_depth(
            ensemble_train, pump, state, probe, z + geometry["length"]
        )
        assert b == pytest.approx(a, rel=1e-9)

    def test_depth_is_amplitude_of_re_g(
        self, ensemble_train, pump, state, probe, geometry
    ):
        z = 0.41 * geometry["length"]
        depth = modulation_depth(ensemble_train, pump, state, probe, z)
        t = np.linspace(0.0, geometry["period"], 4096, endpoint=False)
        g = exponent_grid(
            ensemble_train, pump, state, probe.omega, np.array([z]), t
        )[0]
        assert float(np.max(g.real)) == pytest.approx(depth, rel=1e-6)
        assert float(np.min(g.real)) == pytest.approx(-depth, rel=1e-6)


class TestFieldSample:
    def test_entry_face(self, ensemble_dense, pump, state, probe):
        sample = field_sample(ensemble_dense, pump, state, probe, 0.0, 0.0)
        assert sample.amplitude == probe.a0
        assert sample.intensity_gain == 1.0

    def test_causality(self, ensemble_dense, pump, state, probe, geometry):
        z = geometry["z_half"]
        with pytest.raises(CausalityViolation):
            field_sample(
                ensemble_dense, pump, state, probe, z, 0.5 * z / CGS.c
            )
        # Arrival exactly at the wavefront is allowed.
        field_sample(ensemble_dense, pump, state, probe, z, z / CGS.c)

    def test_pure_state_keeps_unit_gain_but_advances_phase(
        self, ensemble_dense, pump, probe, geometry
    ):
        pure = SuperpositionState(alpha=0.0, beta=1.0)
        z = geometry["z_half"]
        sample = field_sample(
            ensemble_dense, pump, pure, probe, z, 2.0 * z / CGS.c
        )
        assert sample.intensity_gain == 1.0
        from dressedprobe import refractive_index

        disp = refractive_index(ensemble_dense, pump, pure, probe.omega)
        assert disp.n0 != 1.0
        assert sample.phase == pytest.approx(
            probe.omega * (disp.n0 - 1.0) * z / CGS.c, rel=1e-12
        )

    def test_gain_identity_and_documented_point(
        self, ensemble_dense, pump, state, probe, geometry
    ):
        z, t = geometry["z_half"], geometry["t_half"]
        mod = exponent(ensemble_dense, pump, state, probe, z, t)
        sample = field_sample(ensemble_dense, pump, state, probe, z, t)
        assert sample.intensity_gain == math.exp(2.0 * mod.g.real)
        assert sample.intensity_gain == pytest.approx(
            math.exp(2.0 * FROZEN["re_g_dense"]), rel=1e-9
        )
        assert abs(sample.amplitude) == pytest.approx(
            probe.a0 * math.exp(mod.g.real), rel=1e-12
        )

    def test_jensen_and_geometric_mean(
        self, ensemble_train, pump, state, probe, geometry
    ):
        z = geometry["z_half"]
        t0 = z / CGS.c
        t = t0 + np.linspace(0.0, geometry["period"], 4096, endpoint=False)
        g = exponent_grid(
            ensemble_train, pump, state, probe.omega, np.array([z]), t
        )[0]
        gains = np.exp(2.0 * g.real)
        assert float(np.mean(gains)) >= 1.0
        assert float(np.max(gains) * np.min(gains)) == pytest.approx(
            1.0, rel=1e-9
        )

    def test_overflowing_gain_saturates_to_inf(self, pump, state, probe, geometry):
        huge = AtomEnsemble(
            omega0=OMEGA0, d=math.sqrt(D_SQUARED), rho=100.0 * RHO_DENSE
        )
        z, t = geometry["z_half"], geometry["t_half"]
        sample = field_sample(huge, pump, state, probe, z, t)
        assert sample.intensity_gain == math.inf
