#!/usr/bin/env python3
"""
Unit tests for the closed-form threshold formulas and the threshold report
"""

import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import math
import unittest

import numpy as np

from src.analyzers import (
    averaged_pump_power,
    braginsky_threshold,
    energy_density,
    gain_coefficient,
    maxwell_stress,
    mirror_velocity,
    pressure_on_plate,
    ring_down,
    rough_threshold_power_no_bias,
    rough_velocity_ratio,
    stored_energy_to_power,
    threshold_energy,
    threshold_power_no_bias,
    threshold_velocity,
    time_averaged_energy_density,
    walls_milburn_velocity_ratio,
)
from src.analyzers.report import ThresholdReport, build_threshold_report
from src.models import CavityParams, DcBiasField, NoBiasField, NonPositiveParameter, PumpCavityParams
from src.models.constants import C_LIGHT, EPSILON0

REFERENCE_OMEGA = 2 * math.pi * 1e10


def reference_cavity(Q=1e10):
    return CavityParams(mass_m=2e-6, gap_d0=C_LIGHT / 1e10, area_A=1e-2, omega=REFERENCE_OMEGA, quality_Q=Q)


def reference_pump(Q=1e10):
    return PumpCavityParams(omega_p=REFERENCE_OMEGA, quality_Qp=Q)


def random_cavities(n, seed=7):
    rng = np.random.default_rng(seed)
    for _ in range(n):
        yield CavityParams(
            mass_m=10 ** rng.uniform(-9, -3),
            gap_d0=10 ** rng.uniform(-4, -1),
            area_A=10 ** rng.uniform(-6, -1),
            omega=10 ** rng.uniform(5, 11),
            quality_Q=10 ** rng.uniform(1, 11),
        )


class TestFieldQuantities(unittest.TestCase):
    """Energy density, pressure and the Maxwell stress tensor"""

    def test_energy_density(self):
        """0.5*eps0*E^2, zero at zero field, quadratic in E"""
        self.assertEqual(energy_density(0.0), 0.0)
        self.assertAlmostEqual(energy_density(1e6), 4.4270939064, delta=1e-9)
        self.assertAlmostEqual(energy_density(2e6) / energy_density(1e6), 4.0, delta=1e-12)

    def test_pressure_equals_energy_density(self):
        """Pressure on the plate is numerically the energy density"""
        for E in np.random.default_rng(3).uniform(-1e7, 1e7, 50):
            self.assertEqual(pressure_on_plate(E), energy_density(E))

    def test_maxwell_stress_longitudinal_field(self):
        """A field along z gives diag(-u, -u, +u)"""
        E = 1e6
        u = energy_density(E)
        T = maxwell_stress([0.0, 0.0, E], [0.0, 0.0, 0.0])
        np.testing.assert_allclose(np.diag(T), [-u, -u, u], rtol=1e-12)
        np.testing.assert_allclose(T - np.diag(np.diag(T)), np.zeros((3, 3)), atol=1e-12)

    def test_maxwell_stress_symmetric(self):
        """The stress tensor is symmetric for random fields"""
        rng = np.random.default_rng(11)
        for _ in range(20):
            T = maxwell_stress(rng.normal(size=3) * 1e5, rng.normal(size=3) * 1e-3)
            np.testing.assert_allclose(T, T.T, rtol=1e-12, atol=0.0)

    def test_maxwell_stress_shape(self):
        """Inputs must be 3-vectors"""
        with self.assertRaises(ValueError):
            maxwell_stress([1.0, 2.0], [0.0, 0.0, 0.0])

    def test_time_averaged_energy_density(self):
        """<u_E> = eps0*E0^2/4"""
        self.assertAlmostEqual(time_averaged_energy_density(2.0), EPSILON0, delta=1e-25)

    def test_averaged_pump_power(self):
        """(1/8)*eps0*E0^2*A*v_2w, zero without drive"""
        self.assertEqual(averaged_pump_power(1e5, 1e-4, 0.0), 0.0)
        self.assertAlmostEqual(
            averaged_pump_power(1e5, 1e-4, 10.0), 0.125 * EPSILON0 * 1e10 * 1e-4 * 10.0, delta=1e-20
        )


class TestGainAndThreshold(unittest.TestCase):
    """Gain coefficient, ring-down and threshold velocity"""

    def test_gain_coefficient(self):
        """kappa = v/(4*d0)"""
        self.assertEqual(gain_coefficient(0.0, 1e-3), 0.0)
        self.assertAlmostEqual(gain_coefficient(4.0, 1e-3), 1000.0, delta=1e-9)
        with self.assertRaises(NonPositiveParameter):
            gain_coefficient(1.0, 0.0)

    def test_ring_down(self):
        """gamma = omega/Q and tau = Q/omega"""
        rd = ring_down(2 * math.pi * 1e6, 1e3)
        self.assertAlmostEqual(rd.gamma, 6283.185307179586, delta=1e-9)
        self.assertAlmostEqual(rd.tau * rd.gamma, 1.0, delta=1e-15)

    def test_threshold_velocity_reference(self):
        """4*omega*d0/Q = 8*pi*c/Q for the reference geometry"""
        v = threshold_velocity(REFERENCE_OMEGA, C_LIGHT / 1e10, 1e10)
        self.assertAlmostEqual(v, 8 * math.pi * C_LIGHT / 1e10, delta=1e-12)
        self.assertAlmostEqual(v, 0.7534606, delta=1e-6)

    def test_gain_equals_loss_at_threshold(self):
        """kappa(v_threshold) = omega/Q for random cavities"""
        for cavity in random_cavities(200):
            v = threshold_velocity(cavity.omega, cavity.gap_d0, cavity.quality_Q)
            kappa = gain_coefficient(v, cavity.gap_d0)
            self.assertLess(abs(kappa - cavity.omega / cavity.quality_Q), 1e-12 * kappa)

    def test_threshold_energy(self):
        """U = 2K and the reference-design value"""
        energy = threshold_energy(reference_cavity())
        self.assertEqual(energy.U, 2 * energy.K)
        self.assertAlmostEqual(energy.U / 5.6769e-7, 1.0, delta=1e-4)

    def test_threshold_energy_linear_in_mass(self):
        """Doubling the mass doubles K and U"""
        light = threshold_energy(reference_cavity())
        heavy = threshold_energy(CavityParams(4e-6, C_LIGHT / 1e10, 1e-2, REFERENCE_OMEGA, 1e10))
        self.assertAlmostEqual(heavy.U / light.U, 2.0, delta=1e-12)


class TestCrossChecks(unittest.TestCase):
    """Radiation-pressure and squeezing-literature comparisons"""

    def test_braginsky_example(self):
        """L = 4*d0 reproduces the reference-design threshold energy"""
        U = braginsky_threshold(2e-6, REFERENCE_OMEGA, 4 * C_LIGHT / 1e10, 1e10, 1e10)
        self.assertAlmostEqual(U / 5.6769e-7, 1.0, delta=1e-4)
        self.assertEqual(braginsky_threshold(2e-6, REFERENCE_OMEGA, 0.0, 1e10, 1e10), 0.0)

    def test_braginsky_equivalence(self):
        """threshold_energy(...).U equals braginsky_threshold with L = 4*d0 for 1000 cavities"""
        for cavity in random_cavities(1000, seed=42):
            U = threshold_energy(cavity).U
            B = braginsky_threshold(
                cavity.mass_m, cavity.omega, 4 * cavity.gap_d0, cavity.quality_Q, cavity.quality_Q
            )
            self.assertLess(abs(U - B), 1e-12 * U)

    def test_velocity_ratios(self):
        """rough/squeezing = 2*pi and exact = 4*rough when d0*omega = 2*pi*c"""
        for Q in (1e3, 1e6, 1e10, 3.7e12):
            rough = rough_velocity_ratio(Q)
            wm = walls_milburn_velocity_ratio(Q)
            self.assertAlmostEqual(rough / wm, 2 * math.pi, delta=2 * math.pi * 1e-12)
            exact = threshold_velocity(REFERENCE_OMEGA, C_LIGHT / 1e10, Q) / C_LIGHT
            self.assertAlmostEqual(exact / rough, 4.0, delta=4e-12)

    def test_walls_milburn_value(self):
        """v/c = 1/Q at Q = 1e10"""
        self.assertEqual(walls_milburn_velocity_ratio(1e10), 1e-10)

    def test_mirror_velocity(self):
        """v = eps*omega"""
        self.assertAlmostEqual(mirror_velocity(1e-9, REFERENCE_OMEGA), 62.83185307, delta=1e-7)


class TestThresholdPower(unittest.TestCase):
    """Pump power at threshold without DC bias"""

    def test_stored_energy_to_power(self):
        """P = omega_p*U/Q_p"""
        self.assertEqual(stored_energy_to_power(0.0, reference_pump()), 0.0)
        self.assertAlmostEqual(stored_energy_to_power(5.6769e-7, reference_pump()) / 3.5669e-6, 1.0, delta=1e-4)

    def test_reference_golden_number(self):
        """About 3.57 microwatts, within 5% of the 3.6 microwatt estimate"""
        P = threshold_power_no_bias(reference_cavity(), reference_pump())
        self.assertAlmostEqual(P / 3.5669e-6, 1.0, delta=1e-4)
        self.assertLess(abs(P - 3.6e-6) / 3.6e-6, 0.05)

    def test_closed_form(self):
        """Equals 8*m*w_p*w^2*d0^2/(Q^2*Q_p)"""
        cavity, pump = reference_cavity(), reference_pump()
        closed = (8 * cavity.mass_m * pump.omega_p * cavity.omega ** 2 * cavity.gap_d0 ** 2
                  / (cavity.quality_Q ** 2 * pump.quality_Qp))
        self.assertAlmostEqual(threshold_power_no_bias(cavity, pump) / closed, 1.0, delta=1e-12)

    def test_cube_law(self):
        """Halving Q multiplies the power by 8"""
        base = threshold_power_no_bias(reference_cavity(1e10), reference_pump(1e10))
        half = threshold_power_no_bias(reference_cavity(5e9), reference_pump(5e9))
        self.assertAlmostEqual(half / base, 8.0, delta=8e-12)

    def test_cube_law_slope(self):
        """log P vs log Q has slope -3"""
        Qs = np.geomspace(1e8, 1e12, 5)
        P = [threshold_power_no_bias(reference_cavity(Q), reference_pump(Q)) for Q in Qs]
        slope = np.polyfit(np.log(Qs), np.log(P), 1)[0]
        self.assertLess(abs(slope + 3.0), 1e-12)

    def test_rough_form_matches_at_wavelength_gap(self):
        """32*pi^2*m*c^2*w_p/Q^3 equals the exact power when d0*omega = 2*pi*c"""
        exact = threshold_power_no_bias(reference_cavity(), reference_pump())
        rough = rough_threshold_power_no_bias(2e-6, REFERENCE_OMEGA, 1e10)
        self.assertAlmostEqual(rough / exact, 1.0, delta=1e-12)


class TestThresholdReport(unittest.TestCase):
    """Aggregated report"""

    def test_report_matches_library_calls(self):
        """Every scalar equals the direct library call"""
        cavity, pump = reference_cavity(), reference_pump()
        report = build_threshold_report(cavity, pump)
        self.assertIsNone(report.dc_bias)
        self.assertEqual(report.P_threshold_no_bias, threshold_power_no_bias(cavity, pump))
        self.assertEqual(report.U_threshold, threshold_energy(cavity).U)
        self.assertEqual(report.v_threshold, threshold_velocity(cavity.omega, cavity.gap_d0, cavity.quality_Q))
        self.assertEqual(report.rough_vc, rough_velocity_ratio(1e10))
        self.assertEqual(report.gamma, ring_down(cavity.omega, cavity.quality_Q).gamma)

    def test_to_dict_units(self):
        """Every entry pairs a value with a unit"""
        out = build_threshold_report(reference_cavity(), reference_pump(), NoBiasField(1e4, REFERENCE_OMEGA)).to_dict()
        self.assertEqual(set(out), set(ThresholdReport.UNITS))
        for entry in out.values():
            self.assertEqual(set(entry), {"value", "unit"})
        self.assertEqual(out["P_threshold_no_bias"]["unit"], "W")

    def test_dc_bias_section(self):
        """A DC-biased drive adds the dc_bias sub-report"""
        omega_p = 2 * REFERENCE_OMEGA
        cavity = CavityParams(2e-6, math.pi * C_LIGHT / omega_p, 1e-2, REFERENCE_OMEGA, 1e10)
        pump = PumpCavityParams(omega_p=omega_p, quality_Qp=1e10)
        report = build_threshold_report(cavity, pump, DcBiasField(1e6, 1e4, omega_p))
        out = report.to_dict()
        self.assertIn("dc_bias", out)
        self.assertIn("P_threshold", out["dc_bias"])
        self.assertIn("ratio", out["dc_bias"])
        scalars = report.scalars()
        self.assertIn("dc_bias.P_threshold", scalars)
        self.assertAlmostEqual(scalars["dc_bias.P_threshold"] / 5.96e8, 1.0, delta=2e-3)


if __name__ == '__main__':
    unittest.main()
