#!/usr/bin/env python3
"""
Unit tests for design file parsing and sweep axes
"""

import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import copy
import math
import unittest

import numpy as np

from src.models import (
    BiasRegimeViolation,
    ConfigError,
    DcBiasField,
    KinematicVelocity,
    NoBiasField,
    NonPositiveParameter,
)
from src.utils.design_loader import SweepAxis, load_design, parse_design

DESIGNS_DIR = os.path.join(os.path.dirname(__file__), '..', 'config', 'designs')

BASE = {
    'cavity': {'mass_kg': 1e-6, 'gap_m': 1e-3, 'area_m2': 1e-4, 'f_Hz': 1e6, 'Q': 1e3},
    'pump': {'f_Hz': 2e6, 'Q': 1e3},
    'drive': {'type': 'kinematic', 'v_2w_m_per_s': 10.0},
}


def with_changes(section, **values):
    raw = copy.deepcopy(BASE)
    raw.setdefault(section, {}).update(values)
    return raw


class TestParseDesign(unittest.TestCase):
    """Decoding design objects"""

    def test_frequency_forms(self):
        """f_Hz and omega_rad_per_s are interchangeable"""
        by_f = parse_design(BASE)
        raw = copy.deepcopy(BASE)
        del raw['cavity']['f_Hz']
        raw['cavity']['omega_rad_per_s'] = 2 * math.pi * 1e6
        self.assertEqual(parse_design(raw).cavity.omega, by_f.cavity.omega)

    def test_both_frequencies_rejected(self):
        """Exactly one frequency key per section"""
        with self.assertRaises(ConfigError):
            parse_design(with_changes('cavity', omega_rad_per_s=1.0))

    def test_drive_variants(self):
        """Field drives take omega_p from the pump section"""
        self.assertIsInstance(parse_design(BASE).drive, KinematicVelocity)

        raw = copy.deepcopy(BASE)
        raw['pump']['f_Hz'] = 1e6
        raw['drive'] = {'type': 'no_bias', 'E_p_V_per_m': 1e4}
        drive = parse_design(raw).drive
        self.assertIsInstance(drive, NoBiasField)
        self.assertEqual(drive.omega_p, 2 * math.pi * 1e6)

        raw = copy.deepcopy(BASE)
        raw['drive'] = {'type': 'dc_bias', 'E_dc_V_per_m': 1e6, 'E_p_V_per_m': 1e4}
        drive = parse_design(raw).drive
        self.assertIsInstance(drive, DcBiasField)
        self.assertEqual(drive.omega_p, 2 * math.pi * 2e6)

    def test_unknown_drive_type(self):
        """Unknown drive types are configuration errors"""
        raw = copy.deepcopy(BASE)
        raw['drive'] = {'type': 'laser'}
        with self.assertRaises(ConfigError):
            parse_design(raw)

    def test_unknown_keys(self):
        """Unknown keys anywhere are rejected by name"""
        with self.assertRaisesRegex(ConfigError, 'pump.colour'):
            parse_design(with_changes('pump', colour='red'))
        raw = copy.deepcopy(BASE)
        raw['extra'] = {}
        with self.assertRaises(ConfigError):
            parse_design(raw)

    def test_missing_sections(self):
        """cavity, pump and drive are required"""
        for section in ('cavity', 'pump', 'drive'):
            raw = copy.deepcopy(BASE)
            del raw[section]
            with self.assertRaises(ConfigError):
                parse_design(raw)

    def test_non_numeric(self):
        """Strings and booleans are not numbers"""
        with self.assertRaises(ConfigError):
            parse_design(with_changes('cavity', Q='high'))
        with self.assertRaises(ConfigError):
            parse_design(with_changes('cavity', Q=True))

    def test_validation_errors_propagate(self):
        """Parameter checks still apply after parsing"""
        with self.assertRaises(NonPositiveParameter):
            parse_design(with_changes('cavity', gap_m=0.0))
        raw = copy.deepcopy(BASE)
        raw['drive'] = {'type': 'dc_bias', 'E_dc_V_per_m': 1e3, 'E_p_V_per_m': 1e4}
        with self.assertRaises(BiasRegimeViolation):
            parse_design(raw)

    def test_sim_section(self):
        """sim keys map onto SimConfig, defaults fill the rest"""
        raw = with_changes('sim', n_cycles=40, q0_C=1e-15, lossless=True)
        design = parse_design(raw, sim_defaults={'steps_per_cycle': 300})
        self.assertEqual(design.sim.n_cycles, 40)
        self.assertEqual(design.sim.steps_per_cycle, 300)
        self.assertEqual(design.sim.initial_charge_q0, 1e-15)
        self.assertTrue(design.lossless)
        self.assertIsNone(parse_design(BASE).sim)

    def test_lossless_must_be_bool(self):
        """sim.lossless takes true or false"""
        with self.assertRaises(ConfigError):
            parse_design(with_changes('sim', lossless='yes'))

    def test_not_an_object(self):
        """The top level must be a JSON object"""
        with self.assertRaises(ConfigError):
            parse_design([1, 2, 3])


class TestSweepAxis(unittest.TestCase):
    """Sweep grids"""

    def test_linear_and_log(self):
        """Endpoints are included in ascending order"""
        np.testing.assert_allclose(SweepAxis('E_p', 1.0, 3.0, 3).values(), [1.0, 2.0, 3.0])
        np.testing.assert_allclose(SweepAxis('Q', 1e2, 1e4, 3, 'log').values(), [1e2, 1e3, 1e4])

    def test_invalid(self):
        """Bad axes are configuration errors"""
        for args in (
            ('colour', 1.0, 2.0, 3),
            ('Q', 1.0, 2.0, 1),
            ('Q', 2.0, 1.0, 3),
            ('Q', 0.0, 1.0, 3, 'log'),
            ('Q', 1.0, 2.0, 3, 'cubic'),
            ('Q', 1.0, float('inf'), 3),
        ):
            with self.assertRaises(ConfigError):
                SweepAxis(*args)

    def test_q_alias(self):
        """Q sets both quality factors"""
        design = parse_design(BASE).with_parameter('Q', 5e4)
        self.assertEqual(design.cavity.quality_Q, 5e4)
        self.assertEqual(design.pump.quality_Qp, 5e4)

    def test_omega_p_updates_field_drive(self):
        """omega_p moves the pump, the field drive and the signal cavity together"""
        raw = copy.deepcopy(BASE)
        raw['drive'] = {'type': 'dc_bias', 'E_dc_V_per_m': 1e6, 'E_p_V_per_m': 1e4}
        design = parse_design(raw).with_parameter('omega_p', 1.0e7)
        self.assertEqual(design.pump.omega_p, 1.0e7)
        self.assertEqual(design.drive.omega_p, 1.0e7)
        self.assertEqual(design.cavity.omega, 5.0e6)

    def test_omega_moves_field_pump(self):
        """omega keeps a field pump on its harmonic and leaves a kinematic pump alone"""
        no_bias = copy.deepcopy(BASE)
        no_bias['drive'] = {'type': 'no_bias', 'E_p_V_per_m': 1e4}
        design = parse_design(no_bias).with_parameter('omega', 3.0e6)
        self.assertEqual(design.pump.omega_p, 3.0e6)
        self.assertEqual(design.drive.omega_p, 3.0e6)

        dc_bias = copy.deepcopy(BASE)
        dc_bias['drive'] = {'type': 'dc_bias', 'E_dc_V_per_m': 1e6, 'E_p_V_per_m': 1e4}
        design = parse_design(dc_bias).with_parameter('omega', 3.0e6)
        self.assertEqual(design.pump.omega_p, 6.0e6)
        self.assertEqual(design.drive.omega_p, 6.0e6)

        kinematic = parse_design(BASE)
        design = kinematic.with_parameter('omega', 3.0e6)
        self.assertEqual(design.cavity.omega, 3.0e6)
        self.assertEqual(design.pump.omega_p, kinematic.pump.omega_p)

    def test_omega_p_moves_no_bias_cavity(self):
        """omega_p on a no-bias drive moves the signal cavity with it"""
        raw = copy.deepcopy(BASE)
        raw['drive'] = {'type': 'no_bias', 'E_p_V_per_m': 1e4}
        design = parse_design(raw).with_parameter('omega_p', 4.0e6)
        self.assertEqual(design.cavity.omega, 4.0e6)
        self.assertEqual(design.drive.omega_p, 4.0e6)

    def test_field_axis_needs_field_drive(self):
        """E_dc cannot be swept on a kinematic drive"""
        with self.assertRaises(ConfigError):
            parse_design(BASE).with_parameter('E_dc', 1e6)


class TestShippedDesigns(unittest.TestCase):
    """Design files under config/designs"""

    def test_all_load(self):
        """Every shipped design parses"""
        for name in sorted(os.listdir(DESIGNS_DIR)):
            if name.endswith('.json'):
                design = load_design(os.path.join(DESIGNS_DIR, name))
                self.assertGreater(design.cavity.quality_Q, 0)

    def test_missing_file(self):
        """A missing design file is a configuration error"""
        with self.assertRaises(ConfigError):
            load_design(os.path.join(DESIGNS_DIR, 'absent.json'))


if __name__ == '__main__':
    unittest.main()
