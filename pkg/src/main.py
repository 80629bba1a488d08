#!/usr/bin/env python3
"""
paramp - Main Entry Point
Threshold reports, circuit simulations, numeric threshold searches and
parameter sweeps for the moving-plate degenerate parametric oscillator
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

import pandas as pd

from .analyzers.report import build_threshold_report
from .models.errors import ConfigError, ParampError
from .models.params import KinematicVelocity
from .models.validation import validate
from .simulators.circuit import build_circuit
from .simulators.search import scan_drive_phase, search_threshold_velocity
from .simulators.simulation import SimConfig, Trace, simulate
from .utils.config_loader import DEFAULT_CONFIG_PATH, load_config
from .utils.design_loader import DesignConfig, SweepAxis, load_design
from .utils.logger import setup_logging
from .utils.parallel import map_ordered
from .utils.reporting import with_units, write_csv, write_json

logger = logging.getLogger("paramp.cli")

FIND_THRESHOLD_UNITS = {
    'v_threshold_analytic': 'm/s',
    'v_threshold_numeric': 'm/s',
    'rel_diff': '1',
    'tol': '1',
    'cycles_simulated': 'cycles',
}


class ParametricStudy:
    """Main orchestrator behind the paramp subcommands"""

    def __init__(self, settings: Dict[str, Any], max_workers: Optional[int] = None):
        self.settings = settings
        performance = settings.get('performance', {})
        self.max_workers = max_workers if max_workers is not None else performance.get('max_workers', 0)

    def sim_defaults(self) -> Dict[str, Any]:
        simulation = self.settings.get('simulation', {})
        return {
            'steps_per_cycle': simulation.get('steps_per_cycle', 500),
            'n_cycles': simulation.get('n_cycles', 100),
            'record_stride': simulation.get('record_stride', 1),
            'seed_voltage': simulation.get('seed_voltage_V', 1.0),
        }

    def load(self, path: str) -> DesignConfig:
        return load_design(path, sim_defaults=self.sim_defaults())

    def threshold(self, design: DesignConfig) -> Dict[str, Any]:
        """Analytic threshold report, every value paired with its unit"""
        validate(design.cavity, design.drive)
        report = build_threshold_report(design.cavity, design.pump, design.drive)
        logger.info("No-bias threshold power %.6e W", report.P_threshold_no_bias)
        return report.to_dict()

    def simulate(self, design: DesignConfig) -> Trace:
        if design.sim is None:
            raise ConfigError("simulate needs a 'sim' section in the design")
        circuit = build_circuit(design.cavity, lossless=design.lossless)
        logger.info(
            "Simulating %d cycles (L=%.6e H, R=%.6e ohm)",
            design.sim.n_cycles, circuit.inductance_L, circuit.resistance_R,
        )
        trace = simulate(circuit, design.drive, design.sim)
        meta = trace.meta
        logger.debug(
            "Trace of %d samples: dt=%.6e s, drive=%r, config=%r",
            len(trace), meta['dt'], meta['drive'], meta['config'],
        )
        return trace

    def search_config(self, cycles: Optional[int] = None) -> SimConfig:
        search = self.settings.get('search', {})
        return SimConfig(
            steps_per_cycle=search.get('steps_per_cycle', 200),
            n_cycles=cycles if cycles is not None else search.get('n_cycles', 100),
            seed_voltage=self.sim_defaults()['seed_voltage'],
        )

    def find_threshold(
        self, design: DesignConfig, tol: Optional[float] = None, cycles: Optional[int] = None
    ) -> Dict[str, Any]:
        """Numeric threshold by bisection next to the analytic 4*w*d0/Q"""
        search = self.settings.get('search', {})
        desk_q_max = self.settings.get('warnings', {}).get('desk_q_max', 1e5)
        if design.cavity.quality_Q > desk_q_max:
            logger.warning(
                "Q = %.3g exceeds the desk range %.3g: runtime grows with Q",
                design.cavity.quality_Q, desk_q_max,
            )

        tol_rel = tol if tol is not None else search.get('tol_rel', 0.05)
        circuit = build_circuit(design.cavity, lossless=design.lossless)
        result = search_threshold_velocity(
            circuit,
            self.search_config(cycles),
            tol_rel,
            rate_floor_rel=search.get('rate_floor_rel', 1e-6),
        )
        values = {
            'v_threshold_analytic': result.v_analytic,
            'v_threshold_numeric': result.v_threshold,
            'rel_diff': result.rel_diff,
            'tol': result.tol_rel,
            'cycles_simulated': result.cycles_simulated,
        }
        return with_units(values, FIND_THRESHOLD_UNITS)

    def sweep(self, design: DesignConfig, axis: SweepAxis) -> pd.DataFrame:
        """One row of threshold-report scalars per grid point, in ascending axis order"""
        values = axis.values()
        logger.info("Sweeping %s over %d points", axis.parameter, len(values))

        def row(value: float) -> Dict[str, float]:
            point = design.with_parameter(axis.parameter, float(value))
            validate(point.cavity, point.drive)
            report = build_threshold_report(point.cavity, point.pump, point.drive)
            return {axis.parameter: float(value), **report.scalars()}

        rows = map_ordered(row, list(values), max_workers=self.max_workers)
        return pd.DataFrame(rows)

    def phase_scan(self, design: DesignConfig, n_phases: int = 8) -> Dict[str, Any]:
        if not isinstance(design.drive, KinematicVelocity):
            raise ConfigError("phase-scan needs a kinematic drive")
        cfg = design.sim if design.sim is not None else SimConfig(**self.sim_defaults())
        circuit = build_circuit(design.cavity, lossless=design.lossless)
        scan = scan_drive_phase(
            circuit, design.drive.v_2w, cfg, n_phases=n_phases, max_workers=self.max_workers
        )
        return scan.to_dict()


def resolve_axis(design: DesignConfig, args: argparse.Namespace) -> SweepAxis:
    """Sweep axis from the design file, with command-line flags taking precedence"""
    base = design.sweep
    parameter = args.axis or (base.parameter if base else None)
    if parameter is None:
        raise ConfigError("sweep needs --axis or a 'sweep' section in the design")

    def pick(flag, attr):
        if flag is not None:
            return flag
        if base is None:
            raise ConfigError(f"sweep needs --{attr.replace('imum', '')} or a 'sweep' section")
        return getattr(base, attr)

    scale = 'log' if args.log else (base.scale if base else 'linear')
    return SweepAxis(
        parameter=parameter,
        minimum=pick(args.min, 'minimum'),
        maximum=pick(args.max, 'maximum'),
        points=pick(args.points, 'points'),
        scale=scale,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='paramp', description='Moving-plate degenerate parametric oscillator toolkit'
    )
    parser.add_argument('--settings', default=DEFAULT_CONFIG_PATH,
                        help='Runtime settings YAML')
    parser.add_argument('--log-level', help='Override the configured log level')
    parser.add_argument('--threads', type=int,
                        help='Worker cap for sweeps and phase scans (0 = all cores)')

    sub = parser.add_subparsers(dest='command', required=True)

    threshold = sub.add_parser('threshold', help='Analytic threshold report as JSON')
    threshold.add_argument('--config', required=True, help='Design file (JSON)')
    threshold.add_argument('--json-out', help='Write the report here instead of stdout')

    sim = sub.add_parser('simulate', help='Simulate the LC circuit and emit the trace as CSV')
    sim.add_argument('--config', required=True, help='Design file (JSON)')
    sim.add_argument('--out', help='Write the CSV here instead of stdout')

    find = sub.add_parser('find-threshold', help='Locate the threshold velocity numerically')
    find.add_argument('--config', required=True, help='Design file (JSON)')
    find.add_argument('--tol', type=float, help='Relative bracket width at which to stop')
    find.add_argument('--cycles', type=int, help='Cycles simulated per growth-rate evaluation')

    sweep = sub.add_parser('sweep', help='Threshold report over a parameter grid as CSV')
    sweep.add_argument('--config', required=True, help='Design file (JSON)')
    sweep.add_argument('--axis', help='Parameter to sweep')
    sweep.add_argument('--min', type=float, help='Lower end of the axis')
    sweep.add_argument('--max', type=float, help='Upper end of the axis')
    sweep.add_argument('--points', type=int, help='Number of grid points (>= 2)')
    sweep.add_argument('--log', action='store_true', help='Logarithmic spacing')
    sweep.add_argument('--out', help='Write the CSV here instead of stdout')

    scan = sub.add_parser('phase-scan', help='Fitted growth rate versus drive phase as JSON')
    scan.add_argument('--config', required=True, help='Design file (JSON)')
    scan.add_argument('--phases', type=int, default=8, help='Number of evenly spaced phases')
    scan.add_argument('--json-out', help='Write the scan here instead of stdout')

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        settings = load_config(args.settings)
        setup_logging(args.log_level or settings.get('log_level', 'INFO'), settings.get('log_file'))
        study = ParametricStudy(settings, max_workers=args.threads)
        design = study.load(args.config)

        if args.command == 'threshold':
            write_json(study.threshold(design), args.json_out)
        elif args.command == 'simulate':
            write_csv(study.simulate(design).to_frame(), args.out)
        elif args.command == 'find-threshold':
            write_json(study.find_threshold(design, tol=args.tol, cycles=args.cycles))
        elif args.command == 'sweep':
            write_csv(study.sweep(design, resolve_axis(design, args)), args.out)
        elif args.command == 'phase-scan':
            write_json(study.phase_scan(design, n_phases=args.phases), args.json_out)
    except ParampError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code

    return 0


if __name__ == "__main__":
    sys.exit(main())
