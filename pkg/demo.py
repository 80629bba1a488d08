#!/usr/bin/env python3
"""
paramp - Visual Demo
Walks through the threshold numbers of the pellicle-mirror oscillator and
runs a short above-threshold circuit simulation
"""

import math
import sys
from datetime import datetime
from typing import Dict

from colorama import Fore, init

from src.analyzers.report import build_threshold_report
from src.analyzers.thresholds import (
    braginsky_threshold,
    rough_velocity_ratio,
    threshold_energy,
    walls_milburn_velocity_ratio,
)
from src.drivers.pump_drive import build_dc_bias_report
from src.models.constants import C_LIGHT, omega_from_frequency
from src.models.params import CavityParams, DcBiasField, KinematicVelocity, PumpCavityParams
from src.simulators.circuit import build_circuit
from src.simulators.growth import estimate_growth_rate
from src.simulators.simulation import SimConfig, simulate

init(autoreset=True)

REFERENCE_OMEGA = omega_from_frequency(1e10)


class DemoVisualizer:
    """Creates visual output for the demo"""

    @staticmethod
    def print_header(text):
        print(f"\n{Fore.CYAN}{'=' * 60}")
        print(f"{Fore.CYAN}{text.center(60)}")
        print(f"{Fore.CYAN}{'=' * 60}\n")

    @staticmethod
    def print_status(text, status="info"):
        colors = {
            "info": Fore.BLUE,
            "success": Fore.GREEN,
            "warning": Fore.YELLOW,
            "danger": Fore.RED,
        }
        color = colors.get(status, Fore.WHITE)
        timestamp = datetime.now().strftime("%H:%M:%S")
        print(f"{Fore.LIGHTBLACK_EX}[{timestamp}] {color}{text}")

    @staticmethod
    def print_quantity(name, value, unit):
        print(f"{Fore.YELLOW}{name:<28}{Fore.WHITE}{value:>14.6e} {unit}")


def reference_design():
    cavity = CavityParams(
        mass_m=2e-6, gap_d0=C_LIGHT / 1e10, area_A=1e-2, omega=REFERENCE_OMEGA, quality_Q=1e10
    )
    pump = PumpCavityParams(omega_p=REFERENCE_OMEGA, quality_Qp=1e10)
    return cavity, pump


def golden_numbers() -> Dict[str, float]:
    """Headline values of the reference-scale design and the DC-bias verdict"""
    cavity, pump = reference_design()
    report = build_threshold_report(cavity, pump)

    omega_p = 2.0 * REFERENCE_OMEGA
    dc_cavity = CavityParams(
        mass_m=2e-6, gap_d0=math.pi * C_LIGHT / omega_p, area_A=1e-2,
        omega=REFERENCE_OMEGA, quality_Q=1e10,
    )
    dc = build_dc_bias_report(dc_cavity, DcBiasField(E_dc=1e6, E_p=1e4, omega_p=omega_p), 1e10)

    return {
        'P_threshold_no_bias': report.P_threshold_no_bias,
        'U_threshold': report.U_threshold,
        'braginsky_U': braginsky_threshold(
            cavity.mass_m, cavity.omega, 4.0 * cavity.gap_d0, cavity.quality_Q, cavity.quality_Q
        ),
        'rough_over_walls_milburn': rough_velocity_ratio(1e10) / walls_milburn_velocity_ratio(1e10),
        'dc_bias_P_threshold': dc.P_threshold,
        'dc_bias_ratio': dc.ratio,
    }


def run_demo(n_cycles: int = 60):
    """Run the visual demo"""
    viz = DemoVisualizer()

    viz.print_header("PELLICLE MIRROR PARAMETRIC OSCILLATOR")
    print(f"{Fore.WHITE}Two superconducting cavities share a thin movable wall.")
    print(f"{Fore.WHITE}The pump cavity shakes the wall at 2w; the signal cavity grows once gain beats loss.\n")

    viz.print_header("REFERENCE-SCALE THRESHOLD")
    numbers = golden_numbers()
    viz.print_quantity("No-bias threshold power", numbers['P_threshold_no_bias'], "W")
    viz.print_quantity("Threshold energy U", numbers['U_threshold'], "J")
    viz.print_quantity("Radiation-pressure U", numbers['braginsky_U'], "J")
    viz.print_quantity("Rough / squeezing ratio", numbers['rough_over_walls_milburn'], "")
    viz.print_status("Threshold power is a few microwatts at Q = 1e10", "success")

    viz.print_header("DC-BIAS VERDICT")
    viz.print_quantity("Biased threshold power", numbers['dc_bias_P_threshold'], "W")
    viz.print_quantity("Biased / unbiased ratio", numbers['dc_bias_ratio'], "")
    viz.print_status("A DC bias makes the threshold far harder to reach", "danger")

    viz.print_header("DESK-SCALE SIMULATION")
    cavity = CavityParams(mass_m=1e-6, gap_d0=1e-3, area_A=1e-4, omega=omega_from_frequency(1e6), quality_Q=1e3)
    circuit = build_circuit(cavity)
    energy = threshold_energy(cavity)
    v_2w = 2.0 * 4.0 * cavity.omega * cavity.gap_d0 / cavity.quality_Q
    viz.print_status(f"Driving the plate at twice threshold ({v_2w:.4g} m/s) for {n_cycles} cycles", "info")
    trace = simulate(circuit, KinematicVelocity(v_2w=v_2w), SimConfig(steps_per_cycle=200, n_cycles=n_cycles))
    growth = estimate_growth_rate(trace)
    viz.print_quantity("Fitted growth rate", growth.rate, "1/s")
    viz.print_quantity("Expected w/Q", cavity.omega / cavity.quality_Q, "1/s")
    viz.print_quantity("Threshold kinetic energy", energy.K, "J")
    status = "success" if growth.rate > 0 else "warning"
    viz.print_status(f"Signal energy grows with r^2 = {growth.r_squared:.6f}", status)

    print(f"{Fore.GREEN}\nDemo completed.\n")


def main():
    """Main entry point"""
    try:
        run_demo()
    except KeyboardInterrupt:
        print(f"\n\n{Fore.YELLOW}Demo interrupted by user.")
        sys.exit(0)
    except Exception as e:
        print(f"\n\n{Fore.RED}Error during demo: {e}")
        sys.exit(1)


if __name__ == "__main__":
    main()
