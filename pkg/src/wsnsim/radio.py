"""First-order radio energy model.

All quantities are SI: joules, bits, meters. Defaults are the usual
LEACH-family constants (50 nJ/bit electronics and aggregation, 10 pJ/bit/m^2
free-space and 0.0013 pJ/bit/m^4 multipath amplifiers, 4000-bit frames).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class RadioParams:
    e_elec: float = 50e-9
    e_da: float = 50e-9
    eps_fs: float = 10e-12
    eps_mp: float = 0.0013e-12
    payload_bits: int = 4000

    def __post_init__(self):
        for name in ("e_elec", "e_da", "eps_fs", "eps_mp", "payload_bits"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be > 0, got {getattr(self, name)}")

    @property
    def d0(self) -> float:
        return threshold_distance(self)


def threshold_distance(params: RadioParams) -> float:
    """Crossover distance between the d^2 and d^4 amplifier regimes."""
    if params.eps_fs <= 0 or params.eps_mp <= 0:
        raise ValueError("amplifier constants must be positive")
    return math.sqrt(params.eps_fs / params.eps_mp)


def tx_energy(params: RadioParams, bits, d):
    """Energy to send ``bits`` over distance ``d``.

    Accepts scalars or arrays for ``d``; free-space below ``d0``, multipath at
    or above it.
    """
    d = np.asarray(d, dtype=float)
    amp = np.where(d < params.d0, params.eps_fs * d**2, params.eps_mp * d**4)
    out = bits * params.e_elec + bits * amp
    return float(out) if out.ndim == 0 else out


def rx_energy(params: RadioParams, bits):
    return bits * params.e_elec


def aggregation_energy(params: RadioParams, signals):
    """Data-fusion cost for ``signals`` frames of ``payload_bits`` each."""
    return signals * params.payload_bits * params.e_da


def ch_round_energy(params: RadioParams, members, d_to_bs):
    """Cluster head's bill for one round.

    Receives one frame from each of ``members`` (the head excluded), fuses
    ``members + 1`` frames and sends one frame to the base station.
    """
    bits = params.payload_bits
    return (members * rx_energy(params, bits)
            + aggregation_energy(params, np.asarray(members) + 1)
            + tx_energy(params, bits, d_to_bs))
