"""Comparison material: the CAN alternating-projection baseline and classical
analytic unimodular families (Barker, Frank, Golomb, Chu, P4)."""

from __future__ import annotations

from typing import Optional

import numpy as np

from unipol.metrics import UnimodularSequence, as_values
from unipol.solver import RunTrace, SolverConfig, _run_loop

__all__ = ["FAMILIES", "BARKER_CODES", "generate", "can_run"]

FAMILIES = ("barker", "frank", "golomb", "chu", "p4")

BARKER_CODES = {
    2: [1, -1],
    3: [1, 1, -1],
    4: [1, 1, -1, 1],
    5: [1, 1, 1, -1, 1],
    7: [1, 1, 1, -1, -1, 1, -1],
    11: [1, 1, 1, -1, -1, -1, 1, -1, -1, 1, -1],
    13: [1, 1, 1, 1, 1, -1, -1, 1, 1, -1, 1, -1, 1],
}


def generate(family: str, n: int) -> UnimodularSequence:
    """Classical unimodular sequence of the given family and length.

    barker: the +-1 codes, lengths 2, 3, 4, 5, 7, 11, 13 only.
    frank:  requires n = L^2, L >= 2; phase 2*pi*m*k/L on an L x L index grid.
    golomb: quadratic phase pi*m*(m+1)/n.
    chu:    quadratic phase pi*m^2/n for even n, pi*m*(m+1)/n for odd n.
    p4:     quadratic phase pi*m*(m-n)/n.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
    if n < 1:
        raise ValueError("sequence length must be >= 1")
    m = np.arange(n)

    if family == "barker":
        if n not in BARKER_CODES:
            raise ValueError(
                f"barker supports lengths {sorted(BARKER_CODES)} only, not {n}"
            )
        return UnimodularSequence(np.asarray(BARKER_CODES[n], dtype=complex))
    if family == "frank":
        root = round(n**0.5)
        if root * root != n or root < 2:
            raise ValueError(f"frank needs a square length L^2 with L >= 2, not {n}")
        row, col = np.divmod(m, root)
        return UnimodularSequence(np.exp(2j * np.pi * row * col / root))
    if family == "golomb":
        return UnimodularSequence(np.exp(1j * np.pi * m * (m + 1) / n))
    if family == "chu":
        phase = m * m if n % 2 == 0 else m * (m + 1)
        return UnimodularSequence(np.exp(1j * np.pi * phase / n))
    # p4
    return UnimodularSequence(np.exp(1j * np.pi * m * (m - n) / n))


def _can_step(x: UnimodularSequence) -> UnimodularSequence:
    """One CAN alternating projection: flatten the 2N-point spectrum, then the moduli."""
    v = as_values(x)
    n = v.size
    spec = np.fft.fft(v, 2 * n)
    mag = np.abs(spec)
    flat = np.where(mag > 0.0, spec / np.where(mag > 0.0, mag, 1.0), 1.0)
    z = np.fft.ifft(flat)[:n]
    zmag = np.abs(z)
    out = np.where(zmag > 0.0, z / np.where(zmag > 0.0, zmag, 1.0), v)
    return UnimodularSequence(out)


def can_run(cfg: SolverConfig, init: Optional[UnimodularSequence] = None) -> RunTrace:
    """Run the CAN baseline under the same config surface as the MM driver.

    CAN alternates unit-modulus projections between the time and 2N-point
    frequency domains. It optimizes a frequency-domain approximation of the
    ISL, so its ISL trace carries no monotonicity guarantee.
    """
    return _run_loop(_can_step, cfg, init)
