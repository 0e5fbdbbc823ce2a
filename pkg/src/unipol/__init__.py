"""Unimodular sequence design with low aperiodic autocorrelation sidelobes.

The solver minimizes the integrated sidelobe level by majorization-
minimization: each iteration majorizes the quartic spectral form of the ISL
with a function separable across sequence elements, then drops every element
to the exact minimizer of its own unit-circle quartic subproblem (found
through the tangent half-angle stationarity polynomial). A CAN
alternating-projection baseline, classical polyphase generators, exact
metrics, and a benchmark harness round out the library; the ``unipol``
command exposes it all on the command line.
"""

from unipol.baselines import BARKER_CODES, FAMILIES, can_run, generate
from unipol.metrics import (
    UnimodularSequence,
    autocorrelation,
    isl_freq,
    isl_quartic,
    isl_time,
    merit_factor,
    psl,
    sidelobe_db,
    spectrum_2n,
)
from unipol.quartic import (
    IdenticallyZeroError,
    minimize_batch,
    minimize_single,
    quartic_coeffs,
    solve_quartic_real,
)
from unipol.solver import RunTrace, SolverConfig, init_random, run, unipol_step
from unipol.surrogate import (
    SurrogateCoefficients,
    ab_all_direct,
    ab_all_fast,
    ab_from_alphas,
    alpha_direct,
    surrogate_value,
)

__version__ = "0.1.0"

__all__ = [
    "BARKER_CODES",
    "FAMILIES",
    "IdenticallyZeroError",
    "RunTrace",
    "SolverConfig",
    "SurrogateCoefficients",
    "UnimodularSequence",
    "ab_all_direct",
    "ab_all_fast",
    "ab_from_alphas",
    "alpha_direct",
    "autocorrelation",
    "can_run",
    "generate",
    "init_random",
    "isl_freq",
    "isl_quartic",
    "isl_time",
    "merit_factor",
    "minimize_batch",
    "minimize_single",
    "psl",
    "quartic_coeffs",
    "run",
    "sidelobe_db",
    "solve_quartic_real",
    "spectrum_2n",
    "surrogate_value",
    "unipol_step",
]
