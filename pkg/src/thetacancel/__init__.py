"""Exact verification engine for twisted anomaly cancellation formulas."""

from .charforms import HypothesisError, q_form, q_form_direct
from .cs_kernels import cs_form, phi_form
from .exact_arith import HalfInt, Rational, solve_exact
from .graded_ring import GradedPoly, RingConfig, top_component
from .modular_verify import (COROLLARIES, Decomposition, decompose, reconstruct_gamma0,
                             verify_corollary, verify_even, verify_odd, verify_twisted)
from .qseries import QSeries, RootSeries
from .report import CheckEntry, VerificationReport
from .theta import jacobi_identity_check, modular_pair

__version__ = "0.1.0"

__all__ = [
    "COROLLARIES", "CheckEntry", "Decomposition", "GradedPoly", "HalfInt", "HypothesisError",
    "QSeries", "Rational", "RingConfig", "RootSeries", "VerificationReport", "cs_form",
    "decompose", "jacobi_identity_check", "modular_pair", "phi_form", "q_form", "q_form_direct",
    "reconstruct_gamma0", "solve_exact", "top_component", "verify_corollary", "verify_even",
    "verify_odd", "verify_twisted",
]
