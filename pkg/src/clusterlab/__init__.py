"""Exact mutation engine for seeds with principal coefficients, plus an
exchange-graph search and a property-check harness over it."""

from .intmat import (
    ExtendedExchangeMatrix,
    IntMatrix,
    SignSkewSymmetryError,
    SkewSymmetrizer,
    find_skew_symmetrizer,
    is_acyclic,
    is_sign_skew_symmetric,
    mutate_matrix,
)
from .laurent import DivisionFailureError, LaurentPoly, NotHomogeneousError, parse
from .seeds import (
    Seed,
    SeedInvariantError,
    TermBudgetError,
    mutate_seed,
    new_principal_seed,
    principal_grading,
    reconstruct_separation,
)
from .explore import (
    BudgetExceededError,
    ExplorationAtlas,
    StateAtlas,
    explore,
    explore_states,
    replay,
)
from .checks import VerificationReport, run_full_suite

__version__ = "0.1.0"

__all__ = [
    "ExtendedExchangeMatrix",
    "IntMatrix",
    "SignSkewSymmetryError",
    "SkewSymmetrizer",
    "find_skew_symmetrizer",
    "is_acyclic",
    "is_sign_skew_symmetric",
    "mutate_matrix",
    "DivisionFailureError",
    "LaurentPoly",
    "NotHomogeneousError",
    "parse",
    "Seed",
    "SeedInvariantError",
    "TermBudgetError",
    "mutate_seed",
    "new_principal_seed",
    "principal_grading",
    "reconstruct_separation",
    "BudgetExceededError",
    "ExplorationAtlas",
    "StateAtlas",
    "explore",
    "explore_states",
    "replay",
    "VerificationReport",
    "run_full_suite",
    "__version__",
]
