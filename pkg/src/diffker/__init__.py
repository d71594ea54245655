"""Prolongation-length bounds for differential kernels and the antichain combinatorics behind them."""

from .bounds import BoundReport, c_bound, c_value, l_max, mu_sequence, psi
from .consistency import DrResult, condition_sharp_prime, d_r, d_value
from .errors import (
    BudgetExceeded,
    ComparablePair,
    DiffkerError,
    DimensionMismatch,
    EnumerationLimit,
    LimitExceeded,
    ValueExceedsLimit,
)
from .hilbert import StaircaseSet, condition_star, growth_gap, hs, s_fn
from .lattice import AntichainSequence, IndexedMonomial, indexed, lub, monomial, validate_antichain
from .macaulay import d_binomial_rep, macaulay_growth, upper_shadow

__version__ = "0.1.0"
