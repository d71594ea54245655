"""Bounds on prolongation length and the combinatorics that produce them."""

from .ackermann import ackermann, compare_iterates, iterate, iterated_ackermann
from .apps import alpha, bezout_exponents, char_set_order_bound, component_order_bound, nullstellensatz_T
from .cbound import (
    an_upper,
    c_bound,
    c_value,
    c_via_greedy,
    doubling_growth_bound,
    recursive_tower_bound_m2,
    shifted_ackermann_bound,
)
from .greedy import copy_lengths, l_max, mu_copy, mu_next, mu_sequence, psi, psi_literal
from .growth import Arithmetic, Doubling, GrowthFunction, PiecewiseGn, RepeatFirst, Shifted, Table
from .report import BoundReport, FormulaPath
