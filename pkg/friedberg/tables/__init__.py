"""
--- Friedberg ---
Sparse monotone tables, finite functions and pairing.
"""
from .finitefun import FiniteFun, Periodic, constant, limit_value, limits_equal, limit_difference
from .table import FiniteTable, InvalidationSet, set_cell, is_odd_row, prefix_equal, prefix_constant
from .pairing import pair, unpair, direct_sum_row_index, direct_sum_locate
