"""
--- Friedberg ---
Bob's winning strategies and their assistants.
"""
from .enumeration import OddEnumeration, ListEnumeration, iter_odd_functions, parse_enumeration
from .numbering import DeclaredNumbering, split_numbering, interleave, FillFunction
from .view import HeldCells, filtered_view
from .board import Board, OddRegistry
from .assistants import (AssistantState, g1_assistant_step, constant_assistant_step, odd_enumerator_step,
                         pp65_copier_step)
from .strategy import (Strategy, InvalidationStrategy, DiagonalStrategy, SymmetricStrategy, IndependentStrategy,
                       ExtensionStrategy, FillStrategy, make_strategy)
