"""
Friedberg
Stage-based simulator of the games behind Friedberg numbering constructions, with refereed winning strategies.
"""
from .tables import FiniteTable, FiniteFun, Periodic
from .protocol import GameKind, Transcript, run_game, new_game
from .strategies import make_strategy
from .adversaries import make_adversary
from .referee import Referee, brute_force_referee
