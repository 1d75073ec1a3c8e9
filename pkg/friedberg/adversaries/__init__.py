"""
--- Friedberg ---
Alice players with declared limits.
"""
from .limits import LimitDecl, DeclaredLimits
from .machine import ToyProgram, MachineRun, parse_instruction
from .adversary import (Adversary, ScriptedAdversary, EnumerationAdversary, RandomAdversary, FrozenAdversary,
                        next_alice_move, declared_limit)
from .read import parse_script, read_script, parse_pool, read_pool, make_adversary
