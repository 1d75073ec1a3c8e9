"""
--- Friedberg ---
Game protocol: kinds, moves, duties, transcripts and the run loop.
"""
from .moves import (KINDS, CONDITIONS, GameKind, AliceMove, BobMove, GameState, new_game, submit_alice,
                    submit_bob)
from .transcript import Transcript, state_digest
from .read import read_trace, parse_trace, parse_kind
from .write import write_trace
from .game import run_game
