"""
--- Friedberg ---
The protocol loop: Alice moves, Bob replies, stage after stage.
"""
import logging
from friedberg.exceptions import BadParameters
from friedberg.strategies.strategy import make_strategy
from .moves import GameKind, new_game, submit_alice, submit_bob
from .transcript import Transcript


def run_game(kind, alice, bob=None, stages=1, seed=0, referee=None):
    """
    Play a game for a bounded number of stages.

    Parameters
    ----------
    kind : GameKind or str
        Game kind with its parameters.
    alice : Adversary
        Alice's player.
    bob : str or None
        Bob's strategy id (the game's own winning strategy by default).
    stages : int
        Stage bound (at least 1).
    seed : int
        Run seed, recorded in the transcript.
    referee : Referee or None
        Referee observing every stage.

    Returns
    -------
    Transcript
        Records of every stage plus the end-of-run records.

    Raises
    ------
    BadParameters
        For a stage bound below 1.
    ConflictingWrite, OutOfTurn, ShapeMismatch
        When a player violates a duty; the run is aborted.

    """
    if not isinstance(kind, GameKind):
        kind = GameKind(kind)
    if stages < 1:
        raise BadParameters('A run needs at least one stage, got %i' % stages)
    strategy = make_strategy(kind, bob)
    state = new_game(kind, seed)
    transcript = Transcript(kind, seed=seed, stages=stages, adversary=alice.spec())
    for stage in range(stages):
        alice_move = alice.next_move(stage, state)
        submit_alice(state, alice_move)
        bob_move = strategy.step(state)
        submit_bob(state, bob_move)
        if referee is not None:
            referee.observe(state, strategy, bob_move)
        transcript.record(stage, alice_move, bob_move)
    transcript.finish(state, strategy, alice)
    if referee is not None:
        transcript.problems = list(referee.problems)
    logging.info('Finished %s after %i stages: %i provenance rows' % (kind.name, stages,
                                                                     len(transcript.provenance)))
    return transcript
