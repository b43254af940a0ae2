from onlinecontrol.core import Ballot
from onlinecontrol.game import ControlInstance, FutureVoter, PastRecord


def order(s):
    return tuple(s) if isinstance(s, str) else tuple(s)


def make(control, mode, sigma, d, u, past=(), future=(), budget=None, system="plurality",
         candidates=None):
    """Compact instance builder: single-letter candidates, ballots as strings."""
    sigma = order(sigma)
    past_recs = tuple(
        PastRecord(f"p{i}", flag, None if b is None else order(b))
        for i, (flag, b) in enumerate(past, 1)
    )
    fut = []
    for i, f in enumerate(future, 1):
        fut.append(FutureVoter(f"f{i}", f if control == "AV" else None))
    return ControlInstance(control, mode, system, tuple(sorted(candidates or sigma)), sigma, d,
                           Ballot("u", order(u)), past_recs, tuple(fut), budget)
