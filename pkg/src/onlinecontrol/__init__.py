"""Online voter control in sequential elections: exact solver, fast
plurality algorithms, constructed systems and reductions."""

from .core import PLURALITY, Ballot, ElectionSystem, ValidationError, lex_less, mask, plurality_winners
from .game import ControlInstance, FutureVoter, GoalSpec, InstanceError, PastRecord, validate_instance
from .solver import Solver, SolverCapError, SolverConfig, Verdict, solve

__all__ = [
    "PLURALITY", "Ballot", "ElectionSystem", "ValidationError", "lex_less", "mask",
    "plurality_winners", "ControlInstance", "FutureVoter", "GoalSpec", "InstanceError",
    "PastRecord", "validate_instance", "Solver", "SolverCapError", "SolverConfig",
    "Verdict", "solve",
]
