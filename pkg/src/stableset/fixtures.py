"""Small named instances used across tests and demos."""

from .relations import DecisionProblem

THREE_CYCLE = DecisionProblem.from_edges(3, [(0, 1), (1, 2), (2, 0)])
CHAIN = DecisionProblem.from_edges(3, [(0, 1), (1, 2), (0, 2)])
CYCLE_WITH_TAIL = DecisionProblem.from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
FOUR_CYCLE = DecisionProblem.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
SYMMETRIC_PAIR = DecisionProblem.from_edges(2, [(0, 1), (1, 0)])
FIVE_CYCLE = DecisionProblem.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4),
                                            (4, 0)])
