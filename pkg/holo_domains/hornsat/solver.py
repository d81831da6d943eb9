"""
HORNSAT Solver
==============

Least-model computation by forward chaining with per-clause counters of
unsatisfied body atoms. Each atom is dequeued once and each body literal
decremented once, so the run is linear in the literal count.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Union

from .formula import HornClause, HornFormula

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Model:
    """The least model: the set of atoms forced true."""

    atoms: FrozenSet[str]

    def __bool__(self):
        return True

    def __contains__(self, atom: str) -> bool:
        return atom in self.atoms

    def __len__(self) -> int:
        return len(self.atoms)

    def sorted(self) -> List[str]:
        return sorted(self.atoms)


@dataclass(frozen=True)
class Unsatisfiable:
    """FALSE was derived: `goal` is the goal clause whose body became true."""

    goal: HornClause
    derived: FrozenSet[str]

    def __bool__(self):
        return False


def minimal_model(formula: HornFormula) -> Union[Model, Unsatisfiable]:
    """
    Compute the least model of a Horn formula.

    Returns:
        Model with the true atoms, or Unsatisfiable naming the first goal
        clause whose body was derived
    """
    clauses = formula.clauses
    remaining = [len(clause.body) for clause in clauses]
    watches: Dict[str, List[int]] = {}
    for index, clause in enumerate(clauses):
        for atom in clause.body:
            watches.setdefault(atom, []).append(index)

    true: set = set()
    queue: deque = deque()

    def fire(index: int):
        head = clauses[index].head
        if head is None:
            return clauses[index]
        if head not in true:
            true.add(head)
            queue.append(head)
        return None

    for index, count in enumerate(remaining):
        if count == 0:
            goal = fire(index)
            if goal is not None:
                return Unsatisfiable(goal=goal, derived=frozenset(true))

    while queue:
        atom = queue.popleft()
        for index in watches.get(atom, ()):
            remaining[index] -= 1
            if remaining[index] == 0:
                goal = fire(index)
                if goal is not None:
                    logger.debug("FALSE derived by %s", goal.to_text())
                    return Unsatisfiable(goal=goal, derived=frozenset(true))

    logger.debug(
        "least model: %d of %d atoms true (%d clauses)",
        len(true),
        len(formula.atoms),
        len(clauses),
    )
    return Model(atoms=frozenset(true))


def satisfiable(formula: HornFormula) -> bool:
    return bool(minimal_model(formula))
