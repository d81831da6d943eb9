"""
Horn Formulas
=============

Clauses with at most one positive literal, in implication form:

    a & b -> c      definite clause
    -> c            fact (empty body)
    a & b -> FALSE  goal clause (no positive literal)

Text format: one clause per line, '#' starts a comment, blank lines are
ignored. Atom names are any run of characters without whitespace, '&',
'|', '#' or '->', so structured names such as in_union(cell_7) or
adjacent(c1,c2) are accepted as-is.
"""

from __future__ import annotations

import re
import sys
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

FALSE = "FALSE"

_ATOM = re.compile(r"^[^\s&|#]+$")


class HornSyntaxError(ValueError):
    """Rejected clause in Horn text, with its 1-based line number."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


def _check_atom(name: str, line: Optional[int] = None) -> str:
    if not isinstance(name, str) or not _ATOM.match(name) or "->" in name:
        raise HornSyntaxError(f"invalid atom name {name!r}", line)
    if name == FALSE:
        raise HornSyntaxError("FALSE may only appear as a clause head", line)
    return sys.intern(name)


@dataclass(frozen=True)
class HornClause:
    """body -> head; head None means FALSE."""

    body: FrozenSet[str]
    head: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "body", frozenset(_check_atom(a) for a in self.body))
        if self.head is not None:
            object.__setattr__(self, "head", _check_atom(self.head))

    @classmethod
    def from_literals(
        cls, positive: Iterable[str], negative: Iterable[str] = ()
    ) -> "HornClause":
        """
        Build from disjunctive form: OR(positive) OR NOT(each negative).

        Raises:
            HornSyntaxError: If there is more than one positive literal
        """
        heads = list(positive)
        if len(heads) > 1:
            raise HornSyntaxError(
                f"not a Horn clause: {len(heads)} positive literals {heads}"
            )
        return cls(body=frozenset(negative), head=heads[0] if heads else None)

    @property
    def is_fact(self) -> bool:
        return not self.body and self.head is not None

    @property
    def is_goal(self) -> bool:
        return self.head is None

    def atoms(self) -> FrozenSet[str]:
        return self.body | ({self.head} if self.head is not None else set())

    def to_text(self) -> str:
        body = " & ".join(sorted(self.body))
        head = FALSE if self.head is None else self.head
        return f"{body} -> {head}" if body else f"-> {head}"


class HornFormula:
    """
    A list of Horn clauses plus the table of the atoms they mention.

    Atoms are interned in first-seen order; atom_index() gives the dense
    index used by the solver.

    Example:
        f = HornFormula()
        f.add_fact("a")
        f.add_clause(["a"], "b")
        f.add_goal(["b", "c"])
    """

    def __init__(self, clauses: Iterable[HornClause] = ()):
        self._clauses: List[HornClause] = []
        self._atoms: Dict[str, int] = {}
        for clause in clauses:
            self.add(clause)

    def add(self, clause: HornClause) -> HornClause:
        if not isinstance(clause, HornClause):
            raise TypeError(f"expected HornClause, got {type(clause).__name__}")
        for atom in sorted(clause.body) + ([clause.head] if clause.head else []):
            self._atoms.setdefault(atom, len(self._atoms))
        self._clauses.append(clause)
        return clause

    def add_clause(self, body: Iterable[str], head: Optional[str]) -> HornClause:
        return self.add(HornClause(frozenset(body), head))

    def add_fact(self, atom: str) -> HornClause:
        return self.add(HornClause(frozenset(), atom))

    def add_goal(self, body: Iterable[str]) -> HornClause:
        return self.add(HornClause(frozenset(body), None))

    @property
    def clauses(self) -> Tuple[HornClause, ...]:
        return tuple(self._clauses)

    @property
    def atoms(self) -> Tuple[str, ...]:
        return tuple(self._atoms)

    def atom_index(self, atom: str) -> int:
        return self._atoms[atom]

    def __len__(self) -> int:
        return len(self._clauses)

    def __iter__(self):
        return iter(self._clauses)

    def literal_count(self) -> int:
        return sum(len(c.body) + (c.head is not None) for c in self._clauses)

    @classmethod
    def from_text(cls, text: str) -> "HornFormula":
        """
        Parse the line-based text format.

        Raises:
            HornSyntaxError: On the first rejected line, carrying its number
        """
        formula = cls()
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.count("->") != 1:
                raise HornSyntaxError("expected exactly one '->' per clause", number)
            body_text, head_text = (part.strip() for part in line.split("->"))
            body = []
            if body_text:
                for token in body_text.split("&"):
                    token = token.strip()
                    if not token:
                        raise HornSyntaxError("empty atom in clause body", number)
                    body.append(_check_atom(token, number))
            if not head_text:
                raise HornSyntaxError("missing clause head (use FALSE for goals)", number)
            if "&" in head_text or "|" in head_text or len(head_text.split()) > 1:
                raise HornSyntaxError(
                    f"not a Horn clause: more than one positive literal in {head_text!r}",
                    number,
                )
            head = None if head_text == FALSE else _check_atom(head_text, number)
            formula.add(HornClause(frozenset(body), head))
        return formula

    def to_text(self) -> str:
        return "".join(clause.to_text() + "\n" for clause in self._clauses)
