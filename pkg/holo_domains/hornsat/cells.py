"""
Cell Inference
==============

Domain membership propagated over a catalogue of cells with Horn rules.

Each cell is a region of configuration space with a discrete signature
(the arc arrangement in s = 2). Direct decision procedures supply the base
facts (cells inside the tube) and the structural facts (Lorentz links,
permutation orbits, adjacencies across Jost interfaces); the least model
of the generated formula then labels every cell by the strongest stratum
it reaches.

Clause schema, for every catalogued cell c:

    -> in_tube(c)                                  c is a base cell
    in_tube(c) -> in_etube(c)
    in_tube(t) -> in_etube(c)                      c is a complex Lorentz image of t
    in_etube(c) -> in_union(c)
    in_etube(orbit_pi(c)) -> in_union(c)           for every recorded pi
    in_union(c) & adjacent(c,d) & jost_interface(c,d) -> in_union(d)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Hashable, Mapping, Optional, Set, Tuple

from ..base import DEFAULT_EPSILON
from ..geometry import Configuration
from .formula import HornFormula
from .solver import minimal_model

logger = logging.getLogger(__name__)

Orbits = Mapping[Hashable, Mapping[str, str]]


class CellLabel(str, Enum):
    """Strongest derived stratum of a cell."""

    TUBE = "tube"
    EXTENDED = "extended"
    UNION = "union"
    OUTSIDE = "outside"


def in_tube_atom(cell: str) -> str:
    return f"in_tube({cell})"


def in_etube_atom(cell: str) -> str:
    return f"in_etube({cell})"


def in_union_atom(cell: str) -> str:
    return f"in_union({cell})"


def adjacent_atom(a: str, b: str) -> str:
    return f"adjacent({a},{b})"


def jost_interface_atom(a: str, b: str) -> str:
    return f"jost_interface({a},{b})"


@dataclass
class CellCatalogue:
    """
    Cells, their signatures and the facts known about them.

    Attributes:
        cells: cell id -> discrete signature
        adjacency: unordered adjacent pairs (symmetric by construction)
        jost_interfaces: adjacent pairs whose shared face consists of Jost points
        base: cells known to lie inside the tube
        lorentz_links: (cell, tube_cell) where cell is a complex Lorentz image of tube_cell
    """

    cells: Dict[str, Tuple[str, ...]] = field(default_factory=dict)
    adjacency: Set[FrozenSet[str]] = field(default_factory=set)
    jost_interfaces: Set[FrozenSet[str]] = field(default_factory=set)
    base: Set[str] = field(default_factory=set)
    lorentz_links: Set[Tuple[str, str]] = field(default_factory=set)

    def add_cell(self, cell: str, signature: Tuple[str, ...] = ()) -> str:
        self.cells.setdefault(cell, tuple(signature))
        return cell

    def _require(self, *cells: str) -> None:
        for cell in cells:
            if cell not in self.cells:
                raise ValueError(f"unregistered cell {cell!r}")

    def add_adjacency(self, a: str, b: str, jost_interface: bool = False) -> None:
        self._require(a, b)
        if a == b:
            raise ValueError(f"a cell is not adjacent to itself: {a!r}")
        pair = frozenset((a, b))
        self.adjacency.add(pair)
        if jost_interface:
            self.jost_interfaces.add(pair)

    def add_base(self, cell: str) -> None:
        self._require(cell)
        self.base.add(cell)

    def add_lorentz_link(self, cell: str, tube_cell: str) -> None:
        self._require(cell, tube_cell)
        self.lorentz_links.add((cell, tube_cell))

    def neighbours(self, cell: str) -> Set[str]:
        return {other for pair in self.adjacency if cell in pair for other in pair - {cell}}

    def validate(self) -> None:
        """
        Raises:
            ValueError: If any fact refers to an unregistered cell
        """
        for pair in self.adjacency | self.jost_interfaces:
            self._require(*pair)
        if not self.jost_interfaces <= self.adjacency:
            raise ValueError("every Jost interface must join adjacent cells")
        self._require(*self.base)
        for cell, tube_cell in self.lorentz_links:
            self._require(cell, tube_cell)


def build_domain_rules(
    catalogue: CellCatalogue, permutation_orbits: Optional[Orbits] = None
) -> HornFormula:
    """
    Emit the clause schema for a catalogue.

    Args:
        catalogue: Cells and facts
        permutation_orbits: pi -> {cell: image cell under pi}

    Raises:
        ValueError: If a fact or orbit refers to an unregistered cell
    """
    catalogue.validate()
    formula = HornFormula()

    for cell in sorted(catalogue.base):
        formula.add_fact(in_tube_atom(cell))

    for pair in sorted(catalogue.adjacency, key=sorted):
        a, b = sorted(pair)
        interface = pair in catalogue.jost_interfaces
        for c, d in ((a, b), (b, a)):
            formula.add_fact(adjacent_atom(c, d))
            if interface:
                formula.add_fact(jost_interface_atom(c, d))
            formula.add_clause(
                [in_union_atom(c), adjacent_atom(c, d), jost_interface_atom(c, d)],
                in_union_atom(d),
            )

    for cell in sorted(catalogue.cells):
        formula.add_clause([in_tube_atom(cell)], in_etube_atom(cell))
        formula.add_clause([in_etube_atom(cell)], in_union_atom(cell))

    for cell, tube_cell in sorted(catalogue.lorentz_links):
        formula.add_clause([in_tube_atom(tube_cell)], in_etube_atom(cell))

    for pi, orbit in sorted((permutation_orbits or {}).items(), key=lambda kv: str(kv[0])):
        for cell, image in sorted(orbit.items()):
            if cell not in catalogue.cells or image not in catalogue.cells:
                raise ValueError(f"orbit of {pi} refers to an unregistered cell: {cell} -> {image}")
            formula.add_clause([in_etube_atom(image)], in_union_atom(cell))

    logger.debug(
        "domain rules: %d cells, %d clauses, %d literals",
        len(catalogue.cells),
        len(formula),
        formula.literal_count(),
    )
    return formula


def classify_cells(
    catalogue: CellCatalogue, permutation_orbits: Optional[Orbits] = None
) -> Dict[str, CellLabel]:
    """
    Label every cell with the strongest stratum derived for it.

    tube > extended > union > outside.
    """
    model = minimal_model(build_domain_rules(catalogue, permutation_orbits))
    if not model:
        # the schema has no goal clauses
        raise ValueError(f"domain rules are unsatisfiable: {model.goal.to_text()}")
    labels = {}
    for cell in sorted(catalogue.cells):
        if in_tube_atom(cell) in model:
            labels[cell] = CellLabel.TUBE
        elif in_etube_atom(cell) in model:
            labels[cell] = CellLabel.EXTENDED
        elif in_union_atom(cell) in model:
            labels[cell] = CellLabel.UNION
        else:
            labels[cell] = CellLabel.OUTSIDE
    return labels


def permuted_cell_name(name: str, mapping: Tuple[int, ...]) -> str:
    if mapping == tuple(range(1, len(mapping) + 1)):
        return name
    return f"{name}[{','.join(str(p) for p in mapping)}]"


def image_cell_name(cell: str) -> str:
    return f"{cell}@lambda"


def catalogue_from_configurations(
    configurations: Mapping[str, Configuration],
    epsilon: float = DEFAULT_EPSILON,
    max_enumerate: int = 4,
) -> Tuple[CellCatalogue, Dict[Tuple[int, ...], Dict[str, str]]]:
    """
    Build a catalogue and permutation orbits from named s = 2 configurations.

    For every configuration with m <= max_enumerate, each reordering becomes
    a cell of its own and the orbit maps close over the family. A cell that
    is in the extended tube but not the tube gets its certified image as an
    extra base cell plus a Lorentz link. Cells with equal signatures are
    adjacent; the adjacency is a Jost interface when both are Jost points.

    Returns:
        (catalogue, orbits) ready for classify_cells()
    """
    from ..domains import arc_signature, in_extended_tube_s2, in_tube, is_jost_s2
    from ..lorentz import apply
    from ..permutation import all_permutations, permute_config

    catalogue = CellCatalogue()
    orbits: Dict[Tuple[int, ...], Dict[str, str]] = {}
    members: Dict[str, Configuration] = {}

    for name, config in sorted(configurations.items()):
        if config.m > max_enumerate:
            family = {tuple(range(1, config.m + 1)): config}
        else:
            family = {pi.mapping: permute_config(config, pi) for pi in all_permutations(config.m)}
        for sigma, member in family.items():
            members[permuted_cell_name(name, sigma)] = member
        for sigma in family:
            for pi in family:
                target = tuple(sigma[p - 1] for p in pi)
                if target in family:
                    orbits.setdefault(pi, {})[permuted_cell_name(name, sigma)] = (
                        permuted_cell_name(name, target)
                    )

    jost_cells = set()
    for cell, member in members.items():
        catalogue.add_cell(cell, arc_signature(member))
        if in_tube(member, epsilon):
            catalogue.add_base(cell)
            continue
        verdict = in_extended_tube_s2(member, epsilon)
        if verdict:
            image = apply(verdict.certificate.as_transform(2), member)
            if in_tube(image, epsilon):
                image_cell = catalogue.add_cell(image_cell_name(cell), arc_signature(image))
                catalogue.add_base(image_cell)
                catalogue.add_lorentz_link(cell, image_cell)
        if member.is_real(epsilon) and is_jost_s2(member, epsilon):
            jost_cells.add(cell)

    by_signature: Dict[Tuple[str, ...], list] = {}
    for cell in sorted(members):
        by_signature.setdefault(catalogue.cells[cell], []).append(cell)
    for group in by_signature.values():
        for i, a in enumerate(group):
            for b in group[i + 1 :]:
                catalogue.add_adjacency(a, b, jost_interface=a in jost_cells and b in jost_cells)

    logger.info(
        "catalogue: %d cells (%d base), %d adjacencies, %d Lorentz links",
        len(catalogue.cells),
        len(catalogue.base),
        len(catalogue.adjacency),
        len(catalogue.lorentz_links),
    )
    return catalogue, orbits
