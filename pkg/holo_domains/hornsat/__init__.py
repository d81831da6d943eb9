"""
HORNSAT Module
==============

Horn formulas, a linear-time least-model solver, and the cell-inference
layer that propagates domain membership across a catalogue of cells.

Usage:
    from holo_domains.hornsat import HornFormula, minimal_model

    formula = HornFormula.from_text("-> a\\na -> b\\n")
    model = minimal_model(formula)
    if model:
        print(model.sorted())   # ['a', 'b']
    else:
        print("UNSAT", model.goal.to_text())
"""

from .formula import (
    FALSE,
    HornClause,
    HornFormula,
    HornSyntaxError,
)

from .solver import (
    Model,
    Unsatisfiable,
    minimal_model,
    satisfiable,
)

from .cells import (
    CellCatalogue,
    CellLabel,
    build_domain_rules,
    classify_cells,
    catalogue_from_configurations,
    permuted_cell_name,
    image_cell_name,
    in_tube_atom,
    in_etube_atom,
    in_union_atom,
)

__all__ = [
    # Formulas
    "FALSE",
    "HornClause",
    "HornFormula",
    "HornSyntaxError",
    # Solver
    "Model",
    "Unsatisfiable",
    "minimal_model",
    "satisfiable",
    # Cells
    "CellCatalogue",
    "CellLabel",
    "build_domain_rules",
    "classify_cells",
    "catalogue_from_configurations",
    "permuted_cell_name",
    "image_cell_name",
    "in_tube_atom",
    "in_etube_atom",
    "in_union_atom",
]
