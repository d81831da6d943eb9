"""
Test Fixtures for Holo Domains
==============================

Configurations with hand-checked verdicts, seeded generators and hypothesis
strategies, and the JSON and Horn text files the format and CLI tests read.
"""

from .configurations import (
    DATA_DIR,
    HORN_DIR,
    # Tube
    TUBE_INSIDE_PAIR,
    TUBE_INSIDE_TRIPLE,
    TUBE_OUTSIDE_SPACELIKE,
    TUBE_OUTSIDE_PAST,
    TUBE_BOUNDARY_REAL,
    TUBE_S3_INSIDE_PAIR,
    # Extended tube
    ETUBE_INSIDE_SPACELIKE_PAIR,
    ETUBE_INSIDE_MIRROR_PAIR,
    ETUBE_OUTSIDE_TIMELIKE_PAIR,
    ETUBE_OUTSIDE_LIGHTLIKE_PAIR,
    ETUBE_OUTSIDE_REORDER_TRIPLE,
    ETUBE_INSIDE_TINY_PAIR,
    ETUBE_BOUNDARY_NEAR_MISS_TRIPLE,
    ETUBE_S3_SPACELIKE_PAIR,
    # Permuted union
    UNION_INSIDE_REORDER_TRIPLE,
    UNION_OUTSIDE_TIMELIKE_TRIPLE,
    UNION_INSIDE_FERMI_TRIPLE,
    # Jost points
    JOST_INSIDE_PAIR,
    JOST_INSIDE_TRIPLE,
    JOST_INSIDE_TINY_PAIR,
    JOST_OUTSIDE_TIMELIKE_PAIR,
    JOST_OUTSIDE_OPPOSED_TRIPLE,
    JOST_S3_SPACELIKE_PAIR,
    JOST_S3_TIMELIKE_PAIR,
    JOST_S3_OPPOSED_TRIPLE,
    # Files
    TUBE_INTERIOR_FILE,
    REAL_CONFIG_FILE,
    JOST_PAIR_FILE,
    REORDER_TRIPLE_FILE,
    TIMELIKE_TRIPLE_FILE,
    S3_SPACELIKE_PAIR_FILE,
    TRUNCATED_FILE,
    WRONG_COMPONENTS_FILE,
    NON_FINITE_FILE,
    CONFIGURATION_FILES,
    HORN_CHAIN_FILE,
    HORN_UNSAT_FILE,
    HORN_NOT_HORN_FILE,
    HORN_CELLS_FILE,
)

from .generators import (
    SEEDS,
    seeded_configurations,
    random_configuration,
    tube_configuration,
    jost_configuration,
    # Hypothesis strategies
    configurations,
    tube_configurations,
    horn_formulas,
)
