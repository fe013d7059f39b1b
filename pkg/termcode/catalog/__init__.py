from termcode.catalog.generators import (
    example_names,
    fixed_tables,
    gen,
    source,
    steiner_triple_system_exists,
)
from termcode.catalog.witnesses import (
    c5_witness,
    nand_witness,
    network_coding_witness,
    sols_witness,
    steiner_witness,
    two_node_witness,
    unsolvable_projection_witness,
)

__all__ = [
    "c5_witness",
    "example_names",
    "fixed_tables",
    "gen",
    "nand_witness",
    "network_coding_witness",
    "sols_witness",
    "source",
    "steiner_triple_system_exists",
    "steiner_witness",
    "two_node_witness",
    "unsolvable_projection_witness",
]
