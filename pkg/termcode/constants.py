import os
from enum import Enum

# Table entries enumerated by exhaustive search; TC_BUDGET overrides
DEFAULT_BUDGET = 2**34
BUDGET_ENVIRONMENT_VARIABLE = "TC_BUDGET"

DEFAULT_VERTEX_CAP = 12
DEFAULT_CLAUSE_CAP = 10_000
DEFAULT_SAMPLE_CAP = 16

# Worker processes of the tc command line when --threads is not given
DEFAULT_THREADS = os.cpu_count() or 1

# Upper bound on batch_size * assignments held in memory at once
EVALUATION_CELLS = 2**22

TC_EXTENSION = ".tc"
FO_EXTENSION = ".fo"
JSON_EXTENSION = ".json"


class ConstraintKind(str, Enum):
    EQ = "eq"
    NEQ = "neq"


class SearchMode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    ANNEAL = "anneal"


class Objective(str, Enum):
    SOLUTIONS = "solutions"
    DISPERSION = "dispersion"
    PROJECTION = "projection"


class ExampleName(str, Enum):
    STEINER_QUASIGROUP = "steiner-quasigroup"
    STEINER_QUASIGROUP_SYM = "steiner-quasigroup-sym"
    STEINER_T = "steiner-t"
    SOLS = "sols"
    NETWORK_CODING = "network-coding"
    UNSOLVABLE_V1 = "unsolvable-v1"
    UNSOLVABLE_V2 = "unsolvable-v2"
    C5 = "c5"
    TWO_NODE_MULTISORT = "two-node-multisort"
    SINGLE_RELAY = "single-relay"
    NAND_DISPERSION = "nand-dispersion"
