import os
from pathlib import Path

SYSTEMS_PATH = Path(__file__).parent / "systems"

STEINER_PATH = os.path.join(SYSTEMS_PATH, "steiner.tc")
NETWORK_CODING_PATH = os.path.join(SYSTEMS_PATH, "network_coding.tc")
TWO_NODE_PATH = os.path.join(SYSTEMS_PATH, "two_node.tc")
NAND_PATH = os.path.join(SYSTEMS_PATH, "nand.tc")
RELAY_PATH = os.path.join(SYSTEMS_PATH, "relay.tc")
MISSING_PAREN_PATH = os.path.join(SYSTEMS_PATH, "missing_paren.tc")
ILL_TYPED_PATH = os.path.join(SYSTEMS_PATH, "ill_typed.tc")

INVERSE_FO_PATH = os.path.join(SYSTEMS_PATH, "inverse.fo")
EMPTY_DOMAIN_FO_PATH = os.path.join(SYSTEMS_PATH, "empty_domain.fo")
STEINER_FO_PATH = os.path.join(SYSTEMS_PATH, "steiner.fo")
