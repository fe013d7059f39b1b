from typing import Dict, List, Set, Tuple

import networkx as nx

from termcode.exceptions import ParameterError
from termcode.ir.System import System
from termcode.ir.terms import App, Term, Var, iter_subterms

SOURCE = "__source__"
SINK = "__sink__"


class TermDag:
    """
    Shared DAG of the output terms of a dispersion system, as a node-split flow network.

    Every distinct subterm is one node u, split into (u, "in") -> (u, "out") with capacity 1.
    Arguments feed applications, the source feeds every input variable and every output node
    feeds the sink; those edges are uncapacitated. Constants have no incoming edges, so they
    never carry flow, and syntactically equal outputs share one node.

    Attributes
    ----------
    inputs
        Declared variables, in declaration order

    outputs
        Node identifiers of the output terms, in output order with duplicates kept

    nodes
        Node identifier -> term
    """

    inputs: List[str]
    outputs: List[str]
    nodes: Dict[str, Term]
    network: nx.DiGraph

    def __init__(self, system: System):
        if not system.outputs:
            raise ParameterError("Dispersion needs output terms")

        self.inputs = list(system.var_names)
        self.nodes = {}
        self.network = nx.DiGraph()
        self.network.add_node(SOURCE)
        self.network.add_node(SINK)

        for name in self.inputs:
            self._add_node(Var(name))
            self.network.add_edge(SOURCE, (name, "in"))

        for term in system.outputs:
            for subterm in iter_subterms(term):
                self._add_node(subterm)
                if isinstance(subterm, App):
                    for arg in subterm.args:
                        self.network.add_edge(
                            (self.node_id(arg), "out"), (self.node_id(subterm), "in")
                        )

        self.outputs = [self.node_id(term) for term in system.outputs]
        for node in set(self.outputs):
            self.network.add_edge((node, "out"), SINK)

    @staticmethod
    def node_id(term: Term) -> str:
        return str(term)

    def _add_node(self, term: Term):
        node = self.node_id(term)
        if node not in self.nodes:
            self.nodes[node] = term
            self.network.add_edge((node, "in"), (node, "out"), capacity=1)

    def max_flow(self) -> Tuple[int, List[str]]:
        """
        Maximum number of vertex-disjoint paths from inputs to outputs, and a minimum vertex
        cut: the split nodes whose in-half lies on the source side and out-half on the sink side
        """
        value, (reachable, _) = nx.minimum_cut(self.network, SOURCE, SINK)
        reached: Set = set(reachable)
        cut = [
            node
            for node in self.nodes
            if (node, "in") in reached and (node, "out") not in reached
        ]
        return int(value), cut
