from typing import Dict, FrozenSet, List, Set, Tuple

import networkx as nx

from termcode.exceptions import ParameterError
from termcode.ir.System import System
from termcode.normalization import is_flat


class DepGraph:
    """
    Variable dependency graph of a flat system.

    Every equation f(x_i1, ..., x_ik) = x_j adds the edges x_ip -> x_j. Disequalities add no
    edges; they are kept as a separate set of unordered distinctness pairs.

    Attributes
    ----------
    graph
        Directed graph on variable names, node attribute ``sort``. Multi-edges collapse,
        self-edges are kept.

    constants_at
        Variables defined by a constant equation c = x_j

    distinctness
        Unordered variable pairs that must differ

    equations
        (argument variables, defined variable) per equation, in equation order
    """

    graph: nx.DiGraph
    constants_at: Set[str]
    distinctness: Set[FrozenSet[str]]
    equations: List[Tuple[Tuple[str, ...], str]]

    def __init__(self):
        self.graph = nx.DiGraph()
        self.constants_at = set()
        self.distinctness = set()
        self.equations = []

    @classmethod
    def build(cls, system: System) -> "DepGraph":
        """
        Builds the dependency graph of a flat system
        """
        if not is_flat(system):
            raise ParameterError("Dependency graphs are built from flat systems")

        dep_graph = cls()
        for var in system.vars:
            dep_graph.graph.add_node(var.name, sort=var.sort)

        for equation in system.equations:
            args = tuple(arg.name for arg in equation.lhs.args)
            target = equation.rhs.name
            dep_graph.equations.append((args, target))
            if not args:
                dep_graph.constants_at.add(target)
            for arg in args:
                dep_graph.graph.add_edge(arg, target)

        for neq in system.disequalities:
            dep_graph.distinctness.add(frozenset((neq.lhs.name, neq.rhs.name)))

        return dep_graph

    @property
    def vertices(self) -> List[str]:
        return list(self.graph.nodes)

    @property
    def edges(self) -> List[Tuple[str, str]]:
        return sorted(self.graph.edges, key=self._edge_order)

    def sort_of(self, vertex: str) -> str:
        return self.graph.nodes[vertex]["sort"]

    def sorts(self) -> Dict[str, str]:
        return {vertex: self.sort_of(vertex) for vertex in self.graph.nodes}

    def in_neighbors(self, vertex: str) -> List[str]:
        return [u for u in self.graph.nodes if self.graph.has_edge(u, vertex)]

    def labelled_nodes(self) -> List[str]:
        """
        One node per equation, labelled by the variable it defines. Nodes sharing a label
        must take the same value, which is why the entropy bound merges them.
        """
        return [target for _, target in self.equations]

    def _edge_order(self, edge: Tuple[str, str]) -> Tuple[int, int]:
        index = {vertex: position for position, vertex in enumerate(self.graph.nodes)}
        return index[edge[0]], index[edge[1]]

    def to_dot(self, name: str = "G") -> str:
        """
        Returns
        -------
        Deterministic DOT text. Distinctness pairs are dashed, undirected, labelled "≠".
        """
        lines = [f"digraph {name} {{"]
        for vertex in self.graph.nodes:
            shape = ', shape="box"' if vertex in self.constants_at else ""
            lines.append(
                f'  "{vertex}" [label="{vertex} : {self.sort_of(vertex)}"{shape}];'
            )
        for source, target in self.edges:
            lines.append(f'  "{source}" -> "{target}";')

        order = {vertex: position for position, vertex in enumerate(self.graph.nodes)}
        pairs = sorted(
            (tuple(sorted(pair, key=lambda vertex: order.get(vertex, -1))) for pair in self.distinctness),
            key=lambda pair: tuple(order.get(vertex, -1) for vertex in pair),
        )
        for pair in pairs:
            first, second = pair if len(pair) == 2 else (pair[0], pair[0])
            lines.append(
                f'  "{first}" -> "{second}" [dir=none, style=dashed, label="≠"];'
            )
        lines.append("}")

        return "\n".join(lines) + "\n"
