from termcode.graph.DepGraph import DepGraph

__all__ = ["DepGraph"]
