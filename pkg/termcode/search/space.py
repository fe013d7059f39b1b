import math
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

import numpy as np

from termcode.exceptions import ParameterError
from termcode.ir.System import DomainSizes, System
from termcode.semantics.Interpretation import Interpretation, table_shape

Cell = Tuple[str, int, int]


class TableSpace:
    """
    The interpretations of a system as mixed-radix numbers over its free table entries.

    Free symbols are taken in declaration order and their entries in row-major order, the first
    entry being the most significant digit, so ascending indices enumerate interpretations in
    lexicographic order of their table encoding. Pinned symbols keep their given tables.

    Attributes
    ----------
    sizes
        Domain sizes of the system's sorts

    fixed
        Pinned tables by symbol

    free
        Names of the enumerated symbols

    radices
        Value count of every free entry, in digit order

    size
        Number of interpretations in the space
    """

    sizes: DomainSizes
    fixed: Dict[str, np.ndarray]
    free: List[str]
    radices: List[int]
    size: int

    def __init__(
        self,
        system: System,
        sizes: Mapping[str, int],
        fixed: Optional[Mapping[str, object]] = None,
        exclude: Iterable[str] = (),
    ):
        self.system = system
        self.sizes = DomainSizes.for_system(system, sizes)
        self.shapes = {func.name: table_shape(func, self.sizes) for func in system.funcs}

        fixed = dict(fixed or {})
        unknown = set(fixed) - set(system.func_names)
        if unknown:
            raise ParameterError(f"Pinned tables given for unknown symbols {sorted(unknown)}")
        self.fixed = {}
        for name, table in fixed.items():
            table = np.asarray(table, dtype=np.int64).reshape(self.shapes[name])
            upper = self.sizes[system.func(name).result_sort]
            if table.size and (table.min() < 0 or table.max() >= upper):
                raise ParameterError(f"Pinned table for '{name}' has values outside 0..{upper - 1}")
            self.fixed[name] = table

        excluded = set(exclude)
        self.free = [
            func.name
            for func in system.funcs
            if func.name not in self.fixed and func.name not in excluded
        ]
        self.radices = []
        for name in self.free:
            radix = self.sizes[system.func(name).result_sort]
            self.radices.extend([radix] * math.prod(self.shapes[name]))
        self.size = math.prod(self.radices)

    @property
    def cells(self) -> int:
        return len(self.radices)

    def work(self) -> int:
        """Table entries written while enumerating the whole space"""
        return self.size * max(1, self.cells)

    def decode(self, indices: np.ndarray) -> Dict[str, np.ndarray]:
        """
        Tables for a batch of interpretation indices, each of shape (B, *table shape)
        """
        indices = np.asarray(indices, dtype=np.int64).copy()
        batch = indices.shape[0]
        digits = np.empty((batch, self.cells), dtype=np.int64)
        for position in range(self.cells - 1, -1, -1):
            radix = self.radices[position]
            digits[:, position] = indices % radix
            indices //= radix

        tables = {}
        offset = 0
        for name in self.free:
            shape = self.shapes[name]
            width = math.prod(shape)
            tables[name] = digits[:, offset : offset + width].reshape((batch,) + shape)
            offset += width
        for name, table in self.fixed.items():
            tables[name] = np.broadcast_to(table, (batch,) + table.shape)

        return tables

    def encode(self, interpretation: Interpretation) -> int:
        """Index of an interpretation; pinned symbols are ignored"""
        index = 0
        position = 0
        for name in self.free:
            for value in interpretation.tables[name].reshape(-1):
                index = index * self.radices[position] + int(value)
                position += 1
        return index

    def interpretation_at(self, index: int) -> Interpretation:
        tables = self.decode(np.array([index], dtype=np.int64))
        return self.unbatch(tables)

    def unbatch(self, tables: Mapping[str, np.ndarray], row: int = 0) -> Interpretation:
        """The interpretation stored at one row of batched tables"""
        return Interpretation(
            self.sizes, {name: np.array(table[row]) for name, table in tables.items()}
        )

    def batched(self, interpretation: Interpretation) -> Dict[str, np.ndarray]:
        """Writable batch-of-one tables, pinned symbols overriding the interpretation"""
        tables = {
            name: np.array(interpretation.tables[name], dtype=np.int64)[None]
            for name in self.free
        }
        for name, table in self.fixed.items():
            tables[name] = table.copy()[None]
        return tables

    def random_tables(self, rng: np.random.Generator) -> Dict[str, np.ndarray]:
        """Uniformly random free tables as a writable batch of one"""
        tables = {}
        for name in self.free:
            radix = self.sizes[self.system.func(name).result_sort]
            tables[name] = rng.integers(0, radix, size=(1,) + self.shapes[name], dtype=np.int64)
        for name, table in self.fixed.items():
            tables[name] = table.copy()[None]
        return tables

    def mutable_cells(self) -> List[Cell]:
        """(symbol, flat entry index, radix) for every free entry with at least two values"""
        cells = []
        for name in self.free:
            radix = self.sizes[self.system.func(name).result_sort]
            if radix < 2:
                continue
            cells.extend((name, flat, radix) for flat in range(math.prod(self.shapes[name])))
        return cells
