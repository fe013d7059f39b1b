from typing import Callable, Dict, List, Mapping, Optional, Tuple

import numpy as np

from termcode.exceptions import ParameterError
from termcode.ir.System import DomainSizes, FuncSymbol, System
from termcode.utilities.system import digest


def table_shape(func: FuncSymbol, sizes: Mapping[str, int]) -> Tuple[int, ...]:
    """Shape of a symbol's lookup table: one axis per argument, sized by the argument's sort"""
    return tuple(sizes[sort] for sort in func.arg_sorts)


class Interpretation:
    """
    Finite domains per sort plus a total lookup table for every function symbol.

    Elements of a sort of size n are encoded 0..n-1. A table for f: S1 x ... x Sk -> R is a
    numpy array of shape (|S1|, ..., |Sk|) holding elements of R; constants have shape ().

    Attributes
    ----------
    sizes
        Domain size per sort

    tables
        Lookup table per function symbol
    """

    sizes: DomainSizes
    tables: Dict[str, np.ndarray]

    def __init__(self, sizes: Mapping[str, int], tables: Mapping[str, np.ndarray]):
        self.sizes = sizes if isinstance(sizes, DomainSizes) else DomainSizes(sizes)
        self.tables = {
            name: np.asarray(table, dtype=np.int64) for name, table in tables.items()
        }

    @classmethod
    def for_system(
        cls,
        system: System,
        sizes: Mapping[str, int],
        tables: Mapping[str, object],
    ) -> "Interpretation":
        """
        Builds and checks an interpretation of a system
        """
        interpretation = cls(DomainSizes.for_system(system, sizes), tables)
        interpretation.validate(system)
        return interpretation

    @classmethod
    def constant(
        cls, system: System, sizes: Mapping[str, int], value: int = 0
    ) -> "Interpretation":
        """Every table filled with one value"""
        sizes = DomainSizes.for_system(system, sizes)
        return cls.for_system(
            system,
            sizes,
            {
                func.name: np.full(table_shape(func, sizes), value, dtype=np.int64)
                for func in system.funcs
            },
        )

    @classmethod
    def from_functions(
        cls,
        system: System,
        sizes: Mapping[str, int],
        functions: Mapping[str, Callable[..., int]],
        default: int = 0,
    ) -> "Interpretation":
        """
        Tabulates Python callables; symbols without a callable are filled with default
        """
        sizes = DomainSizes.for_system(system, sizes)
        tables = {}
        for func in system.funcs:
            shape = table_shape(func, sizes)
            function = functions.get(func.name)
            if function is None:
                tables[func.name] = np.full(shape, default, dtype=np.int64)
                continue
            table = np.empty(shape, dtype=np.int64)
            for index in np.ndindex(*shape):
                table[index] = function(*index)
            tables[func.name] = table

        return cls.for_system(system, sizes, tables)

    @classmethod
    def from_rows(
        cls,
        system: System,
        sizes: Mapping[str, int],
        rows: Mapping[str, object],
        one_indexed: bool = False,
    ) -> "Interpretation":
        """Builds tables from nested lists, shifting printed 1-indexed tables when asked"""
        shift = 1 if one_indexed else 0
        tables = {
            name: np.asarray(value, dtype=np.int64) - shift for name, value in rows.items()
        }
        return cls.for_system(system, sizes, tables)

    def validate(self, system: System):
        """
        Raises ParameterError unless every symbol has a total, in-range table of the right shape
        """
        for func in system.funcs:
            table = self.tables.get(func.name)
            if table is None:
                raise ParameterError(f"No table for function symbol '{func.name}'")
            expected = table_shape(func, self.sizes)
            if table.shape != expected:
                raise ParameterError(
                    f"Table for '{func.name}' has shape {table.shape}, expected {expected}"
                )
            upper = self.sizes[func.result_sort]
            if table.size and (table.min() < 0 or table.max() >= upper):
                raise ParameterError(
                    f"Table for '{func.name}' has values outside 0..{upper - 1}"
                )

    def encode(self, system: System) -> List[int]:
        """Row-major table values, symbols in declaration order"""
        values: List[int] = []
        for func in system.funcs:
            values.extend(int(value) for value in self.tables[func.name].reshape(-1))
        return values

    def digest(self, system: System) -> str:
        sizes = ",".join(f"{sort}={self.sizes[sort]}" for sort in system.sort_names)
        return digest(sizes + ";" + ",".join(map(str, self.encode(system))))

    def with_tables(self, **tables) -> "Interpretation":
        merged = dict(self.tables)
        merged.update(tables)
        return Interpretation(self.sizes, merged)

    def restricted_to(self, system: System) -> "Interpretation":
        """Keeps only the tables of the system's symbols"""
        return Interpretation(
            DomainSizes({sort: self.sizes[sort] for sort in system.sort_names}),
            {func.name: self.tables[func.name] for func in system.funcs},
        )

    def __eq__(self, other):
        if not isinstance(other, Interpretation):
            return NotImplemented
        if dict(self.sizes) != dict(other.sizes) or self.tables.keys() != other.tables.keys():
            return False
        return all(
            np.array_equal(table, other.tables[name]) for name, table in self.tables.items()
        )

    def __repr__(self):
        return f"Interpretation(sizes={dict(self.sizes)}, symbols={list(self.tables)})"


def uniform_sizes(system: System, n: int, overrides: Optional[Mapping[str, int]] = None) -> DomainSizes:
    return DomainSizes.for_system(system, overrides or {}, uniform=n)
