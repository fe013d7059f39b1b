from typing import Dict, List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from termcode.dsl.renderer import system_digest
from termcode.exceptions import ParameterError, VerificationError
from termcode.ir.System import DomainSizes, System
from termcode.mixins.Persistable import Persistable
from termcode.semantics.counting import verify_witness
from termcode.semantics.Interpretation import Interpretation, table_shape


class TableModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    arity: int = Field(ge=0)
    values: List[int]


class WitnessModel(BaseModel):
    """Schema of a witness file"""

    model_config = ConfigDict(extra="forbid")

    sizes: Dict[str, int]
    tables: Dict[str, TableModel]
    count: int = Field(ge=0)
    system_digest: str = ""


class Witness(Persistable):
    """
    An interpretation together with the objective value it was found to reach.

    Attributes
    ----------
    interpretation
        Tables of every function symbol

    count
        Claimed solution count, or dispersion image size for dispersion systems

    system_digest
        Digest of the canonical rendering of the system the witness belongs to
    """

    interpretation: Interpretation
    count: int
    system_digest: str

    def __init__(
        self,
        interpretation: Interpretation,
        count: int,
        system_digest: str = "",
        arities: Optional[Dict[str, int]] = None,
    ):
        self.interpretation = interpretation
        self.count = count
        self.system_digest = system_digest
        self.arities = arities

    @classmethod
    def for_system(cls, system: System, interpretation: Interpretation, count: int) -> "Witness":
        return cls(interpretation.restricted_to(system), count, system_digest(system))

    def to_json_dict(self) -> dict:
        return WitnessModel(
            sizes=dict(self.interpretation.sizes),
            tables={
                name: TableModel(
                    arity=table.ndim, values=[int(value) for value in table.reshape(-1)]
                )
                for name, table in self.interpretation.tables.items()
            },
            count=self.count,
            system_digest=self.system_digest,
        ).model_dump()

    @classmethod
    def from_json_dict(cls, data: dict) -> "Witness":
        model = WitnessModel.model_validate(data)
        # Tables stay flat until a system gives them their shape
        tables = {name: np.asarray(table.values, dtype=np.int64) for name, table in model.tables.items()}
        return cls(
            Interpretation(model.sizes, tables),
            model.count,
            model.system_digest,
            {name: table.arity for name, table in model.tables.items()},
        )

    def bind(self, system: System) -> Interpretation:
        """
        Shapes the stored tables for a system and checks them
        """
        sizes = DomainSizes.for_system(system, self.interpretation.sizes)
        tables = {}
        for func in system.funcs:
            if func.name not in self.interpretation.tables:
                raise ParameterError(f"Witness has no table for '{func.name}'")
            if self.arities is not None and self.arities[func.name] != func.arity:
                raise ParameterError(
                    f"Witness table for '{func.name}' has arity {self.arities[func.name]}, "
                    f"expected {func.arity}"
                )
            shape = table_shape(func, sizes)
            values = self.interpretation.tables[func.name]
            if values.size != int(np.prod(shape, dtype=np.int64)):
                raise ParameterError(
                    f"Witness table for '{func.name}' has {values.size} entries, "
                    f"expected shape {shape}"
                )
            tables[func.name] = values.reshape(shape)

        return Interpretation.for_system(system, sizes, tables)

    def verify(self, system: System, claimed: Optional[int] = None) -> Interpretation:
        """
        Recounts the witness against a system.

        Raises
        ------
        VerificationError
            When the witness belongs to another system or misses the claimed value
        """
        expected_digest = system_digest(system)
        if self.system_digest and self.system_digest != expected_digest:
            raise VerificationError("Witness was produced for a different system")

        interpretation = self.bind(system)
        claimed = self.count if claimed is None else claimed
        if not verify_witness(system, interpretation, claimed):
            raise VerificationError(f"Witness does not reach the claimed value {claimed}")

        return interpretation
