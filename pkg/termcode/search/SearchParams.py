from dataclasses import dataclass
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from termcode.constants import Objective, SearchMode
from termcode.exceptions import ParameterError
from termcode.semantics.Interpretation import Interpretation


class SearchParams(BaseModel):
    """
    Settings of the interpretation searches

    Attributes
    ----------
    mode
        Exhaustive enumeration or simulated annealing

    seed
        Base seed; annealing restart r uses seed + r

    restarts
        Independent annealing runs, the best result is kept

    steps
        Single-entry mutations per restart

    initial_temperature
        Starting temperature of the exponential acceptance rule

    cooling
        Geometric cooling factor applied after every step

    time_budget
        Wall-clock seconds per restart, unlimited when None

    threads
        Worker processes for exhaustive ranges and annealing restarts

    show_progress
        Whether to display tqdm progress bars
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    mode: SearchMode = SearchMode.EXHAUSTIVE
    seed: int = Field(default=0, ge=0, lt=2**64)
    restarts: int = Field(default=4, ge=1)
    steps: int = Field(default=20_000, ge=1)
    initial_temperature: float = Field(default=1.0, gt=0)
    cooling: float = 0.9995
    time_budget: Optional[float] = Field(default=None, gt=0)
    threads: int = Field(default=1, ge=1)
    show_progress: bool = False

    @field_validator("cooling")
    @classmethod
    def _check_cooling(cls, value: float) -> float:
        if not 0 < value < 1:
            raise ValueError("cooling must lie strictly between 0 and 1")
        return value

    @classmethod
    def build(cls, **settings) -> "SearchParams":
        """Validates settings, reporting problems as ParameterError"""
        try:
            return cls(**settings)
        except ValidationError as error:
            raise ParameterError(f"Invalid search parameters: {error}")


@dataclass
class SearchResult:
    """
    Attributes
    ----------
    best_count
        Best objective value found

    witness
        An interpretation reaching best_count

    exhausted
        True only when exhaustive search enumerated the whole space

    explored
        Interpretations enumerated, or annealing steps taken

    objective
        What was maximised
    """

    best_count: int
    witness: Interpretation
    exhausted: bool
    explored: int
    objective: Objective = Objective.SOLUTIONS
