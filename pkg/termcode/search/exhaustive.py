import logging
from concurrent.futures import ProcessPoolExecutor
from typing import List, Mapping, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from termcode.constants import Objective
from termcode.exceptions import BudgetError, ParameterError
from termcode.ir.System import System
from termcode.search.SearchParams import SearchParams, SearchResult
from termcode.search.space import TableSpace
from termcode.semantics.counting import Evaluator
from termcode.semantics.Interpretation import Interpretation
from termcode.utilities.system import get_budget

logger = logging.getLogger(__name__)

# (best score, index of its first occurrence, interpretations enumerated)
ScanResult = Tuple[int, int, int]


def split_range(size: int, parts: int) -> List[Tuple[int, int]]:
    """Splits 0..size-1 into at most parts contiguous, non-empty ranges"""
    parts = max(1, min(parts, size))
    step, remainder = divmod(size, parts)
    ranges = []
    start = 0
    for part in range(parts):
        stop = start + step + (1 if part < remainder else 0)
        ranges.append((start, stop))
        start = stop
    return ranges


def _scan_range(
    system: System,
    sizes: Mapping[str, int],
    fixed: Optional[Mapping[str, object]],
    objective: Objective,
    coordinates: Optional[Sequence[str]],
    start: int,
    stop: int,
    target: Optional[int],
    show_progress: bool = False,
) -> ScanResult:
    space = TableSpace(system, sizes, fixed)
    evaluator = Evaluator(system, space.sizes)
    batch = evaluator.batch_size()

    best_score, best_index, explored = -1, start, 0
    with tqdm(total=stop - start, disable=not show_progress, desc="Enumerating") as progress:
        for chunk_start in range(start, stop, batch):
            indices = np.arange(chunk_start, min(stop, chunk_start + batch), dtype=np.int64)
            tables = space.decode(indices)
            scores = evaluator.scores(tables, len(indices), objective, coordinates)
            position = int(np.argmax(scores))
            if scores[position] > best_score:
                best_score = int(scores[position])
                best_index = int(indices[position])
            explored += len(indices)
            progress.update(len(indices))
            if target is not None and best_score >= target:
                break

    return best_score, best_index, explored


def _reduce(results: Sequence[ScanResult]) -> ScanResult:
    """Highest score, ties going to the lowest index"""
    best_score, best_index, _ = max(results, key=lambda result: (result[0], -result[1]))
    return best_score, best_index, sum(result[2] for result in results)


def exhaustive_max(
    system: System,
    sizes: Mapping[str, int],
    params: Optional[SearchParams] = None,
    fixed: Optional[Mapping[str, object]] = None,
    objective: Objective = Objective.SOLUTIONS,
    coordinates: Optional[Sequence[str]] = None,
    target: Optional[int] = None,
) -> SearchResult:
    """
    Enumerates every interpretation and returns the maximum of the objective.

    Parameters
    ----------
    system
        A valid system

    sizes
        Domain size per sort

    params
        Search settings; threads > 1 splits the space into contiguous ranges over processes

    fixed
        Pinned tables by symbol, excluded from enumeration

    objective
        Solutions, dispersion image or projection count

    coordinates
        Projection variables for Objective.PROJECTION

    target
        Stop as soon as this value is reached

    Returns
    -------
    The maximum with the lexicographically least witness reaching it

    Raises
    ------
    BudgetError
        When the enumeration exceeds the configured budget
    """
    params = params or SearchParams()
    if objective == Objective.DISPERSION and not system.outputs:
        raise ParameterError("Dispersion search needs output terms")

    space = TableSpace(system, sizes, fixed)
    budget = get_budget()
    if space.work() > budget:
        raise BudgetError(
            f"Exhaustive search would enumerate {space.size} interpretations of {space.cells} "
            f"entries each, over the budget of {budget} entries; use --mode anneal"
        )
    logger.debug(
        "enumerating %d interpretations (%d free entries, %d pinned symbols)",
        space.size,
        space.cells,
        len(space.fixed),
    )

    ranges = split_range(space.size, params.threads)
    if len(ranges) == 1:
        best_score, best_index, explored = _scan_range(
            system, space.sizes, fixed, objective, coordinates, 0, space.size, target,
            params.show_progress,
        )
    else:
        with ProcessPoolExecutor(max_workers=len(ranges)) as executor:
            futures = [
                executor.submit(
                    _scan_range, system, space.sizes, fixed, objective, coordinates, start, stop, target
                )
                for start, stop in ranges
            ]
            best_score, best_index, explored = _reduce([future.result() for future in futures])

    witness = space.interpretation_at(best_index)
    logger.info("exhaustive search: best %s = %d", objective.value, best_score)

    return SearchResult(
        best_count=best_score,
        witness=witness,
        exhausted=explored == space.size,
        explored=explored,
        objective=objective,
    )


def all_maximisers(
    system: System,
    sizes: Mapping[str, int],
    fixed: Optional[Mapping[str, object]] = None,
    objective: Objective = Objective.SOLUTIONS,
    coordinates: Optional[Sequence[str]] = None,
) -> Tuple[int, List[Interpretation]]:
    """
    Enumerates the space and keeps every interpretation reaching the maximum, in enumeration
    order. Single process only.

    Raises
    ------
    BudgetError
        When the enumeration exceeds the configured budget
    """
    space = TableSpace(system, sizes, fixed)
    budget = get_budget()
    if space.work() > budget:
        raise BudgetError(f"Enumerating {space.size} interpretations exceeds the budget of {budget}")

    evaluator = Evaluator(system, space.sizes)
    batch = evaluator.batch_size()
    best_score, winners = -1, []
    for start in range(0, space.size, batch):
        indices = np.arange(start, min(space.size, start + batch), dtype=np.int64)
        tables = space.decode(indices)
        scores = evaluator.scores(tables, len(indices), objective, coordinates)
        top = int(scores.max())
        if top < best_score:
            continue
        if top > best_score:
            best_score, winners = top, []
        winners.extend(int(indices[row]) for row in np.flatnonzero(scores == top))

    return best_score, [space.interpretation_at(index) for index in winners]
