import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Mapping, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from termcode.constants import Objective, SearchMode
from termcode.exceptions import ParameterError
from termcode.ir.System import System
from termcode.search.SearchParams import SearchParams, SearchResult
from termcode.search.space import TableSpace
from termcode.semantics.counting import Evaluator
from termcode.semantics.Interpretation import Interpretation

logger = logging.getLogger(__name__)

MIN_TEMPERATURE = 1e-12
DEADLINE_CHECK_INTERVAL = 64

# (best score, best tables as a batch of one, steps taken)
RestartResult = Tuple[int, Dict[str, np.ndarray], int]


def _anneal_restart(
    system: System,
    sizes: Mapping[str, int],
    fixed: Optional[Mapping[str, object]],
    objective: Objective,
    coordinates: Optional[Sequence[str]],
    params: SearchParams,
    restart: int,
    initial: Optional[Interpretation],
) -> RestartResult:
    space = TableSpace(system, sizes, fixed)
    evaluator = Evaluator(system, space.sizes)
    rng = np.random.default_rng(params.seed + restart)

    if restart == 0 and initial is not None:
        state = space.batched(initial)
    else:
        state = space.random_tables(rng)
    cells = space.mutable_cells()
    ceiling = evaluator.upper_bound(objective, coordinates)

    score = int(evaluator.scores(state, 1, objective, coordinates)[0])
    best_score, best_state = score, {name: table.copy() for name, table in state.items()}
    temperature = params.initial_temperature
    deadline = None if params.time_budget is None else time.monotonic() + params.time_budget

    steps = 0
    for step in tqdm(
        range(params.steps), disable=not params.show_progress, desc=f"Restart {restart}"
    ):
        if not cells or best_score >= ceiling:
            break
        if deadline is not None and step % DEADLINE_CHECK_INTERVAL == 0 and time.monotonic() > deadline:
            break

        name, flat, radix = cells[int(rng.integers(len(cells)))]
        entries = state[name].reshape(-1)
        old = int(entries[flat])
        new = int(rng.integers(radix - 1))
        if new >= old:
            new += 1
        entries[flat] = new

        candidate = int(evaluator.scores(state, 1, objective, coordinates)[0])
        delta = candidate - score
        if delta >= 0 or rng.random() < math.exp(delta / temperature):
            score = candidate
            if score > best_score:
                best_score = score
                best_state = {key: table.copy() for key, table in state.items()}
        else:
            entries[flat] = old

        temperature = max(temperature * params.cooling, MIN_TEMPERATURE)
        steps += 1

    logger.debug("restart %d: best %d after %d steps", restart, best_score, steps)
    return best_score, best_state, steps


def anneal_max(
    system: System,
    sizes: Mapping[str, int],
    params: Optional[SearchParams] = None,
    fixed: Optional[Mapping[str, object]] = None,
    objective: Objective = Objective.SOLUTIONS,
    coordinates: Optional[Sequence[str]] = None,
    initial: Optional[Interpretation] = None,
) -> SearchResult:
    """
    Simulated annealing over interpretations.

    A move rewrites one table entry of one symbol; worse moves are accepted with probability
    exp(delta / T) and T cools geometrically. Restart r is seeded with seed + r and restart 0
    starts from the initial interpretation when one is given. The best interpretation over all
    restarts is returned, ties going to the earliest restart.
    """
    params = params or SearchParams(mode=SearchMode.ANNEAL)
    if objective == Objective.DISPERSION and not system.outputs:
        raise ParameterError("Dispersion search needs output terms")

    space = TableSpace(system, sizes, fixed)
    if initial is not None:
        initial.validate(system)

    arguments = [
        (system, space.sizes, fixed, objective, coordinates, params, restart, initial)
        for restart in range(params.restarts)
    ]
    if params.threads > 1 and params.restarts > 1:
        with ProcessPoolExecutor(max_workers=min(params.threads, params.restarts)) as executor:
            results = list(executor.map(_anneal_restart, *zip(*arguments)))
    else:
        results = [_anneal_restart(*argument) for argument in arguments]

    best_score, best_state, _ = max(results, key=lambda result: result[0])
    explored = sum(result[2] for result in results)
    logger.info("annealing: best %s = %d after %d steps", objective.value, best_score, explored)

    return SearchResult(
        best_count=best_score,
        witness=space.unbatch(best_state),
        exhausted=False,
        explored=explored,
        objective=objective,
    )
