"""
Process-pool fan-out for catalogs and the validation suite.

Workers receive plain tuples (type names, 1-based Levi labels, limits) and
rebuild root systems and Weyl groups from the per-process caches, so only
small picklable values cross process boundaries. Results come back in task
order, whatever order the workers finish in.
"""

import logging
from multiprocessing import Pool
from typing import Callable, Iterable, List

from hessberg.errors import InputError
from hessberg.settings import build_settings

logger = logging.getLogger(__name__)


def run_tasks(worker: Callable, tasks: Iterable, settings=None, additional_settings=None) -> List:
    """
    Apply ``worker`` to every task.

    Args:
        worker: a module-level function (it must pickle)
        tasks: picklable task tuples
        settings: a dict from ``build_settings``; built from defaults if omitted
        additional_settings: overrides merged over ``settings``

    Returns:
        List of results in task order
    """
    settings = dict(settings or build_settings())
    if additional_settings:
        settings.update(additional_settings)
    jobs = int(settings['JOBS'])
    tasks = list(tasks)
    if jobs < 1:
        raise InputError(f"JOBS must be at least 1, got {jobs}")

    if jobs == 1 or len(tasks) <= 1:
        logger.info(f"Running {len(tasks)} tasks in-process")
        return [worker(task) for task in tasks]

    processes = min(jobs, len(tasks))
    logger.info(f"Running {len(tasks)} tasks on {processes} worker processes")
    with Pool(processes=processes) as pool:
        return pool.map(worker, tasks)
