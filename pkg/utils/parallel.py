import multiprocessing
from typing import Callable, Iterable, List, Optional

from tqdm import tqdm

from config import DEFAULT_JOBS
from utils.logger import logger


def parallel_map(func: Callable, items: Iterable, jobs: Optional[int] = None,
                 progress: bool = False, desc: str = "Working") -> List:
    """
    Map func over items, preserving input order.
    jobs <= 1 runs in-process; otherwise a worker pool of that size.
    func must be a module-level callable so it can be pickled.
    progress draws a tqdm bar on stderr.
    """
    items = list(items)
    jobs = DEFAULT_JOBS if jobs is None else jobs

    if jobs <= 1 or len(items) < 2:
        iterator = tqdm(items, desc=desc, disable=not progress)
        return [func(item) for item in iterator]

    chunksize = max(1, len(items) // (jobs * 4))
    logger.debug(f"Dispatching {len(items)} items to {jobs} workers (chunksize {chunksize})")
    with multiprocessing.Pool(processes=jobs) as pool:
        results = pool.imap(func, items, chunksize)
        return list(tqdm(results, total=len(items), desc=desc, disable=not progress))
