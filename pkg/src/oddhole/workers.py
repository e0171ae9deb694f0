import logging
from typing import *

from tqdm import tqdm

try:
    import ray
except ImportError:
    ray = None


def chunked(items: Sequence[Any], parts: int) -> List[List[Any]]:
    """Round-robin split into at most `parts` non-empty chunks."""
    parts = max(1, min(parts, len(items)))
    return [list(items[i::parts]) for i in range(parts)] if items else []


def map_partitions(fn: Callable, partitions: Iterable[tuple], workers: int = 1,
                   desc: Optional[str] = None, progress: bool = False) -> List[Any]:
    """
    Apply fn(*partition) to every partition, fanning out over ray tasks when
    workers > 1 and ray is importable. Results come back in partition order,
    so any reduction over them stays deterministic.
    """
    partitions = list(partitions)
    if workers > 1 and len(partitions) > 1:
        if ray is None:
            logging.warning("ray is not installed: running partitions sequentially")
        else:
            if not ray.is_initialized():
                ray.init(ignore_reinit_error=True, num_cpus=workers, log_to_driver=False)
            remote_fn = ray.remote(fn)
            logging.debug(f"dispatching {len(partitions)} partitions of {desc or fn.__name__} to ray")
            return ray.get([remote_fn.remote(*part) for part in partitions])
    return [fn(*part) for part in tqdm(partitions, desc=desc, disable=not progress)]
