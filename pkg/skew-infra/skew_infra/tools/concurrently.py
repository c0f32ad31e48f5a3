import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, Hashable, List, Mapping, Optional, Tuple, Union

logger = logging.getLogger(__name__)

Job = Tuple  # (callable, *args)


def _safe_run(job: Job, job_key: Hashable, done_handler: Optional[Callable[[Hashable], None]]):
    call, *call_args = job
    try:
        return call(*call_args)
    except BaseException:
        logger.debug("Job %s failed while running %s", job_key, getattr(call, "__name__", call))
        raise
    finally:
        if done_handler:
            done_handler(job_key)


def run_concurrently(
    jobs: Union[List[Job], Tuple[Job, ...], Mapping[Hashable, Job]],
    done_handler: Optional[Callable[[Hashable], None]] = None,
    max_workers: int = 5,
    timeout: float = 2 ** 31,
) -> Dict[Hashable, Any]:
    """
    Run independent pure jobs on a thread pool and collect results by job key.
    Sequences are keyed by position. The first failing job re-raises in the caller.
    """
    keyed = dict(enumerate(jobs)) if isinstance(jobs, (list, tuple)) else dict(jobs)
    if not keyed:
        return {}
    with ThreadPoolExecutor(max_workers=max(1, min(max_workers, len(keyed)))) as executor:
        futures = {key: executor.submit(_safe_run, job, key, done_handler) for key, job in keyed.items()}
        return {key: future.result(timeout=timeout) for key, future in futures.items()}
