"""
ABC and derivative classes for the worker layer.
Every pool returns results in input order, so outputs do not depend on the pool chosen.
"""

from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar
import os

from RQMC.core.Errors import ConfigurationError
from RQMC.logs.logging_config import get_logger

logger = get_logger(__name__)

THREADS_ENV = "RQMC_THREADS"

T = TypeVar("T")
R = TypeVar("R")


class WorkerPool(ABC):
    @abstractmethod
    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
        """
        Apply fn to every item and return the results in input order.
        """
        pass

    @property
    @abstractmethod
    def size(self) -> int:
        pass


class DirectPool(WorkerPool):
    """
    Runs everything inline on the calling thread.
    """

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
        return [fn(item) for item in items]

    @property
    def size(self) -> int:
        return 1

    def __repr__(self):
        return "<DirectPool>"


class ThreadPool(WorkerPool):
    """
    Fans work out over a ThreadPoolExecutor. numpy releases the GIL inside its kernels,
    so per-n pipelines overlap usefully.
    """

    def __init__(self, max_workers: int):
        if max_workers < 1:
            raise ConfigurationError("Worker count must be positive", data=max_workers)
        self.max_workers = max_workers

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
        items = list(items)
        logger.debug(f"Dispatching {len(items)} jobs over {self.max_workers} threads")
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            return list(executor.map(fn, items))

    @property
    def size(self) -> int:
        return self.max_workers

    def __repr__(self):
        return f"<ThreadPool workers={self.max_workers}>"


def get_pool(threads: int | None = None) -> WorkerPool:
    """
    Pick a pool: explicit thread count first, then RQMC_THREADS, else inline.

    Raises:
        ConfigurationError: RQMC_THREADS is set but not a positive integer
    """
    if threads is None:
        raw = os.environ.get(THREADS_ENV)
        if raw is None or raw.strip() == "":
            return DirectPool()
        try:
            threads = int(raw)
        except ValueError as e:
            raise ConfigurationError(
                f"{THREADS_ENV} must be a positive integer", data=raw
            ) from e
    if threads < 1:
        raise ConfigurationError(f"{THREADS_ENV} must be a positive integer", data=threads)
    if threads == 1:
        return DirectPool()
    return ThreadPool(threads)
