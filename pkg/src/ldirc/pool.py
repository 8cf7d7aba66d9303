import logging
from concurrent.futures import Executor, ProcessPoolExecutor
from contextlib import contextmanager
from typing import Callable, Generator, Iterable, List, Optional, TypeVar

logger = logging.getLogger("ldirc.pool")


class PoolError(Exception):
    """Sweep pool related errors."""

    pass


class ClosedPool(PoolError):
    """Raised, when the sweep pool is closed."""

    pass


T = TypeVar("T")
R = TypeVar("R")


class SweepPool:
    """
    A worker pool for evaluating sweep grid points.

    :param int workers: the number of worker processes. With 0 the items
                are evaluated one after the other in the calling process.
    :param int chunksize: the number of items sent to a worker at once.
    :raises ValueError: when the workers is negative or the chunksize is
        less than one.
    """

    def __init__(self, workers: int = 0, chunksize: int = 1) -> None:
        """Init method."""
        if workers < 0:
            raise ValueError("The workers must be non-negative.")
        if chunksize < 1:
            raise ValueError("The chunksize must be positive.")
        self._workers = workers
        self._chunksize = chunksize
        self._executor: Optional[Executor] = None
        self._closed = True

    def open(self) -> None:
        """ Open the pool by starting the worker processes. """
        if self._workers and self._executor is None:
            self._executor = ProcessPoolExecutor(max_workers=self._workers)
        self._closed = False

    def map(self, func: Callable[[T], R], items: Iterable[T]) -> List[R]:
        """
        Apply `func` to every item and collect the results in order.

        :param func: a picklable, module-level function.
        :param items: the items.
        :raises ClosedPool: when the method is called on a closed pool.
        :return: the results.
        """
        if self._closed:
            raise ClosedPool("The pool is closed.")
        if self._executor is None:
            return [func(item) for item in items]
        return list(self._executor.map(func, items, chunksize=self._chunksize))

    def close(self) -> None:
        """ Close the pool and stop its workers. """
        if self._executor is not None:
            try:
                self._executor.shutdown(wait=True)
            except Exception as exc:
                logger.warning(
                    f"Exception is raised during shutting down workers: {exc}"
                )
        self._executor = None
        self._closed = True

    @contextmanager
    def spawn(self) -> Generator["SweepPool", None, None]:
        """
        Context manager method that opens the pool if it hasn't been opened
        before and closes it on exit.
        """
        opened = self._closed
        try:
            if opened:
                self.open()
            yield self
        finally:
            if opened:
                self.close()

    @property
    def closed(self) -> bool:
        """
        Read-only property that will be True when the pool has been
        closed.
        """
        return self._closed

    @property
    def workers(self) -> int:
        """The number of worker processes."""
        return self._workers

    @workers.setter
    def workers(self, val: int) -> None:
        if val < 0:
            raise ValueError("The workers must be non-negative.")
        if not self._closed:
            raise PoolError("The workers cannot be changed on an open pool.")
        self._workers = val
