import pytest

from RQMC.core.Errors import ConfigurationError
from RQMC.workers import WorkerPool, DirectPool, ThreadPool, get_pool
from RQMC.workers.WorkerPool import THREADS_ENV


def square(x: int) -> int:
    return x * x


@pytest.mark.parametrize("pool", [DirectPool(), ThreadPool(1), ThreadPool(4)])
def test_pools_preserve_order(pool: WorkerPool):
    items = list(range(50))
    assert pool.map(square, items) == [x * x for x in items]
    assert pool.map(square, iter(items)) == [x * x for x in items]


def test_pool_sizes():
    assert DirectPool().size == 1
    assert ThreadPool(3).size == 3
    with pytest.raises(ConfigurationError):
        ThreadPool(0)


def test_get_pool_explicit():
    assert isinstance(get_pool(1), DirectPool)
    pool = get_pool(4)
    assert isinstance(pool, ThreadPool) and pool.size == 4
    with pytest.raises(ConfigurationError):
        get_pool(0)


def test_get_pool_from_environment(monkeypatch):
    monkeypatch.delenv(THREADS_ENV, raising=False)
    assert isinstance(get_pool(), DirectPool)

    monkeypatch.setenv(THREADS_ENV, "3")
    assert get_pool().size == 3

    monkeypatch.setenv(THREADS_ENV, "1")
    assert isinstance(get_pool(), DirectPool)

    monkeypatch.setenv(THREADS_ENV, " ")
    assert isinstance(get_pool(), DirectPool)

    for bad in ("many", "0", "-2"):
        monkeypatch.setenv(THREADS_ENV, bad)
        with pytest.raises(ConfigurationError):
            get_pool()
