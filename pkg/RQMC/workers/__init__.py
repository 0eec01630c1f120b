from RQMC.workers.WorkerPool import WorkerPool, DirectPool, ThreadPool, get_pool

__all__ = ["WorkerPool", "DirectPool", "ThreadPool", "get_pool"]
