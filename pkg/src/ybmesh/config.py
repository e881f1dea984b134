import os

DEFAULT_WORK_LIMIT = 10**9


def work_limit():
    """Budget of elementary table lookups; ``YBMESH_WORK_LIMIT`` overrides it."""
    raw = os.environ.get("YBMESH_WORK_LIMIT")
    if raw:
        return int(raw)
    return DEFAULT_WORK_LIMIT


def require_budget(needed, limit=None):
    from .errors import WorkLimitExceeded

    limit = work_limit() if limit is None else limit
    if needed > limit:
        raise WorkLimitExceeded(needed, limit)
