import os

from .errors import SizeLimitExceeded


def max_order(default: int) -> int:
    """Size guard; QLAB_MAX_ORDER raises (never lowers) the built-in default."""
    raw = os.environ.get("QLAB_MAX_ORDER")
    if raw:
        try:
            return max(default, int(raw))
        except ValueError:
            pass
    return default


def guard(n: int, default: int, what: str, override: bool = False) -> None:
    if not override and n > max_order(default):
        raise SizeLimitExceeded(f"{what}: order {n} exceeds limit {max_order(default)}")
