"""Size guards for operations that enumerate subsets of the ground set."""

from src.utils.config_loader import HARD_MAX_N, get_settings
from src.utils.errors import SizeGuardError

_override = None


def set_max_n_override(limit):
    """Replaces every guard with `limit` for this process (never above the hard ceiling)."""
    global _override
    if limit is None:
        _override = None
        return
    if limit < 0:
        raise ValueError("--max-n must be non-negative")
    _override = min(int(limit), HARD_MAX_N)


def limit_for(guard):
    settings = get_settings()
    # Row counts are not a subset-enumeration size.
    if guard == 'matrix_max_rows':
        return settings.matrix_max_rows
    if _override is not None:
        return _override
    return min(getattr(settings, guard), HARD_MAX_N)


def check_size(size, guard, operation):
    limit = limit_for(guard)
    if size > limit:
        raise SizeGuardError(guard, limit, size, operation)
