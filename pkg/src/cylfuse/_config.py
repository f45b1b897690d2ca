"""Environment switches shared by the package.

``CYLFUSE_DISABLE_NUMBA=1`` forces the pure-numpy kernels.
``CYLFUSE_MAX_CELLS`` caps the size of enumerations (cells of a skew or
cylindric shape) before any search starts.
"""
import os

_TRUE = {"1", "true", "yes", "on"}


def numba_disabled() -> bool:
    return os.environ.get("CYLFUSE_DISABLE_NUMBA", "").strip().lower() in _TRUE


def max_cells() -> int:
    raw = os.environ.get("CYLFUSE_MAX_CELLS", "")
    try:
        return int(raw) if raw.strip() else 64
    except ValueError:
        return 64


class EnumerationTooLarge(RuntimeError):
    """Raised when a requested enumeration exceeds ``CYLFUSE_MAX_CELLS``."""


def check_cells(count: int, what: str = "shape") -> None:
    limit = max_cells()
    if count > limit:
        raise EnumerationTooLarge(
            f"{what} has {count} cells, above CYLFUSE_MAX_CELLS={limit}"
        )
