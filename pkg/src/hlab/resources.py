"""Resource ceilings for the larger linear-algebra jobs.

``HLAB_RESOURCE_MB`` caps a crude memory estimate (roughly 200 bytes per
stored sparse entry or basis element).  The estimate is coarse on purpose: it
only has to keep a runaway truncation degree from eating the machine.
"""

from __future__ import annotations

import os

from .errors import ResourceLimitError

BYTES_PER_ITEM = 200
DEFAULT_RESOURCE_MB = 2048


def resource_mb() -> int:
    raw = os.environ.get("HLAB_RESOURCE_MB")
    if raw is None:
        return DEFAULT_RESOURCE_MB
    try:
        value = int(raw)
    except ValueError:
        raise ResourceLimitError(f"HLAB_RESOURCE_MB={raw!r} is not an integer") from None
    if value <= 0:
        raise ResourceLimitError("HLAB_RESOURCE_MB must be positive")
    return value


def max_items() -> int:
    return resource_mb() * 1024 * 1024 // BYTES_PER_ITEM


def require(items: int, what: str) -> None:
    """Raise if ``items`` stored objects would exceed the ceiling."""
    limit = max_items()
    if items > limit:
        raise ResourceLimitError(
            f"{what} needs ~{items} items, ceiling is {limit} "
            f"(HLAB_RESOURCE_MB={resource_mb()})")
