"""Bounded memo tables shared by the property deciders.

Verdicts are memoized on canonical forms, so isomorphic queries (which the
restriction/link enumeration produces in bulk) are answered once.  The tables
are plain dicts with a size cap; when a table overflows, the oldest half of
its entries is dropped (dict order is insertion order).  Eviction only ever
costs recomputation, never changes a verdict.

The cap is read from ``SHELLABILITY_CACHE_SIZE`` once at import; set it
before importing the package to resize.
"""

from __future__ import annotations

import os

_DEFAULT_LIMIT = 1_000_000


def _limit_from_env() -> int:
    raw = os.environ.get("SHELLABILITY_CACHE_SIZE", "")
    try:
        value = int(raw)
    except ValueError:
        return _DEFAULT_LIMIT
    return max(value, 1024) if raw else _DEFAULT_LIMIT


CACHE_LIMIT = _limit_from_env()

_REGISTRY: list[dict] = []


def new_cache() -> dict:
    table: dict = {}
    _REGISTRY.append(table)
    return table


def trim(table: dict) -> None:
    """Drop the oldest half of an over-full table."""
    if len(table) < CACHE_LIMIT:
        return
    drop = len(table) // 2
    for key in list(table.keys())[:drop]:
        del table[key]


def clear_all_caches() -> None:
    for table in _REGISTRY:
        table.clear()
