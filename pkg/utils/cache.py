"""Thread-safe memoization for expensive exact computations."""

from typing import Dict, Hashable, Optional, Any, Callable
from collections import OrderedDict
from threading import Lock
from functools import wraps

from config.settings import MEMO_CACHE_SIZE

_MISSING = object()


class MemoCache:
    """Bounded, lock-guarded memo table with least-recently-used eviction."""

    def __init__(self, max_size: Optional[int] = MEMO_CACHE_SIZE):
        """
        Initialize memo cache.

        Args:
            max_size: Maximum number of entries (None for unlimited)
        """
        self.max_size = max_size
        self._cache: "OrderedDict[Hashable, Any]" = OrderedDict()
        self._lock = Lock()
        self._hits = 0
        self._misses = 0

    def get(self, key: Hashable, default: Any = None) -> Any:
        """
        Get value from cache.

        Args:
            key: Cache key
            default: Returned when the key is absent

        Returns:
            Cached value or default
        """
        with self._lock:
            if key in self._cache:
                self._hits += 1
                self._cache.move_to_end(key)
                return self._cache[key]
            self._misses += 1
            return default

    def set(self, key: Hashable, value: Any):
        """
        Store a value, evicting the least recently used entry when full.

        Args:
            key: Cache key
            value: Value to cache
        """
        with self._lock:
            self._cache[key] = value
            self._cache.move_to_end(key)
            if self.max_size and len(self._cache) > self.max_size:
                self._cache.popitem(last=False)

    def clear(self):
        """Clear all cache entries."""
        with self._lock:
            self._cache.clear()
            self._hits = 0
            self._misses = 0

    def __len__(self) -> int:
        with self._lock:
            return len(self._cache)

    def get_stats(self) -> Dict[str, Any]:
        """
        Get cache statistics.

        Returns:
            Dictionary with cache statistics
        """
        with self._lock:
            lookups = self._hits + self._misses
            return {
                'entries': len(self._cache),
                'hits': self._hits,
                'misses': self._misses,
                'hit_rate': self._hits / lookups if lookups > 0 else 0,
            }


def memoized(cache_instance: Optional[MemoCache] = None):
    """
    Decorator memoizing a function on its (hashable) positional and keyword arguments.

    Two threads racing on the same key may both compute; the stored value is
    the same either way since memoized functions are pure.

    Args:
        cache_instance: MemoCache instance to use (creates new if None)

    Example:
        @memoized()
        def weight_multiplicities(rs, weight):
            ...
    """
    def decorator(func: Callable) -> Callable:
        _cache = cache_instance or MemoCache()

        @wraps(func)
        def wrapper(*args, **kwargs):
            key = (args, tuple(sorted(kwargs.items())))
            result = _cache.get(key, _MISSING)
            if result is not _MISSING:
                return result
            result = func(*args, **kwargs)
            _cache.set(key, result)
            return result

        # Attach cache instance for manual control
        wrapper.cache = _cache
        return wrapper

    return decorator
