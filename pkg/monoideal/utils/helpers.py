import json
import logging
from functools import wraps
from typing import Any, Dict, Optional

from ..config.settings import settings
from ..core.errors import MonoidealError

logger = logging.getLogger(__name__)


def setup_logging(level: Optional[str] = None) -> None:
    """Configure root logging from settings."""
    logging.basicConfig(
        level=getattr(logging, (level or settings.LOG_LEVEL).upper()),
        format=settings.LOG_FORMAT,
        force=True,
    )


def cache_result(maxsize: int = 4096):
    """Decorator for memoizing functions of hashable arguments."""
    def decorator(func):
        cache: Dict[Any, Any] = {}

        @wraps(func)
        def wrapper(*args):
            if args in cache:
                return cache[args]
            result = func(*args)
            if len(cache) >= maxsize:
                cache.pop(next(iter(cache)))
            cache[args] = result
            return result

        wrapper.cache_clear = cache.clear
        return wrapper
    return decorator


def dump_json(data: Any) -> str:
    """Canonical JSON: sorted keys, compact separators."""
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def format_error(error: Exception) -> Dict[str, Any]:
    """Format error for CLI output."""
    payload = {
        "error": str(error),
        "type": error.__class__.__name__,
        "code": "internal-error",
        "expression": None,
    }
    if isinstance(error, MonoidealError):
        payload["error"] = error.message
        payload["code"] = error.code
        payload["expression"] = error.expression
    return payload
