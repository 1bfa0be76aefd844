import logging

from ..config.settings import settings
from .errors import ResourceLimitError

logger = logging.getLogger(__name__)


def ensure_within_budget(count: int, what: str) -> None:
    """Raise ResourceLimitError when count exceeds settings.MAX_TERMS."""
    limit = settings.MAX_TERMS
    if count > limit:
        logger.debug(f"Budget exceeded for {what}: {count} > {limit}")
        raise ResourceLimitError(
            f"{what} needs {count} intermediate terms, limit is {limit}"
        )
