from contextlib import contextmanager
from typing import Any, Dict, Iterator
import logging
import time

from prometheus_client import REGISTRY, Counter, Gauge, Histogram, write_to_textfile

logger = logging.getLogger(__name__)

# Prometheus metrics
OPERATION_COUNTER = Counter(
    'monoideal_operations_total',
    'Total number of evaluated ideal operations',
    ['operation', 'status']
)

OPERATION_DURATION = Histogram(
    'monoideal_operation_duration_seconds',
    'Duration of ideal operations',
    ['operation']
)

RESULT_GENERATORS = Gauge(
    'monoideal_result_generators',
    'Minimal generator count of the last ideal-valued result',
    ['operation']
)


class OperationAnalytics:
    """Collects per-operation metrics for one session."""

    def __init__(self):
        self.counts: Dict[str, int] = {}
        self.failures: Dict[str, int] = {}
        self.durations: Dict[str, float] = {}

    @contextmanager
    def track(self, operation: str) -> Iterator["OperationAnalytics"]:
        """Time an operation and count it as success or error."""
        start = time.perf_counter()
        status = "success"
        try:
            yield self
        except Exception:
            status = "error"
            self.failures[operation] = self.failures.get(operation, 0) + 1
            raise
        finally:
            duration = time.perf_counter() - start
            OPERATION_COUNTER.labels(operation=operation, status=status).inc()
            OPERATION_DURATION.labels(operation=operation).observe(duration)
            self.counts[operation] = self.counts.get(operation, 0) + 1
            self.durations[operation] = self.durations.get(operation, 0.0) + duration

    def record_result(self, operation: str, value: Any) -> None:
        """Update the generator gauge when the result is an ideal."""
        gens = getattr(value, "gens", None)
        if gens is not None:
            RESULT_GENERATORS.labels(operation=operation).set(len(gens))

    def summary(self) -> Dict[str, Any]:
        return {
            "operations": dict(sorted(self.counts.items())),
            "failures": dict(sorted(self.failures.items())),
            "total": sum(self.counts.values()),
        }

    def export(self, path: str) -> None:
        """Write the metric registry in text exposition format."""
        write_to_textfile(path, REGISTRY)
        logger.info(f"Metrics written to {path}")
