"""
Tracing Support

Lightweight spans for experiment and CLI operations.
Tracks nesting and timing; durations feed the operation histogram.
"""

import functools
import time
import uuid
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Any, Callable, Dict, Iterator, Optional

from observability.logger import get_logger
from observability.metrics import observe_operation

logger = get_logger(__name__)


class Span:
    """A single timed operation"""

    def __init__(self, name: str, parent: Optional["Span"] = None):
        self.name = name
        self.parent = parent
        self.span_id = uuid.uuid4().hex[:8]
        self.trace_id = parent.trace_id if parent else uuid.uuid4().hex[:16]
        self.attributes: Dict[str, Any] = {}
        self.start_time = time.perf_counter()
        self.duration: Optional[float] = None
        self.status = "started"

    def add_attribute(self, key: str, value: Any) -> None:
        """Attach a key/value pair reported when the span ends"""
        self.attributes[key] = value

    def end(self, status: str = "completed", error: Optional[str] = None) -> None:
        """Close the span and log it"""
        self.duration = time.perf_counter() - self.start_time
        self.status = status
        observe_operation(self.name, self.duration)

        fields = {
            "trace_id": self.trace_id,
            "span_id": self.span_id,
            "parent_span_id": self.parent.span_id if self.parent else None,
            "duration_ms": round(self.duration * 1000, 2),
            **self.attributes,
        }
        if error is None:
            logger.info("span_completed", span=self.name, **fields)
        else:
            logger.error("span_failed", span=self.name, error=error, **fields)


_current_span: ContextVar[Optional[Span]] = ContextVar("current_span", default=None)


@contextmanager
def trace_context(name: str, **attributes: Any) -> Iterator[Span]:
    """
    Context manager for tracing operations

    Usage:
        with trace_context("run_sweep", family="er") as span:
            span.add_attribute("rows", 9)
    """
    span = Span(name, _current_span.get())
    for key, value in attributes.items():
        span.add_attribute(key, value)

    token = _current_span.set(span)
    try:
        yield span
        span.end()
    except Exception as e:
        span.end(status="failed", error=str(e))
        raise
    finally:
        _current_span.reset(token)


def trace_operation(operation_name: str) -> Callable:
    """
    Decorator for tracing a function call as one span

    Usage:
        @trace_operation("run_compare")
        def run_compare(...):
            ...
    """
    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            with trace_context(operation_name):
                return func(*args, **kwargs)
        return wrapper
    return decorator
