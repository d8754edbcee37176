"""
Logging Configuration

Structured logging for the randomizer with console or JSON rendering.
Log records go to stderr so that CSV and edge-list output on stdout stays clean.
"""

import logging
import sys
from typing import Optional

import structlog

_configured = False


def configure_logging(
    level: str = "INFO",
    log_format: str = "console",
    log_file: Optional[str] = None
) -> None:
    """
    Set up structlog on top of the stdlib logging backend

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_format: Renderer type ("console" or "json")
        log_file: Optional log file path; the file always receives JSON
    """
    global _configured

    numeric_level = getattr(logging, level.upper(), logging.INFO)

    json_renderer = structlog.processors.JSONRenderer(sort_keys=True)
    if log_format == "json":
        console_chain = [structlog.processors.format_exc_info, json_renderer]
    else:
        console_chain = [structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty())]

    shared_processors = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.processors.TimeStamper(fmt="iso", utc=True),
        structlog.processors.StackInfoRenderer(),
    ]

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(structlog.stdlib.ProcessorFormatter(
        foreign_pre_chain=shared_processors,
        processors=[
            structlog.stdlib.ProcessorFormatter.remove_processors_meta,
            *console_chain,
        ],
    ))
    handlers = [console_handler]

    if log_file:
        try:
            file_handler = logging.FileHandler(log_file)
            file_handler.setFormatter(structlog.stdlib.ProcessorFormatter(
                foreign_pre_chain=shared_processors,
                processors=[
                    structlog.stdlib.ProcessorFormatter.remove_processors_meta,
                    structlog.processors.dict_tracebacks,
                    json_renderer,
                ],
            ))
            handlers.append(file_handler)
        except OSError as e:
            print(f"Could not create log file handler: {e}", file=sys.stderr)

    root = logging.getLogger()
    root.handlers = handlers
    root.setLevel(numeric_level)

    structlog.configure(
        processors=[structlog.stdlib.filter_by_level] + shared_processors + [
            structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )
    _configured = True


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """
    Get a logger, configuring logging from the app config on first use

    Args:
        name: Logger name

    Returns:
        Bound structlog logger
    """
    if not _configured:
        from config.randomizer_config import get_config

        observability = get_config().observability
        configure_logging(
            observability.log_level,
            observability.log_format,
            observability.log_file,
        )
    return structlog.stdlib.get_logger(name)
