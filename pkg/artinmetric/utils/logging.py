"""structlog setup: JSON or console lines on stderr, tagged with the running command."""

from __future__ import annotations

import logging
import sys
from typing import Any

import structlog


def configure_logging(level: str = "WARNING", fmt: str = "json") -> None:
    """Route stdlib logging and structlog to stderr.

    stdout is reserved for command output, which must be byte-stable, so
    nothing here writes to it.  Context bound with bind_invocation() is
    merged into every event.
    """
    log_level = getattr(logging, level.upper(), logging.WARNING)
    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=log_level, force=True)

    if fmt == "console":
        renderer: Any = structlog.dev.ConsoleRenderer(colors=False)
    else:
        renderer = structlog.processors.JSONRenderer(sort_keys=True)

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt="iso", utc=True),
            structlog.processors.format_exc_info,
            renderer,
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )


def bind_invocation(command: str, k: int, gens: str) -> None:
    """Tag every later event of this process with the CLI command and group."""
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(command=command, k=k, gens=gens)


def get_logger(name: str = "artinmetric") -> structlog.stdlib.BoundLogger:
    return structlog.get_logger(name)
