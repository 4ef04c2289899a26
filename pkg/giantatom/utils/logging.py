# Standard Library
import logging
import time
from datetime import timedelta

PACKAGE = "giantatom"

LEVELS = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
}


class ElapsedFormatter(logging.Formatter):
    """Prefixes each record with the time since the handler was installed."""

    def __init__(self):
        super().__init__()
        self.start_time = time.time()

    def format(self, record: logging.LogRecord) -> str:
        elapsed = timedelta(seconds=record.created - self.start_time)
        message = f"{elapsed} - {record.levelname.lower()} - {record.name} - {record.getMessage()}"
        if record.exc_info:
            message += "\n" + self.formatException(record.exc_info)
        return message


def get_logger(name: str) -> logging.Logger:
    """Logger under the package namespace, scripts run as __main__ included."""
    if not name.startswith(PACKAGE):
        name = f"{PACKAGE}.{name}"
    return logging.getLogger(name)


def set_logging_level(level: str) -> None:
    """Routes package records to stderr at the given level."""
    if level not in LEVELS:
        raise ValueError(f"logging level must be one of {list(LEVELS)}, got {level!r}")
    root = logging.getLogger(PACKAGE)
    root.setLevel(LEVELS[level])
    if not any(isinstance(h.formatter, ElapsedFormatter) for h in root.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(ElapsedFormatter())
        root.addHandler(handler)
    root.propagate = False
