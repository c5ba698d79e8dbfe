"""Logging configuration."""
import logging
import sys

from pythonjsonlogger import jsonlogger

from minorhost.core.config import settings

# Run parameters stamped on every record unless the call site sets them.
RUN_FIELDS = ("seed", "search_budget", "embedding_budget", "longest_path_cap")


class RunContextFilter(logging.Filter):
    """Attach the active run parameters so a log line can be replayed."""

    def filter(self, record: logging.LogRecord) -> bool:
        for name in RUN_FIELDS:
            if not hasattr(record, name):
                setattr(record, name, getattr(settings, name))
        return True


def setup_logging() -> None:
    """Configure application logging.

    Logs go to stderr; stdout carries line-delimited JSON reports.
    JSON records carry the run parameters in ``RUN_FIELDS``.
    """
    logger = logging.getLogger()
    logger.setLevel(getattr(logging, settings.log_level.upper()))
    logger.handlers.clear()

    handler = logging.StreamHandler(sys.stderr)

    if settings.log_format == "json":
        formatter: logging.Formatter = jsonlogger.JsonFormatter(
            "%(asctime)s %(name)s %(levelname)s %(message)s",
            rename_fields={"levelname": "level", "asctime": "timestamp"},
        )
        handler.addFilter(RunContextFilter())
    else:
        formatter = logging.Formatter(
            "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        )

    handler.setFormatter(formatter)
    logger.addHandler(handler)

    # Search libraries are chatty at DEBUG
    for logger_name in ["networkx", "hypothesis"]:
        logging.getLogger(logger_name).setLevel(logging.WARNING)


def get_logger(name: str) -> logging.Logger:
    """Get a logger instance."""
    return logging.getLogger(name)
