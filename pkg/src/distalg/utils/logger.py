"""
Logging for the distribution kernel: handler setup for entry points and a
component logger for kernel modules
"""

import logging
import sys
from pathlib import Path
from typing import IO, List, Optional

DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _handlers(
    stream: Optional[IO[str]], log_file: Optional[str]
) -> List[logging.Handler]:
    handlers: List[logging.Handler] = [logging.StreamHandler(stream or sys.stderr)]
    if log_file:
        path = Path(log_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(path))
    return handlers


def setup_logger(
    name: str,
    log_file: Optional[str] = None,
    level: int = logging.INFO,
    format_string: Optional[str] = None,
    stream: Optional[IO[str]] = None,
) -> logging.Logger:
    """Configure ``name`` to log at ``level`` to a stream and optionally a file.

    Calling it again replaces the handlers from the previous call, so the
    logger always writes to the stream passed last (stderr by default).
    """
    logger = logging.getLogger(name)
    logger.setLevel(level)
    for old in list(logger.handlers):
        logger.removeHandler(old)
        old.close()

    formatter = logging.Formatter(format_string or DEFAULT_FORMAT)
    for handler in _handlers(stream, log_file):
        handler.setLevel(level)
        handler.setFormatter(formatter)
        logger.addHandler(handler)
    return logger


class KernelLogger:
    """Component logger for kernel modules.

    Kernel modules only emit records; handlers are attached by the CLI (or by
    whoever embeds the kernel), so importing the package never prints.
    """

    def __init__(self, component: str):
        self.component = component
        self.logger = logging.getLogger(f"distalg.{component}")

    def _emit(self, level: int, message: str, kwargs) -> None:
        if self.logger.isEnabledFor(level):
            self.logger.log(level, f"[{self.component}] {message}", extra=kwargs)

    def info(self, message: str, **kwargs):
        self._emit(logging.INFO, message, kwargs)

    def warning(self, message: str, **kwargs):
        self._emit(logging.WARNING, message, kwargs)

    def debug(self, message: str, **kwargs):
        self._emit(logging.DEBUG, message, kwargs)
