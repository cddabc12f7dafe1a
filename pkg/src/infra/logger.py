"""
Colored stderr logging shared by the logic and command modules.

Each level gets its own ANSI color: DEBUG green, INFO blue, WARNING yellow,
ERROR red and CRITICAL magenta.

Console output goes to stderr; the CLI prints its reports on stdout.
A rotating log file is added when LOG_TO_FILE is enabled in the settings.
"""

import logging
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional, Union
import os
import sys

# Setup main project directory path
try:
    MAIN_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), "../.."))
    sys.path.append(MAIN_DIR)
except (ImportError, OSError) as e:
    print(f"Failed to set up main directory path: {e}")
    sys.exit(1)

from src.helpers import get_settings

# Log level to ANSI color mapping
COLORS = {
    "DEBUG": "\033[92m",    # Green
    "INFO": "\033[94m",     # Blue
    "WARNING": "\033[93m",  # Yellow
    "ERROR": "\033[91m",    # Red
    "CRITICAL": "\033[95m", # Magenta
    "END": "\033[0m",       # Reset
}


class ColoredFormatter(logging.Formatter):
    """
    Formatter that colors the entire log line based on level.
    """
    def format(self, record):
        message = super().format(record)
        color = COLORS.get(record.levelname, "")
        return f"{color}{message}{COLORS['END']}"


def setup_logging(
    name: str = "torus_quotients",
    console_level: Optional[Union[int, str]] = None,
    log_to_file: Optional[bool] = None,
    log_dir: Optional[Path] = None,
    log_file: Optional[str] = None,
) -> logging.Logger:
    """
    Set up logging configuration with colored console output and optional rotating file logging.

    Args:
        name (str): Name of the logger.
        console_level (int | str): Console log level; defaults to LOG_LEVEL from settings.
        log_to_file (bool): Attach a rotating file handler; defaults to LOG_TO_FILE.
        log_dir (Path): Directory to store log files; defaults to LOG_DIR.
        log_file (str): Name of the log file; defaults to LOG_FILE.

    Returns:
        logging.Logger: Configured logger instance.
    """
    settings = get_settings()
    console_level = console_level if console_level is not None else settings.LOG_LEVEL
    log_to_file = settings.LOG_TO_FILE if log_to_file is None else log_to_file

    logger__ = logging.getLogger(name)
    logger__.setLevel(logging.DEBUG)

    # Always clear existing handlers to avoid duplicates and ensure formatter is applied
    if logger__.hasHandlers():
        logger__.handlers.clear()

    logger__.propagate = False

    formatter_str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(console_level)
    console_handler.setFormatter(ColoredFormatter(formatter_str))
    logger__.addHandler(console_handler)

    if log_to_file:
        directory = Path(log_dir or settings.LOG_DIR)
        directory.mkdir(parents=True, exist_ok=True)
        log_path = directory / (log_file or settings.LOG_FILE)
        file_handler = RotatingFileHandler(log_path, maxBytes=10_000_000, backupCount=5)
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(formatter_str))
        logger__.addHandler(file_handler)

    return logger__


def set_console_level(level: Union[int, str]) -> None:
    """Change the console level of every logger created by setup_logging."""
    for logger__ in logging.Logger.manager.loggerDict.values():
        if not isinstance(logger__, logging.Logger):
            continue
        for handler in logger__.handlers:
            if isinstance(handler, logging.StreamHandler) and not isinstance(handler, RotatingFileHandler):
                handler.setLevel(level)


if __name__ == "__main__":
    logger = setup_logging("torus_quotients.demo", console_level=logging.DEBUG)
    logger.debug("memo hit for key (3, (1, 2))")
    logger.info("tutte polynomial computed for 4 columns")
    logger.warning("deletion-contraction on 26 columns may be slow")
    logger.error("engines disagree on 5 columns")
    logger.critical("settings could not be loaded")
