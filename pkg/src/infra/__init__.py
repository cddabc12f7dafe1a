"""
Infrastructure helpers shared by every module: logging setup.
"""

from .logger import setup_logging, set_console_level
