"""Logging configuration and utilities."""
import sys
from pathlib import Path
from loguru import logger
from config.settings import LOG_LEVEL, LOG_FILE


def setup_logger(level: str = LOG_LEVEL):
    """Configure logger for the application.

    Diagnostics go to stderr; stdout is kept for JSON/CSV documents.

    Args:
        level: Minimum level for the console sink

    Returns:
        Configured loguru logger
    """
    # Remove default handler
    logger.remove()

    # Console handler
    logger.add(
        sys.stderr,
        level=level,
        format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>",
        colorize=True,
    )

    # File handler, only on request
    if LOG_FILE:
        Path(LOG_FILE).parent.mkdir(parents=True, exist_ok=True)
        logger.add(
            LOG_FILE,
            level=level,
            format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}",
            rotation="50 MB",
            retention="30 days",
            compression="zip",
        )

    return logger


# Initialize logger
log = setup_logger()
