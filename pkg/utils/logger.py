import logging
import os
from config import LOG_FILE, LOG_DIR, LOG_TO_FILE


def setup_logger():
    """
    Setup application logger with file and console handlers
    """
    # Create logger
    logger = logging.getLogger('QuiverFano')
    logger.setLevel(logging.DEBUG)

    # Prevent duplicate handlers
    if logger.handlers:
        return logger

    # Formatter
    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    # Console handler (stderr, stdout is reserved for JSON output)
    console_handler = logging.StreamHandler()
    console_handler.setLevel(logging.WARNING)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    # File handler
    if LOG_TO_FILE:
        try:
            os.makedirs(LOG_DIR, exist_ok=True)
            file_handler = logging.FileHandler(LOG_FILE, encoding='utf-8')
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)
        except OSError as e:
            logger.warning(f"Cannot open log file {LOG_FILE}, logging to console only: {e}")

    return logger


def set_console_level(level: int):
    """Change the level of the console handler only"""
    for handler in logger.handlers:
        if type(handler) is logging.StreamHandler:
            handler.setLevel(level)


# Initialize logger
logger = setup_logger()
