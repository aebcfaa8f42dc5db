"""Simple logging for starfact."""
import logging
import os


def setup_logger(name="starfact", level=logging.INFO, log_file="logs/starfact.log"):
    """Set up simple logger."""
    logger = logging.getLogger(name)

    if logger.handlers:
        return logger

    # Create logs directory
    log_dir = os.path.dirname(log_file)
    if log_dir:
        os.makedirs(log_dir, exist_ok=True)

    # File logging only
    handler = logging.FileHandler(log_file)
    handler.setFormatter(logging.Formatter('%(asctime)s - %(name)s - %(message)s'))

    logger.addHandler(handler)
    logger.setLevel(level)

    return logger


def get_logger(name="starfact"):
    """Get logger."""
    return logging.getLogger(name)
