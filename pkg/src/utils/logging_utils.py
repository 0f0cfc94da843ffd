"""
Logging configuration and utilities for the pattern algebra toolkit.
"""

import logging
import sys
from datetime import datetime
from functools import wraps
from typing import Any, Callable

from config.settings import get_settings


def setup_logger(name: str) -> logging.Logger:
    """
    Set up a logger with a stderr handler and an optional file handler.

    Args:
        name: The name of the logger, typically __name__

    Returns:
        Configured logger instance
    """
    settings = get_settings()
    logger = logging.getLogger(name)
    logger.setLevel(settings.LOG_LEVEL)

    if not logger.handlers:
        # stdout carries JSON artifacts
        handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
        if settings.LOG_DIR is not None:
            log_file = settings.LOG_DIR / f"{datetime.now().strftime('%Y-%m-%d')}.log"
            handlers.append(logging.FileHandler(log_file))

        formatter = logging.Formatter(settings.LOG_FORMAT)

        for handler in handlers:
            handler.setFormatter(formatter)
            handler.setLevel(settings.LOG_LEVEL)
            logger.addHandler(handler)
        logger.propagate = False

    return logger


def log_execution_time(logger: logging.Logger) -> Callable:
    """
    Decorator to log function execution time.

    Args:
        logger: Logger instance to use for logging

    Returns:
        Decorator function
    """

    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            start_time = datetime.now()
            try:
                result = func(*args, **kwargs)
                duration = (datetime.now() - start_time).total_seconds()
                logger.debug(
                    f"Function {func.__name__} executed in {duration:.2f} seconds"
                )
                return result
            except Exception as e:
                duration = (datetime.now() - start_time).total_seconds()
                logger.error(
                    "Function {} failed after {:.2f} seconds: {}".format(
                        func.__name__, duration, str(e)
                    )
                )
                raise

        return wrapper

    return decorator


def log_async_execution_time(logger: logging.Logger) -> Callable:
    """Coroutine flavour of log_execution_time."""

    def decorator(func: Callable) -> Callable:
        @wraps(func)
        async def wrapper(*args: Any, **kwargs: Any) -> Any:
            start_time = datetime.now()
            try:
                result = await func(*args, **kwargs)
                duration = (datetime.now() - start_time).total_seconds()
                logger.info(f"{func.__name__} finished in {duration:.2f} seconds")
                return result
            except Exception as e:
                duration = (datetime.now() - start_time).total_seconds()
                logger.error(
                    f"{func.__name__} failed after {duration:.2f} seconds: {str(e)}"
                )
                raise

        return wrapper

    return decorator
