# -*- coding: utf-8 -*-
import logging
import sys
from typing import *

LOGGER_NAME = "openspectral"
CONSOLE_FORMAT = "[\033[032m%(asctime)s\033[0m %(levelname)s] %(module)s %(message)s"
FILE_FORMAT = "[%(asctime)s %(levelname)s] %(module)s %(message)s"


def _level(level) -> int:
    if isinstance(level, str):
        name = level.upper()
        if not isinstance(getattr(logging, name, None), int):
            raise ValueError("'{}' is not a valid log level".format(level))
        return getattr(logging, name)
    return level


def init_logger(
    log_file: Optional[str] = None,
    log_file_level=logging.NOTSET,
    log_level=logging.INFO,
):
    """
    (Re)configure the package logger. Console output goes to stderr so that
    tables written to stdout stay machine readable; the optional log file gets
    the same records without colour codes.

    Args:
        log_file (:obj:`str`, optional): also append records to this file.
        log_file_level (optional): level name or number for the file handler.
        log_level (optional): level name or number for the logger.
    """
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(_level(log_level))

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(logging.Formatter(CONSOLE_FORMAT))
    logger.handlers = [console_handler]

    if log_file:
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setLevel(_level(log_file_level))
        file_handler.setFormatter(logging.Formatter(FILE_FORMAT))
        logger.addHandler(file_handler)
    return logger

logger = init_logger()
