#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Logging configuration for ZicGdof
"""

import logging
import logging.handlers
import os
import sys

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def configure_logging(level="INFO", log_file=None):
    """Configure the root logger for ZicGdof

    Console output goes to stderr so that artifacts written to stdout stay clean.

    Args:
        level (str or int): Log level for the console handler
        log_file (str): Optional path of a rotating log file (always DEBUG)

    Returns:
        logging.Logger: the root logger
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.INFO

    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG if log_file else level)

    # Replace handlers from earlier calls
    for handler in list(root_logger.handlers):
        if getattr(handler, "_zicgdof", False):
            root_logger.removeHandler(handler)
            handler.close()

    formatter = logging.Formatter(LOG_FORMAT)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    console_handler._zicgdof = True
    root_logger.addHandler(console_handler)

    if log_file:
        log_dir = os.path.dirname(os.path.abspath(log_file))
        os.makedirs(log_dir, exist_ok=True)
        file_handler = logging.handlers.RotatingFileHandler(
            log_file,
            maxBytes=5*1024*1024,
            backupCount=5,
            encoding='utf-8'
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(formatter)
        file_handler._zicgdof = True
        root_logger.addHandler(file_handler)

    # Exact region arithmetic logs every intersection at DEBUG
    logging.getLogger("ZicGdof.Region").setLevel(logging.INFO)

    return root_logger
