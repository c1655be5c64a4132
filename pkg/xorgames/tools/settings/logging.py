""" Logging configuration of the CLI

Records go to stderr: stdout carries the machine-readable output.
"""

import logging.config
from typing import Union


def logging_config(level: Union[int, str]) -> dict:
    """ dictConfig() for the given root level """
    return {
        'version': 1,
        'disable_existing_loggers': False,
        'formatters': {
            'cli': {
                'format': '%(asctime)s %(levelname)-7s %(name)s: %(message)s',
                'datefmt': '%H:%M:%S',
            },
        },
        'handlers': {
            'stderr': {
                'class': 'logging.StreamHandler',
                'formatter': 'cli',
                'stream': 'ext://sys.stderr',
            },
        },
        'root': {
            'level': level,
            'handlers': ['stderr'],
        },
        'loggers': {
            # Font lookup chatter at DEBUG
            'matplotlib': {'level': 'WARNING'},
        },
    }


def basicConfig(level: Union[int, str] = logging.INFO):
    """ Log to stderr at `level` """
    logging.config.dictConfig(logging_config(level))
