""" Helpers for the CLI configuration

Example:
    from xorgames.tools.settings import logging

    logging.basicConfig(level='DEBUG')
"""

from . import logging
