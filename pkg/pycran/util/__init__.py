#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Utilities used across pycran: counting the cores available to the
parallel runs and setting up logging for the command line.
"""

import logging

from psutil import cpu_count

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def count_cpu_cores(smt_allowed: bool = False) -> int:
    """Return the number of cores runs can be spread over.

    Only physical cores are counted unless SMT threads are allowed.

    Parameters
    ----------
    smt_allowed: bool [optional]
        Count logical cores, i.e. include SMT threads.

    Returns
    -------
    n_cores: int
        The number of available CPU cores, at least 1.
    """
    n_cores = 0
    try:
        n_cores = cpu_count(logical=smt_allowed)
    except NotImplementedError:
        logger.warning("unable to determine number of CPU cores, psutil.cpu_count not implemented for your system")

    return max(1, int(n_cores or 0))


def setup_logging(verbosity: int = 0) -> None:
    """Configure the root logger for command line use.

    Parameters
    ----------
    verbosity: int
        0 for INFO, anything larger for DEBUG.
    """
    level = logging.DEBUG if verbosity > 0 else logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)
