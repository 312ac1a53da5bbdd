import logging

import pytest


@pytest.fixture(autouse=True)
def reset_cli_logger():
    """The CLI binds its handler to the stderr of the test that ran it"""
    yield
    logger = logging.getLogger("distalg")
    logger.handlers.clear()
    logger.setLevel(logging.NOTSET)
