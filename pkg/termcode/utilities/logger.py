import logging
import sys

PACKAGE_LOGGER_NAME = "termcode"


def configure_logging(debug: bool = False):
    """
    Routes termcode log records to stderr. Library modules never install handlers themselves.
    """
    if debug:
        logging.basicConfig(stream=sys.stderr, level=logging.DEBUG)
    logging.getLogger(PACKAGE_LOGGER_NAME).setLevel(
        logging.DEBUG if debug else logging.WARNING
    )
