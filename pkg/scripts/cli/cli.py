import logging
import sys
import time

from scripts.cli.parsing.parsers import parse_arguments, prepare_arguments
from scripts.cli.RunRecord import RunRecord
from scripts.cli.utilities import shutdown
from termcode.exceptions import ParameterError, TermCodeError
from termcode.utilities.logger import configure_logging

logger = logging.getLogger(__name__)

DEBUG = False


def setup(args):
    global DEBUG
    DEBUG = args.debug
    configure_logging(DEBUG)


def run(args):
    start = time.perf_counter()
    args.func(args)
    wall_time = time.perf_counter() - start

    if getattr(args, "record", None):
        RunRecord.from_arguments(args, wall_time).save(args.record)
        logger.debug("run record written to %s", args.record)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv

    # Parse and prepare command
    args = parse_arguments(argv)
    as_json = getattr(args, "json", False)
    try:
        args = prepare_arguments(args)
        setup(args)

        # Run command
        run(args)
    except TermCodeError as error:
        if DEBUG:
            logger.exception("command failed")
        shutdown(error, as_json)
    except OSError as error:
        shutdown(ParameterError(f"{error.strerror}: {error.filename}"), as_json)

    return 0


if __name__ == "__main__":
    sys.exit(main())
