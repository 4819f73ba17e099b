import sys
import traceback

from config import APP_NAME, APP_VERSION
from ui.cli import main as cli_main
from utils.constants import EXIT_ERROR
from utils.logger import logger


def main():
    """Main application entry point"""
    logger.debug(f"{APP_NAME} {APP_VERSION}: {' '.join(sys.argv[1:])}")
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    try:
        main()
    except Exception as e:
        logger.error(f"Application error: {e}")
        logger.error(traceback.format_exc())
        print(f"ERROR: {e}", file=sys.stderr)
        sys.exit(EXIT_ERROR)
