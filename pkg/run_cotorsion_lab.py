import sys
from logging import getLogger, Formatter

from cotorsion_lab.cli.main import main


# Setup logging
logger = getLogger()
for handler in logger.handlers:
    handler.setFormatter(Formatter('%(asctime)s %(name)-12s %(levelname)-5s %(message)s', datefmt='%I:%M:%S %p'))


if __name__ == "__main__":
    sys.exit(main())
