"""Run the interdiction CLI from a source checkout: ``python main.py solve``."""

import sys

from interdiction.cli import main

if __name__ == "__main__":
    sys.exit(main())
