#!/usr/bin/env python3
"""Run the full verification battery and exit nonzero on any failure.

Thin wrapper over ``knotcover run-all``; any arguments are forwarded, so
``scripts/run_verification.py --jmax 8 --json`` works as expected.
"""

import sys

from knotcover.cli import main

if __name__ == "__main__":
    sys.exit(main(["run-all", *sys.argv[1:]]))
