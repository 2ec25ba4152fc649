#!/usr/bin/env python3
"""Run every check on the full reference grid of cases and print a summary
table.  Equivalent to `repoints sweep --format text`, with optional filters.

Usage:
    python scripts/run_desk_sweep.py [--series sl|so|sp] [--Nmax K] [--out FILE]
"""
import sys

from repoints.cli import main

if __name__ == "__main__":
    sys.exit(main(["sweep", "--format", "text", *sys.argv[1:]]))
