#!/usr/bin/env python3
"""
BKL Braid Workshop - Periodic Braid Toolkit
Normal forms, summit sets and conjugacy search for periodic braids.

Usage:
    python bkl_workshop.py nf -n 6 "d^3 [4,2][4,3][2,1]"
    python bkl_workshop.py solve -n 10 "d^3 [10,7]"
    python bkl_workshop.py props -n 7 --seed 1
"""

import sys

from braidtools.cli import run


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
