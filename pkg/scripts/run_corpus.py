#!/usr/bin/env python3
"""Run the worked-example regression corpus, optionally at another prime.

    python scripts/run_corpus.py [--modulus P] [--only ENTRY]
"""
import sys

from burchlab.cli import main

if __name__ == "__main__":
    sys.exit(main(["corpus", *sys.argv[1:]]))
