#!/usr/bin/env python3
"""Main entry point for orientnet when invoked as python -m orientnet."""

from orientnet.cli import main

if __name__ == "__main__":
    raise SystemExit(main())
