#!/usr/bin/env python3
"""
Entry point for the bullwhip toolkit: python run.py <command> [flags]
"""
import sys

from src.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
