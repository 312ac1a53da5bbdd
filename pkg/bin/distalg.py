#!/usr/bin/env python3
"""
Distribution algebra command line
Star and Hörmander products, pairings, epsilon limits and confined Hamiltonian checks
"""

import sys
from pathlib import Path

# Add the src directory to Python path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from distalg.cli import main  # noqa: E402

if __name__ == "__main__":
    exit_code = main()
    sys.exit(exit_code)
