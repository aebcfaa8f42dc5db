#!/usr/bin/env python3
"""
starfact entry point script.

This script provides the main entry point for running starfact.
It properly sets up the Python path and imports from the src package.
"""

import sys
from pathlib import Path

# Add the project root to Python path
root_path = Path(__file__).parent
if str(root_path) not in sys.path:
    sys.path.insert(0, str(root_path))

# Import and run main
from src.main import main

if __name__ == "__main__":
    main()
