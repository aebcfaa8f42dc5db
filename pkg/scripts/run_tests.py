#!/usr/bin/env python3
"""
starfact Test Runner

Run the pytest suite from the project root. ``--slow`` includes the exhaustive
Sym(5) sweeps; any other arguments are handed to pytest unchanged.
"""

import os
import subprocess
import sys
from pathlib import Path


def build_command(argv):
    """pytest invocation for the given runner arguments."""
    extra = [arg for arg in argv if arg != "--slow"]
    cmd = [sys.executable, "-m", "pytest", "tests/", "-v"]
    if "--slow" not in argv:
        cmd += ["-m", "not slow"]
    return cmd + extra


def main(argv=None):
    """Run starfact tests; returns the pytest exit status."""
    project_root = Path(__file__).resolve().parent.parent
    env = {**os.environ, "PYTHONPATH": str(project_root)}
    cmd = build_command(sys.argv[1:] if argv is None else argv)

    print(f"[>] Running: {' '.join(cmd)}")
    returncode = subprocess.run(cmd, cwd=project_root, env=env).returncode
    print("[+] All tests passed!" if returncode == 0 else f"[-] Tests failed with exit code {returncode}")
    return returncode


if __name__ == "__main__":
    sys.exit(main())
