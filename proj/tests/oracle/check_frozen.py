#!/usr/bin/env python3
"""Re-runs the brute-force oracle and compares it with the frozen expected_output.txt."""
import pathlib
import subprocess
import sys

here = pathlib.Path(__file__).resolve().parent
fresh = subprocess.run([sys.executable, str(here / "brute_force_oracle.py")],
                       check=True, capture_output=True, text=True).stdout
frozen = (here / "expected_output.txt").read_text()
if fresh != frozen:
    sys.stderr.write("oracle output differs from expected_output.txt\n")
    sys.exit(1)
print("oracle output matches the frozen expectations")
