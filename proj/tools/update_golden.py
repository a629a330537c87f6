#!/usr/bin/env python3
"""Rewrite tests/golden/<name>.json from the current rectrep binary.

usage: tools/update_golden.py [path/to/rectrep]
Review the git diff afterwards; golden files are the CLI contract.
"""
import json
import pathlib
import subprocess
import sys

root = pathlib.Path(__file__).resolve().parent.parent
exe = sys.argv[1] if len(sys.argv) > 1 else str(root / "build" / "rectrep")
golden = root / "tests" / "golden"

for case in json.loads((golden / "cases.json").read_text()):
    r = subprocess.run([exe, *case["argv"]], capture_output=True)
    (golden / f"{case['name']}.json").write_bytes(r.stdout)
    flag = "" if r.returncode == case["exit"] else f"  (expected exit {case['exit']})"
    print(f"{case['name']}: exit {r.returncode}{flag}")
