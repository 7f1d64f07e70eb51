#!/usr/bin/env python3
"""Rewrites expected/*.out from the current clat binary. Review diffs before committing."""
import json
import pathlib
import subprocess
import sys

here = pathlib.Path(__file__).resolve().parent
binary = sys.argv[1] if len(sys.argv) > 1 else "build/tools/clat"
for case in sorted((here / "cases").glob("*.json")):
    doc = json.loads(case.read_text())
    data = doc["input"] if isinstance(doc["input"], str) else json.dumps(doc["input"])
    proc = subprocess.run([binary, doc["command"], *doc["flags"]], input=data.encode(), capture_output=True)
    if proc.returncode != doc["exit"]:
        print(f"{case.stem}: exit {proc.returncode}, expected {doc['exit']}")
    (here / "expected" / (case.stem + ".out")).write_bytes(proc.stdout)
