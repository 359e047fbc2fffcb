#!/usr/bin/env python3
"""Run the CLI over a spread of commands and validate every JSON document."""
import json
import subprocess
import sys

import jsonschema

binary, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
validator = jsonschema.Draft202012Validator(schema)
validator.check_schema(schema)

runs = [
    (["weights", "--set", "d3", "--p", "3", "--m", "3", "--nprime", "2"], 0),
    (["weights", "--set", "d3", "--p", "3", "--m", "4", "--nprime", "8", "--timing"], 0),
    (["weights", "--set", "d1", "--p", "5", "--m", "1"], 4),
    (["weights", "--set", "d2", "--p", "2", "--m", "3", "--k", "3"], 0),
    (["check", "optimal", "--set", "d1", "--p", "3", "--m", "3"], 0),
    (["check", "dual", "--set", "d1", "--p", "3", "--m", "2"], 0),
    (["check", "dual", "--set", "d2", "--p", "2", "--m", "2"], 0),
    (["check", "minimal", "--set", "d3", "--p", "3", "--m", "4", "--nprime", "4"], 0),
    (["check", "minimal", "--set", "d1", "--p", "3", "--m", "1"], 0),
    (["check", "gauss", "--p", "3", "--m", "4", "--nprime", "4"], 0),
    (["check", "gauss", "--p", "7", "--m", "1"], 0),
    (["check", "action", "--set", "d2", "--p", "3", "--m", "2", "--trials", "5"], 0),
    (["matrix", "--timing"], 0),
]

failed = 0
for args, expect in runs:
    proc = subprocess.run([binary, *args, "--format", "json"], capture_output=True, text=True)
    label = " ".join(args)
    if proc.returncode != expect:
        print(f"FAIL {label}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
        failed += 1
        continue
    errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=lambda e: list(e.path))
    if errors:
        failed += 1
        print(f"FAIL {label}:")
        for e in errors[:5]:
            print("   ", list(e.path), e.message[:200])
    else:
        print(f"ok   {label}")

sys.exit(1 if failed else 0)
