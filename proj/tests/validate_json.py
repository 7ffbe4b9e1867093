"""Runs every subcommand with --json (and a trials stream) and validates the
output against the shipped schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema

binary, schema_dir, fixtures = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
output_schema = json.loads((schema_dir / "output-v1.json").read_text())
record_schema = json.loads((schema_dir / "record-v1.json").read_text())
output_validator = jsonschema.Draft202012Validator(output_schema)
record_validator = jsonschema.Draft202012Validator(record_schema)

petersen = str(fixtures / "petersen.graph")
hyper = str(fixtures / "triangle_cycle.hgr")

commands = [
    ["params", "--theorem", "cycles", "-k", "4", "-r", "2", "-R", "6"],
    ["params", "--theorem", "ap", "-k", "3", "-r", "2", "-g", "4", "-W", "9"],
    ["params", "--theorem", "cliques", "-k", "3", "-r", "2", "-g", "4", "-R", "6"],
    ["sample", "--kind", "gnp", "-n", "8", "-p", "0.4", "--seed", "1"],
    ["sample", "--kind", "subset", "-n", "30", "-p", "0.2"],
    ["girth", "--graph", petersen],
    ["girth", "--hypergraph", hyper, "-g", "4"],
    ["cycles", "--hypergraph", hyper, "-g", "4", "--list"],
    ["colour", "--hypergraph", hyper, "-r", "2"],
    ["arrows", "--kind", "ap", "-N", "9", "-k", "3", "-r", "2"],
    ["arrows", "--kind", "cycle", "--graph", petersen, "-k", "5", "-r", "1"],
    ["ramsey", "--kind", "clique", "-k", "3", "-r", "2"],
    ["ramsey", "--kind", "cycle", "-k", "4", "-r", "2", "-n", "5"],
    ["vdw", "-k", "3", "-r", "2"],
    ["extremal", "-n", "6", "-m", "4"],
    ["fact-vdw", "-n", "500", "-k", "3", "-r", "2", "-W", "9", "--samples", "3", "--seed", "2"],
    ["fact7", "-n", "5", "-r", "1", "-k", "2"],
    ["fbounds", "-k", "4", "-r", "2", "--search"],
    ["fbounds", "-k", "5", "-r", "2"],
]

failures = 0
for args in commands:
    proc = subprocess.run([binary, *args, "--json"], capture_output=True, text=True)
    if proc.returncode != 0:
        print(f"FAIL exit {proc.returncode}: {' '.join(args)}\n{proc.stderr}")
        failures += 1
        continue
    errors = list(output_validator.iter_errors(json.loads(proc.stdout)))
    for e in errors:
        print(f"FAIL {' '.join(args)}: {e.message}")
    failures += bool(errors)

streams = [
    ["trials", "--theorem", "ap", "-n", "500", "--scale", "0.5", "--trials", "4", "--seed", "1"],
    ["trials", "--theorem", "cycles", "-n", "30", "-k", "5", "-p", "0.05", "--trials", "3", "--seed", "1", "--timing"],
    ["trials", "--theorem", "cliques", "-n", "20", "--scale", "1", "--trials", "3", "--seed", "1"],
    ["trials", "--theorem", "ap", "-n", "50", "--scale", "0.5", "--trials", "0", "--seed", "1"],
]
for args in streams:
    proc = subprocess.run([binary, *args], capture_output=True, text=True)
    if proc.returncode != 0:
        print(f"FAIL exit {proc.returncode}: {' '.join(args)}\n{proc.stderr}")
        failures += 1
        continue
    lines = proc.stdout.splitlines()
    if not lines or json.loads(lines[-1]).get("type") != "summary":
        print(f"FAIL {' '.join(args)}: stream does not end with a summary")
        failures += 1
    for line in lines:
        errors = list(record_validator.iter_errors(json.loads(line)))
        for e in errors:
            print(f"FAIL {' '.join(args)}: {e.message}")
        failures += bool(errors)

print(f"{len(commands)} envelopes, {len(streams)} streams, {failures} failures")
sys.exit(1 if failures else 0)
