"""Runs the hqx binary in JSON mode and validates every document against the schema."""

import json
import subprocess
import sys

import jsonschema

INVOCATIONS = [
    ["boundary", "--n", "7", "--m", "1..40"],
    ["boundary", "--n", "64", "--m", "18446744073709551615"],
    ["extraconn", "--n", "9"],
    ["extraconn", "--n", "7"],
    ["witness", "--n", "8", "--m", "20"],
    ["witness", "--n", "8", "--m", "5", "--emit", "summary"],
    ["verify", "boundary-oracle", "--n", "3"],
    ["verify", "extraconn-oracle", "--n", "4", "--h", "1..3"],
    ["verify", "structure", "--n", "6", "--trials", "20"],
    ["verify", "plateaus", "--n-min", "5", "--n-max", "9"],
    ["verify", "differences", "--n-min", "5", "--n-max", "9"],
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in INVOCATIONS:
        proc = subprocess.run([binary, *args, "--format", "json"], capture_output=True, text=True, check=False)
        if proc.returncode not in (0, 1):
            print(f"{' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        for e in errors:
            print(f"{' '.join(args)}: {e.json_path}: {e.message}")
        failures += bool(errors)
    print(f"{len(INVOCATIONS) - failures}/{len(INVOCATIONS)} outputs valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
