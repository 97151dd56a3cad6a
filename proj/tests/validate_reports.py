"""Runs the command-line tool on a few inputs and checks every JSON report
against the report-v1 schema. Also checks that two runs of `verify all` on
gn(3,2) produce identical bytes."""

import json
import subprocess
import sys

import jsonschema

HEIS3 = '{"type":"gn","p":3,"n":1}'
GN32 = '{"type":"gn","p":3,"n":2}'
S3 = '{"type":"named","name":"s3"}'

CASES = [
    (["table", "--group", S3], 0),
    (["table", "--group", HEIS3, "--decimal"], 0),
    (["check", "gvz", "--group", S3], 1),
    (["check", "gvz", "--group", '{"type":"cyclic","n":4}'], 4),
    (["check", "gcp", "--group", HEIS3, "--normal", "center"], 0),
    (["check", "two-degree", "--group", HEIS3], 0),
    (["verify", "thm1.2", "--group", S3], 0),
    (["verify", "prop2.11", "--group", HEIS3], 4),
    (["verify", "all", "--group", GN32], 0),
    (["table", "--group", "{oops"], 2),
    (["table", "--group", HEIS3, "--max-order", "10"], 3),
]


def run(tool, args):
    proc = subprocess.run([tool, *args, "--format", "json"], capture_output=True, check=False)
    return proc.returncode, proc.stdout


def main():
    tool, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args, expected in CASES:
        code, out = run(tool, args)
        label = " ".join(args[:2])
        errors = sorted(validator.iter_errors(json.loads(out)), key=str) if out else ["no output"]
        if code != expected or errors:
            failures += 1
            print(f"FAIL {label}: exit {code} (expected {expected}); {[str(e)[:200] for e in errors]}")
        else:
            print(f"ok   {label}: exit {code}")
    first = run(tool, ["verify", "all", "--group", GN32])[1]
    second = run(tool, ["verify", "all", "--group", GN32])[1]
    if first != second or not first:
        failures += 1
        print("FAIL verify all output differs between runs")
    else:
        print(f"ok   verify all is byte-identical across runs ({len(first)} bytes)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
