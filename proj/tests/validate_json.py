"""Runs the CLI in JSON mode and validates every document against the schema."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
schema = json.loads(pathlib.Path(schema_path).read_text())
validator = jsonschema.Draft202012Validator(schema)

runs = [
    ["roots", "--type", "G2"],
    ["roots", "--type", "E8", "--count-only"],
    ["orbit", "--type", "G2", "--node", "2", "--chain", "auto"],
    ["orbit", "--type", "F4", "--node", "1", "--chain", "auto"],
    ["orbit", "--type", "D4", "--node", "2", "--chain", "auto"],
    ["orbit", "--type", "G2", "--node", "2", "--sos", "2,1"],
    ["tables", "--id", "table2", "--id", "table9"],
    ["--seed", "7", "sweep", "--samples", "20"],
]

docs = []
for args in runs:
    out = subprocess.run([cli, "--format", "json", *args], check=True, capture_output=True, text=True).stdout
    docs.append((" ".join(args), json.loads(out)))

with tempfile.TemporaryDirectory() as tmp:
    subprocess.run([cli, "--format", "json", "tables", "--all", "--out", tmp], check=True)
    for path in sorted(pathlib.Path(tmp).glob("*.json")):
        docs.append((path.name, json.loads(path.read_text())))

failed = 0
for name, doc in docs:
    errors = list(validator.iter_errors(doc))
    for e in errors:
        print(f"{name}: {e.message} at {list(e.path)}")
    failed += bool(errors)
print(f"{len(docs) - failed}/{len(docs)} documents valid")
sys.exit(1 if failed else 0)
