"""Validates `fueter verify` JSON against docs/report_schema.json."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as fh:
    schema = json.load(fh)

for seed in ["z^2", "(z^2+1)/z", "5"]:
    out = subprocess.run([cli, "verify", seed, "--points", "10"], capture_output=True, text=True)
    if out.returncode not in (0, 2):
        sys.exit(f"{seed}: exit {out.returncode}: {out.stderr}")
    jsonschema.validate(json.loads(out.stdout), schema)
    print(f"ok: {seed}")
