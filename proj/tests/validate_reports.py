import json
import subprocess
import sys

import jsonschema

cli, fixtures = sys.argv[1], sys.argv[2]
schema = json.load(open(f"{fixtures}/report.schema.json"))
runs = [
    ["check", "gs", "--sizes", "1,2"],
    ["check", "oplax", "--order", "reversed"],
    ["span", "compose", f"{fixtures}/span_a.json", f"{fixtures}/span_b.json"],
    ["termgraph", "eval", f"{fixtures}/signature.json", f"{fixtures}/tg_sharing.json",
     "--assign", f"{fixtures}/assign_finrel.json"],
    ["kleisli", "build", "--monad", "lifting", "--sizes", "1,2"],
    ["monad", "gs", "--monad", "writer-z2"],
]
for args in runs:
    proc = subprocess.run([cli, *args, "--format", "json"], capture_output=True, text=True)
    if proc.returncode not in (0, 1):
        sys.exit(f"{' '.join(args)}: exit {proc.returncode}: {proc.stderr}")
    report = json.loads(proc.stdout)
    jsonschema.validate(report, schema)
    if (report["verdict"] == "pass") != (proc.returncode == 0):
        sys.exit(f"{' '.join(args)}: verdict {report['verdict']} with exit {proc.returncode}")
    print(f"ok {' '.join(args)}")
