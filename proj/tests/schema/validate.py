import json
import subprocess
import sys

import jsonschema

binary, schema_path, *fixtures = sys.argv[1:]
with open(schema_path) as f:
    schema = json.load(f)
for fixture in fixtures:
    out = subprocess.run([binary, "at-infinity", "--format", "json", fixture], check=True, capture_output=True, text=True)
    jsonschema.validate(json.loads(out.stdout), schema)
    print("valid", fixture)
