# Copyright 2026 The hyperpath Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs `hyperpath verify-all` on a few cheap criteria and validates the report."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def main() -> int:
    exe, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(Path(schema_path).read_text())
    with tempfile.TemporaryDirectory() as tmp:
        out = Path(tmp) / "report.json"
        proc = subprocess.run([exe, "verify-all", "--only", "1,6,9", "--out", str(out)],
                              capture_output=True, text=True, check=False)
        if proc.returncode != 0:
            print(proc.stdout, proc.stderr, sep="\n")
            return 1
        report = json.loads(out.read_text())
    jsonschema.validate(report, schema)
    if json.loads(proc.stdout) != report:
        print("stdout and --out reports differ")
        return 1
    ids = [c["id"] for c in report["criteria"]]
    if ids != [1, 6, 9]:
        print(f"unexpected criteria {ids}")
        return 1
    print("report matches schema")
    return 0


if __name__ == "__main__":
    sys.exit(main())
