#!/usr/bin/env python3
# Copyright 2026 The gazelidar Authors
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
"""Recomputes summary.json quartiles from the CSV outputs with numpy."""

import csv
import json
import sys
from collections import defaultdict
from pathlib import Path

import numpy as np

TOL = 1e-9


def quartiles(values):
    q = np.percentile(np.asarray(values, dtype=float), [25, 50, 75], method="linear")
    return {"q1": q[0], "median": q[1], "q3": q[2]}


def main(results_dir: Path) -> int:
    tta = defaultdict(list)
    runs = defaultdict(int)
    density = defaultdict(list)
    with open(results_dir / "results.csv", newline="") as f:
        for row in csv.DictReader(f):
            key = (row["variant"], float(row["fog"]))
            runs[key] += 1
            if row["detected"] == "true":
                tta[key].append(float(row["tta_s"]))
    with open(results_dir / "density_samples.csv", newline="") as f:
        for row in csv.DictReader(f):
            density[(row["variant"], float(row["fog"]))].append(float(row["density_pts_per_deg"]))

    summary = json.loads((results_dir / "summary.json").read_text())
    cells = {(c["variant"], float(c["fog"])): c for c in summary["cells"]}
    errors = []
    if set(cells) != set(runs):
        errors.append(f"cell sets differ: {sorted(set(cells) ^ set(runs))}")
    for key, cell in cells.items():
        if cell["runs"] != runs[key]:
            errors.append(f"{key}: runs {cell['runs']} != {runs[key]}")
        for field, samples in (("tta_s", tta), ("density_pts_per_deg", density)):
            got = cell[field]
            if not samples[key]:
                if got is not None:
                    errors.append(f"{key}.{field}: expected null")
                continue
            want = quartiles(samples[key])
            for name, value in want.items():
                if abs(got[name] - value) > TOL:
                    errors.append(f"{key}.{field}.{name}: {got[name]} != {value}")

    for e in errors:
        print(e)
    print(f"checked {len(cells)} cells: {'OK' if not errors else f'{len(errors)} mismatches'}")
    return 1 if errors else 0


if __name__ == "__main__":
    if len(sys.argv) != 2:
        print("usage: quartile_oracle.py RESULTS_DIR", file=sys.stderr)
        sys.exit(2)
    sys.exit(main(Path(sys.argv[1])))
