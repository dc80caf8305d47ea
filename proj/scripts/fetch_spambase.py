#!/usr/bin/env python3
# Copyright 2026 The Spamboost Authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes Spambase as a headerless CSV (57 features, label last).

Sources, in order of preference:
  --uci PATH      the original UCI `spambase.data` file (4601 rows)
  --keel-wheel    a `keel_ds` wheel from PyPI; its KEEL copy has 4597 rows
"""
import argparse
import pathlib
import subprocess
import sys
import tempfile
import zipfile

KEEL_MEMBER = "keel_ds/data/balanced/raw/spambase.dat"


def normalise(lines):
    out = []
    for line in lines:
        line = line.strip()
        if not line or line.startswith("@"):
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != 58:
            raise SystemExit(f"unexpected field count {len(fields)}: {line[:60]}")
        out.append(",".join(fields))
    return out


def from_keel(wheel):
    if wheel is None:
        tmp = tempfile.mkdtemp()
        subprocess.run([sys.executable, "-m", "pip", "download", "--no-deps",
                        "keel-ds==0.2.5", "-d", tmp], check=True)
        wheel = next(pathlib.Path(tmp).glob("keel_ds-*.whl"))
    with zipfile.ZipFile(wheel) as z:
        return z.read(KEEL_MEMBER).decode().splitlines()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--uci", type=pathlib.Path)
    ap.add_argument("--keel-wheel", type=pathlib.Path)
    ap.add_argument("--out", type=pathlib.Path, default=pathlib.Path("data/spambase.csv"))
    args = ap.parse_args()

    lines = args.uci.read_text().splitlines() if args.uci else from_keel(args.keel_wheel)
    rows = normalise(lines)
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text("\n".join(rows) + "\n")
    spam = sum(r.endswith(",1") for r in rows)
    print(f"wrote {args.out}: {len(rows)} rows, {spam} spam, {len(rows) - spam} non-spam")


if __name__ == "__main__":
    main()
