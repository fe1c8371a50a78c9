#!/usr/bin/env python3
# Copyright 2026 The SwarmVQC Authors
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

"""Regenerates the checked-in MNIST 0/1 fixture CSVs.

Source: mnist_5k.csv.gz from the mlxtend wheel (500 images per digit,
784 pixel columns then the label). Usage:

    make_mnist_fixture.py path/to/mlxtend-*.whl OUTDIR
"""

import gzip
import io
import random
import sys
import zipfile

SEED = 20260101
MEMBER = "mlxtend/data/data/mnist_5k.csv.gz"


def load(wheel):
    with zipfile.ZipFile(wheel) as zf:
        raw = gzip.decompress(zf.read(MEMBER)).decode()
    rows = []
    for line in io.StringIO(raw):
        cells = line.strip().split(",")
        if len(cells) != 785:
            continue
        rows.append((int(float(cells[-1])), [int(float(c)) for c in cells[:-1]]))
    return rows


def fmt(px):
    if px == 0:
        return "0"
    return ("%.4f" % (px / 255.0)).rstrip("0").rstrip(".")


def write(path, rows):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write("label," + ",".join("f%d" % i for i in range(784)) + "\n")
        for label, pixels in rows:
            f.write(str(label) + "," + ",".join(fmt(p) for p in pixels) + "\n")


def main():
    wheel, out = sys.argv[1], sys.argv[2]
    rows = load(wheel)
    rng = random.Random(SEED)
    zeros_ones = [r for r in rows if r[0] in (0, 1)]
    twos = [r for r in rows if r[0] == 2]
    rng.shuffle(zeros_ones)
    rng.shuffle(twos)
    train = zeros_ones[:700] + twos[:60]
    rng.shuffle(train)
    val = zeros_ones[700:800]
    test = zeros_ones[800:1000]
    write(out + "/mnist01_train.csv", train)
    write(out + "/mnist01_val.csv", val)
    write(out + "/mnist01_test.csv", test)


if __name__ == "__main__":
    main()
