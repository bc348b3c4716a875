#!/usr/bin/env python3
# Copyright 2026 The decbin Authors
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
"""Writes a coordinate-like benchmark file: one decimal number per line.

The numbers mimic a polygon outline dataset (longitude/latitude pairs from a
random walk, printed with 15 to 17 significant digits), which is the usual
shape of geographic JSON used to benchmark number parsers.
"""

import argparse
import random


def generate(count: int, seed: int) -> list[str]:
    rng = random.Random(seed)
    lon, lat = -95.0, 60.0
    out = []
    while len(out) < count:
        lon = min(-52.6, max(-141.0, lon + rng.gauss(0.0, 0.01)))
        lat = min(83.1, max(41.7, lat + rng.gauss(0.0, 0.01)))
        for value in (lon, lat):
            digits = rng.choice((15, 16, 17, 17, 17))
            out.append(f"{value:.{digits}g}")
    return out[:count]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("out", help="output path")
    parser.add_argument("--count", type=int, default=111126)
    parser.add_argument("--seed", type=int, default=2026)
    args = parser.parse_args()
    with open(args.out, "w", encoding="ascii", newline="\n") as f:
        f.write("\n".join(generate(args.count, args.seed)) + "\n")


if __name__ == "__main__":
    main()
