#!/usr/bin/env python3
# Copyright 2026 The DFI Authors
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

"""Reference model of the random game generator.

Produced tests/data/gen_n4_d3_seed7.pg:

    generator_reference.py 4 3 1 2 0.0 7 > tests/data/gen_n4_d3_seed7.pg
"""

import sys

MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & MASK

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def below(self, bound):
        limit = MASK - (MASK % bound)
        while True:
            x = self.next()
            if x < limit:
                return x % bound

    def unit(self):
        return (self.next() >> 11) * 2.0**-53


def generate(n, d, lo, hi, q, seed):
    rng = SplitMix64(seed)
    for v in range(n):
        priority = rng.below(d + 1)
        owner = rng.below(2)
        k = lo + rng.below(hi - lo + 1)
        loop = rng.unit() < q or k > n - 1
        succ = [v] if loop else []
        m = k - len(succ)
        drawn = []
        for j in range(n - 1 - m, n - 1):
            t = rng.below(j + 1)
            drawn.append(j if t in drawn else t)
        succ += [i if i < v else i + 1 for i in drawn]
        yield v, priority, owner, succ


def main():
    n, d, lo, hi = (int(x) for x in sys.argv[1:5])
    q, seed = float(sys.argv[5]), int(sys.argv[6])
    print(f"parity {n - 1};")
    for v, p, o, succ in generate(n, d, lo, hi, q, seed):
        print(f"{v} {p} {o} {','.join(map(str, succ))};")


if __name__ == "__main__":
    main()
