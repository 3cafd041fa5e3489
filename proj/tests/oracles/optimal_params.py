# Copyright 2026 The zkrange Authors.
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

"""Brute-force oracle for the (u, l) choice of the signature-based range proof.

cost(l) = bundle octets + 33 * u, bundle = 6 + 33 + 2 * (357 l + 97),
u = max(2, ceil(width^(1/l))), l in [1, 64], ties to smaller l.
"""

from sympy import integer_nthroot

R = 0x30644E72E131A029B85045B68181585D2833E84879B9709143E1F593F0000001


def ceil_root(w, l):
    r, exact = integer_nthroot(w, l)
    return r if exact else r + 1


def bundle_bytes(l):
    return 6 + 33 + 2 * (l * (33 + 4 + 256 + 64) + 33 + 64)


def optimal(width):
    best = None
    for l in range(1, 65):
        u = max(2, ceil_root(width, l))
        if u > 1 << 16 or u**l >= R:
            continue
        cost = bundle_bytes(l) + 33 * u
        if best is None or cost < best[0]:
            best = (cost, u, l)
    return best


if __name__ == "__main__":
    for w in [1, 2, 255, 256, 1000, 252460800, 2**32, 2**64]:
        cost, u, l = optimal(w)
        print(f"width={w} u={u} l={l} cost={cost} bits={8 * bundle_bytes(l)}")
    print("u57l5 bits", 8 * bundle_bytes(5))
