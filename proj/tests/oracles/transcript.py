#!/usr/bin/env python3
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

"""Independent re-implementation of the Fiat-Shamir transcript."""

import hashlib

N = 0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEBAAEDCE6AF48A03BBFD25E8CD0364141
GX = 0x79BE667EF9DCBBAC55A06295CE870B07029BFCDB2DCE28D959F2815B16F81798


def be32(v):
    return v.to_bytes(4, "big")


def lp(s: bytes):
    return be32(len(s)) + s


def natural(v):
    b = v.to_bytes((v.bit_length() + 7) // 8, "big") if v else b""
    return lp(b)


class Transcript:
    def __init__(self, label: bytes):
        self.label = label
        self.buf = b""

    def digest(self, clabel, ctr):
        return hashlib.sha256(lp(self.label) + self.buf + lp(clabel) + be32(ctr)).digest()

    def scalar(self, clabel, p):
        ctr = 0
        while True:
            c = int.from_bytes(self.digest(clabel, ctr), "big") % p
            if c:
                self.buf += lp(clabel) + c.to_bytes(32, "big")
                return c
            ctr += 1

    def bits(self, clabel, nbits):
        stream = b""
        ctr = 0
        while len(stream) * 8 < nbits:
            stream += self.digest(clabel, ctr)
            ctr += 1
        v = int.from_bytes(stream, "big") >> (len(stream) * 8 - nbits)
        self.buf += lp(clabel) + natural(v)
        return v


if __name__ == "__main__":
    t = Transcript(b"zkrange/test/v1")
    t.buf += b"\x02" + GX.to_bytes(32, "big")  # compressed generator (even y)
    t.buf += natural(12345)
    c1 = t.scalar(b"c1", N)
    c2 = t.bits(b"c2", 256)
    c3 = t.scalar(b"c3", N)
    print(f"c1 = {c1:064x}")
    print(f"c2 = {c2:064x}")
    print(f"c3 = {c3:064x}")
