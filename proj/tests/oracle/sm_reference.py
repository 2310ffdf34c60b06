# Copyright 2026 The AuthROS Simulator Authors
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

"""Pure-Python reference for the SM2/SM3/SM4/Keccak known-answer vectors.

Big-integer arithmetic uses Python ints and shares no code with the C++
implementation. SM3/SM4 are cross-checked against the gmssl package and
Keccak against pycryptodome before vectors are written.
"""
import sys

from Crypto.Hash import keccak
from gmssl import func, sm2, sm3, sm4

P = 0xFFFFFFFEFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFF00000000FFFFFFFFFFFFFFFF
A = 0xFFFFFFFEFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFF00000000FFFFFFFFFFFFFFFC
B = 0x28E9FA9E9D9F5E344D5A9E4BCF6509A7F39789F515AB8F92DDBCBD414D940E93
N = 0xFFFFFFFEFFFFFFFFFFFFFFFFFFFFFFFF7203DF6B21C6052B53BBF40939D54123
GX = 0x32C4AE2C1F1981195F9904466A39C9948FE30BBFF2660BE1715A4589334C74C7
GY = 0xBC3736A2F4F6779C59BDCEE36B692153D0A9877CC62A474002DF32E52139F0A0
DEFAULT_ID = b"1234567812345678"


def sm3_hash(data: bytes) -> bytes:
    return bytes.fromhex(sm3.sm3_hash(func.bytes_to_list(data)))


def ec_add(p1, p2):
    if p1 is None:
        return p2
    if p2 is None:
        return p1
    (x1, y1), (x2, y2) = p1, p2
    if x1 == x2 and (y1 + y2) % P == 0:
        return None
    if p1 == p2:
        lam = (3 * x1 * x1 + A) * pow(2 * y1, -1, P) % P
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, P) % P
    x3 = (lam * lam - x1 - x2) % P
    return (x3, (lam * (x1 - x3) - y1) % P)


def ec_mul(k, pt):
    acc = None
    for bit in bin(k)[2:]:
        acc = ec_add(acc, acc)
        if bit == "1":
            acc = ec_add(acc, pt)
    return acc


G = (GX, GY)


def be32(v: int) -> bytes:
    return v.to_bytes(32, "big")


def point_bytes(pt) -> bytes:
    return b"\x04" + be32(pt[0]) + be32(pt[1])


def kdf(z: bytes, klen: int) -> bytes:
    out = b""
    ct = 1
    while len(out) < klen:
        out += sm3_hash(z + ct.to_bytes(4, "big"))
        ct += 1
    return out[:klen]


def za(ident: bytes, pub) -> bytes:
    entl = (len(ident) * 8).to_bytes(2, "big")
    return sm3_hash(entl + ident + be32(A) + be32(B) + be32(GX) + be32(GY) + be32(pub[0]) + be32(pub[1]))


def sign(d: int, k: int, ident: bytes, msg: bytes):
    pub = ec_mul(d, G)
    e = int.from_bytes(sm3_hash(za(ident, pub) + msg), "big")
    x1 = ec_mul(k, G)[0]
    r = (e + x1) % N
    assert r != 0 and r + k != N
    s = pow(1 + d, -1, N) * (k - r * d) % N
    assert s != 0
    return r, s


def encrypt(pub, k: int, msg: bytes) -> bytes:
    c1 = ec_mul(k, G)
    x2, y2 = ec_mul(k, pub)
    t = kdf(be32(x2) + be32(y2), len(msg))
    assert any(t)
    c2 = bytes(a ^ b for a, b in zip(msg, t))
    c3 = sm3_hash(be32(x2) + msg + be32(y2))
    return point_bytes(c1) + c3 + c2


def keccak256(data: bytes) -> bytes:
    h = keccak.new(digest_bits=256)
    h.update(data)
    return h.digest()


def sm4_block(key: bytes, block: bytes) -> bytes:
    c = sm4.CryptSM4(padding_mode=None)
    c.set_key(key, sm4.SM4_ENCRYPT)
    return bytes(c.crypt_ecb(block))


def sm4_cbc(key: bytes, iv: bytes, data: bytes) -> bytes:
    c = sm4.CryptSM4()  # PKCS#7 padding
    c.set_key(key, sm4.SM4_ENCRYPT)
    return bytes(c.crypt_cbc(iv, data))


def hx(b: bytes) -> str:
    return b.hex() if b else "-"


def line(alg, inp, key, out):
    return f"ALG {alg} IN {hx(inp)} KEY {hx(key)} OUT {hx(out)}"


def main(path):
    lines = []
    # Sanity: published constants.
    assert sm3_hash(b"abc").hex() == "66c7f0f462eeedd9d1f2d46bdc10e4e24167c4875cf2f7a2297da02b8f4ba8e0"
    k0 = bytes.fromhex("0123456789abcdeffedcba9876543210")
    assert sm4_block(k0, k0).hex() == "681edf34d206965e86b3e94f536e4246"
    assert (GY * GY - GX ** 3 - A * GX - B) % P == 0
    assert ec_mul(N, G) is None

    for m in [b"", b"abc", b"abcd" * 16, bytes(range(256)) * 4]:
        lines.append(line("SM3", m, b"", sm3_hash(m)))
    lines.append(line("SM4-BLOCK", k0, k0, sm4_block(k0, k0)))
    blk = k0
    for _ in range(1000):
        blk = sm4_block(k0, blk)
    lines.append(line("SM4-BLOCK-1000", k0, k0, blk))
    iv = bytes.fromhex("000102030405060708090a0b0c0d0e0f")
    for m in [b"", b"a", bytes(range(15)), bytes(range(16)), bytes(range(17)), bytes(range(256)) * 4]:
        lines.append(line("SM4-CBC", m, k0 + iv, sm4_cbc(k0, iv, m)))

    # Published SM2 signing example on the recommended curve.
    d = 0x3945208F7B2144B13F36E38AC6D39F95889393692860B51A42FB81EF4DF7C5B8
    k = 0x59276E27D506861A16680F3AD9C02DCCEF3CC1FA3CDBE4CE6D54B80DEAC1BC21
    r, s = sign(d, k, DEFAULT_ID, b"message digest")
    assert r == 0xF5A03B0648D2C4630EEAC513E1BB81A15944DA3827D5B74143AC7EACEEE720B3
    assert s == 0xB1B6AA29DF212FD8763182BC0D421CA1BB9038FD1F7F42D4840B69C485BBC1AA
    # gmssl cross-check (its sign() takes the precomputed e = SM3(Z||M)).
    pub = ec_mul(d, G)
    g = sm2.CryptSM2(private_key=f"{d:064x}", public_key=f"{pub[0]:064x}{pub[1]:064x}")
    assert g.sign_with_sm3(b"message digest", f"{k:064x}") == f"{r:064x}{s:064x}"
    lines.append(line("SM2-PUB", be32(d), be32(d), point_bytes(pub)))
    lines.append(line("SM2-SIGN", b"message digest", be32(d) + be32(k), be32(r) + be32(s)))
    lines.append(line("SM2-SIGN", b"abc", be32(d) + be32(k ^ 0xFF), b"".join(be32(v) for v in sign(d, k ^ 0xFF, DEFAULT_ID, b"abc"))))
    lines.append(line("SM2-ENC", b"encryption standard", be32(d) + be32(k), encrypt(pub, k, b"encryption standard")))
    lines.append(line("SM2-ENC", bytes(range(81)), be32(d) + be32(k ^ 0x1234), encrypt(pub, k ^ 0x1234, bytes(range(81)))))
    z = be32(GX) + be32(GY)
    for n in [16, 32, 45, 81]:
        lines.append(line("SM2-KDF", z, n.to_bytes(4, "big"), kdf(z, n)))
    for m in [b"", b"abc", bytes(range(200))]:
        lines.append(line("KECCAK256", m, b"", keccak256(m)))
    lines.append(line("ADDRESS", point_bytes(pub), b"", keccak256(point_bytes(pub)[1:])[:20]))

    with open(path, "w") as f:
        f.write("# Known-answer vectors generated by tests/oracle/sm_reference.py\n")
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1])
