#!/usr/bin/env python3
"""Recomputes the frozen claim-hash vectors in test_claims.cpp:
SHA-256 of the canonical claim encoding, reduced mod the BN254 group
order, printed as 32 big-endian hex bytes."""
import hashlib

R = 21888242871839275222246405745257275088548364400416034343698204186575808495617

CASES = [
    b'k:"v"',
    b"age:25",
    b'name:"Bob"',
    b'addr:{"city":"Bologna","zip":"40126"}',
]

for canon in CASES:
    digest = hashlib.sha256(canon).digest()
    element = int.from_bytes(digest, "big") % R
    print(f"{canon.decode()!r:45s} -> {element:064x}")
