"""One-way hashing through a singular GF(2) matrix built from two permutations."""
from .codec import BitStream, bytes_to_bits, pad, split_blocks
from .digest import Digest, Hasher, HashParams, Model, digest_to_hex, f_mix, hash_message
from .gf2 import BitMatrix, BitVector
from .matgen import fisher_yates, gen_noninvertible, perm_to_matrix

__all__ = [
    "BitMatrix",
    "BitStream",
    "BitVector",
    "Digest",
    "HashParams",
    "Hasher",
    "Model",
    "bytes_to_bits",
    "digest_to_hex",
    "f_mix",
    "fisher_yates",
    "gen_noninvertible",
    "hash_message",
    "pad",
    "perm_to_matrix",
    "split_blocks",
]
