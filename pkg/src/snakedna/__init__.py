"""Keyed grayscale image cipher: snake row permutation, nucleotide coding,
chaotic S-box substitution and keystream XOR, with an exact decryption
inverse and a statistical security-analysis suite."""

from snakedna._kernels import backend_name
from snakedna.chaos import CipherKey, LogisticParams, parse_key_text, format_key_text, validate_key
from snakedna.cipher import CipherOutput, decrypt, encrypt, encrypt_with_fingerprint, keygen
from snakedna.dna import DnaSequence
from snakedna.imagegrid import PixelGrid, read_pgm, write_pgm
from snakedna.metrics import MetricsReport, compute_report, report_to_json
from snakedna.sbox import SBox, SBoxSet, default_sbox_set

__version__ = "0.1.0"

__all__ = [
    "CipherKey",
    "CipherOutput",
    "DnaSequence",
    "LogisticParams",
    "MetricsReport",
    "PixelGrid",
    "SBox",
    "SBoxSet",
    "backend_name",
    "compute_report",
    "decrypt",
    "default_sbox_set",
    "encrypt",
    "encrypt_with_fingerprint",
    "format_key_text",
    "keygen",
    "parse_key_text",
    "read_pgm",
    "report_to_json",
    "validate_key",
    "write_pgm",
    "__version__",
]
