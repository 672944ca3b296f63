"""Command-line front end: encrypt, decrypt, analyze, keygen.

Exit codes: 0 success, 2 usage error, 3 key/stream error
(InvalidKey / DegenerateStream), 4 I/O or format error. Diagnostics go to
stderr; the analyze report goes to stdout unless --report is given, so it
can be piped.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from snakedna import chaos, cipher, dna, metrics, permute
from snakedna.errors import DegenerateStreamError, InvalidKeyError, SnakeDnaError
from snakedna.imagegrid import PixelGrid, read_pgm, write_pgm
from snakedna.sbox import SBoxSet, default_sbox_set, parse_sbox_text

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_KEY = 3
EXIT_IO = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="snakedna",
        description="Keyed grayscale image cipher with a statistical analysis suite.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    enc = sub.add_parser("encrypt", help="encrypt a binary PGM image")
    dec = sub.add_parser("decrypt", help="decrypt a binary PGM image")
    for p in (enc, dec):
        p.add_argument("--in", dest="input_path", required=True, help="input PGM path")
        p.add_argument("--out", dest="output_path", required=True, help="output PGM path")
        p.add_argument("--key", dest="key_path", required=True, help="key file path")
        p.add_argument("--sbox", dest="sbox_path", help="optional 3-box substitution file")
        p.add_argument(
            "--dump-dna",
            action="store_true",
            help="debug only: also write the image's nucleotide encoding "
            "(one line of symbols) next to the output as <out>.dna",
        )

    ana = sub.add_parser("analyze", help="compute the statistical metrics report")
    ana.add_argument("--in", dest="input_path", required=True, help="input PGM path")
    ana.add_argument("--report", dest="report_path", help="write JSON here instead of stdout")

    gen = sub.add_parser("keygen", help="generate a fresh key file")
    gen.add_argument("--out", dest="output_path", required=True, help="key file path")

    return parser


def _load_key(path: str) -> chaos.CipherKey:
    return chaos.parse_key_text(Path(path).read_text(encoding="ascii"))


def _load_boxes(path: str | None) -> SBoxSet:
    if path is None:
        return default_sbox_set()
    return parse_sbox_text(Path(path).read_text(encoding="ascii"))


def _read_grid(path: str) -> PixelGrid:
    return read_pgm(Path(path).read_bytes())


def _dump_dna(grid: PixelGrid, out_path: str) -> None:
    # the artifact dumped on both encrypt and decrypt: the nucleotide
    # encoding of the snaked plain image, i.e. what enters the shuffle
    sequence = dna.encode_grid(permute.snake(grid))
    Path(out_path + ".dna").write_text(sequence.to_text() + "\n", encoding="ascii")


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE

    try:
        if args.subcommand == "encrypt":
            plain = _read_grid(args.input_path)
            key = _load_key(args.key_path)
            boxes = _load_boxes(args.sbox_path)
            result = cipher.encrypt_with_fingerprint(plain, key, boxes)
            Path(args.output_path).write_bytes(write_pgm(result.cipher))
            if args.dump_dna:
                _dump_dna(plain, args.output_path)
            print(f"encrypted (key fingerprint {result.key_fingerprint})", file=sys.stderr)
            return EXIT_OK

        if args.subcommand == "decrypt":
            grid = _read_grid(args.input_path)
            key = _load_key(args.key_path)
            boxes = _load_boxes(args.sbox_path)
            plain = cipher.decrypt(grid, key, boxes)
            Path(args.output_path).write_bytes(write_pgm(plain))
            if args.dump_dna:
                _dump_dna(plain, args.output_path)
            print(f"decrypted (key fingerprint {cipher.key_fingerprint(key)})", file=sys.stderr)
            return EXIT_OK

        if args.subcommand == "analyze":
            grid = _read_grid(args.input_path)
            report = metrics.compute_report(grid)
            text = metrics.report_to_json(report)
            if args.report_path:
                Path(args.report_path).write_text(text + "\n", encoding="ascii")
            else:
                print(text)
            return EXIT_OK

        if args.subcommand == "keygen":
            key = cipher.keygen()
            Path(args.output_path).write_text(chaos.format_key_text(key), encoding="ascii")
            print(f"wrote key (fingerprint {cipher.key_fingerprint(key)})", file=sys.stderr)
            return EXIT_OK

        parser.error(f"unknown subcommand {args.subcommand!r}")
        return EXIT_USAGE

    except (InvalidKeyError, DegenerateStreamError) as exc:
        print(f"snakedna: {exc}", file=sys.stderr)
        return EXIT_KEY
    except (SnakeDnaError, OSError, ValueError) as exc:
        print(f"snakedna: {exc}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
