import json

import numpy as np
import pytest

from snakedna.chaos import parse_key_text
from snakedna.cli import EXIT_IO, EXIT_KEY, EXIT_OK, EXIT_USAGE, run
from snakedna.imagegrid import from_raw, read_pgm, write_pgm
from snakedna.sbox import default_sbox_set, format_sbox_text


@pytest.fixture()
def workdir(tmp_path):
    rng = np.random.default_rng(31)
    grid = from_raw(32, 24, rng.integers(0, 256, 32 * 24, dtype=np.uint8))
    plain = tmp_path / "plain.pgm"
    plain.write_bytes(write_pgm(grid))
    key = tmp_path / "key.txt"
    assert run(["keygen", "--out", str(key)]) == EXIT_OK
    return tmp_path, plain, key


def test_keygen_writes_parseable_key(tmp_path):
    key_path = tmp_path / "k.txt"
    assert run(["keygen", "--out", str(key_path)]) == EXIT_OK
    parse_key_text(key_path.read_text())


def test_encrypt_decrypt_round_trip(workdir):
    tmp, plain, key = workdir
    cipher = tmp / "cipher.pgm"
    restored = tmp / "restored.pgm"
    assert run(["encrypt", "--in", str(plain), "--out", str(cipher), "--key", str(key)]) == EXIT_OK
    assert run(["decrypt", "--in", str(cipher), "--out", str(restored), "--key", str(key)]) == EXIT_OK
    assert restored.read_bytes() == plain.read_bytes()
    assert cipher.read_bytes() != plain.read_bytes()


def test_encrypt_is_deterministic(workdir):
    tmp, plain, key = workdir
    out1 = tmp / "c1.pgm"
    out2 = tmp / "c2.pgm"
    run(["encrypt", "--in", str(plain), "--out", str(out1), "--key", str(key)])
    run(["encrypt", "--in", str(plain), "--out", str(out2), "--key", str(key)])
    assert out1.read_bytes() == out2.read_bytes()


def test_input_file_never_mutated(workdir):
    tmp, plain, key = workdir
    before = plain.read_bytes()
    run(["encrypt", "--in", str(plain), "--out", str(tmp / "c.pgm"), "--key", str(key)])
    run(["analyze", "--in", str(plain)])
    assert plain.read_bytes() == before


def test_custom_sbox_round_trip(workdir):
    tmp, plain, key = workdir
    sbox_path = tmp / "boxes.txt"
    # three valid bijections that differ from the defaults, so the test also
    # proves the flag is honored, not silently ignored
    blocks = [
        [255 - b for b in range(256)],
        [(b + 1) % 256 for b in range(256)],
        [b ^ 0xA5 for b in range(256)],
    ]
    sbox_path.write_text("\n".join(" ".join(map(str, block)) for block in blocks))
    cipher = tmp / "c.pgm"
    default_cipher = tmp / "cd.pgm"
    restored = tmp / "r.pgm"
    args = ["--key", str(key), "--sbox", str(sbox_path)]
    assert run(["encrypt", "--in", str(plain), "--out", str(cipher)] + args) == EXIT_OK
    run(["encrypt", "--in", str(plain), "--out", str(default_cipher), "--key", str(key)])
    assert cipher.read_bytes() != default_cipher.read_bytes()
    assert run(["decrypt", "--in", str(cipher), "--out", str(restored)] + args) == EXIT_OK
    assert restored.read_bytes() == plain.read_bytes()


def test_sbox_file_of_default_boxes_matches_builtin(workdir):
    tmp, plain, key = workdir
    sbox_path = tmp / "boxes.txt"
    sbox_path.write_text(format_sbox_text(default_sbox_set()))
    via_file = tmp / "c1.pgm"
    builtin = tmp / "c2.pgm"
    run(["encrypt", "--in", str(plain), "--out", str(via_file), "--key", str(key), "--sbox", str(sbox_path)])
    run(["encrypt", "--in", str(plain), "--out", str(builtin), "--key", str(key)])
    assert via_file.read_bytes() == builtin.read_bytes()


def test_dump_dna_flag(workdir):
    tmp, plain, key = workdir
    cipher = tmp / "c.pgm"
    restored = tmp / "r.pgm"
    run(["encrypt", "--in", str(plain), "--out", str(cipher), "--key", str(key), "--dump-dna"])
    run(["decrypt", "--in", str(cipher), "--out", str(restored), "--key", str(key), "--dump-dna"])
    enc_dump = (tmp / "c.pgm.dna").read_text().strip()
    dec_dump = (tmp / "r.pgm.dna").read_text().strip()
    grid = read_pgm(plain.read_bytes())
    assert len(enc_dump) == 4 * grid.width * grid.height
    assert set(enc_dump) <= set("ACGT")
    # both sides dump the same artifact: the encoding of the plain image
    assert enc_dump == dec_dump


def test_analyze_to_stdout(workdir, capsys):
    tmp, plain, key = workdir
    assert run(["analyze", "--in", str(plain)]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert set(payload) >= {"entropy", "chi_square", "histogram"}


def test_analyze_constant_image(tmp_path, capsys):
    path = tmp_path / "flat.pgm"
    path.write_bytes(write_pgm(from_raw(16, 16, [77] * 256)))
    assert run(["analyze", "--in", str(path)]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["entropy"] == 0.0
    assert payload["corr_horizontal"] == "ZeroVariance"


def test_analyze_report_file(workdir):
    tmp, plain, key = workdir
    report = tmp / "report.json"
    assert run(["analyze", "--in", str(plain), "--report", str(report)]) == EXIT_OK
    json.loads(report.read_text())


class TestExitCodes:
    def test_missing_key_flag_is_usage_error(self, workdir, capsys):
        tmp, plain, _ = workdir
        code = run(["encrypt", "--in", str(plain), "--out", str(tmp / "c.pgm")])
        capsys.readouterr()
        assert code == EXIT_USAGE

    def test_unknown_subcommand_is_usage_error(self, capsys):
        assert run(["frobnicate"]) == EXIT_USAGE
        capsys.readouterr()

    def test_bad_key_file_reports_key_error(self, workdir):
        tmp, plain, _ = workdir
        bad_key = tmp / "bad.txt"
        bad_key.write_text("selector_r=3.9\nmystery=1\n")
        code = run(["encrypt", "--in", str(plain), "--out", str(tmp / "c.pgm"), "--key", str(bad_key)])
        assert code == EXIT_KEY

    def test_degenerate_key_reports_key_error(self, workdir):
        tmp, plain, _ = workdir
        degenerate = tmp / "deg.txt"
        degenerate.write_text(
            "selector_r=3.99\nselector_x0=0.4\nshuffle_r=3.99\nshuffle_x0=0.3\n"
            "xor_r=4.0\nxor_x0=0.5\nburn_in=0\n"
        )
        code = run(["encrypt", "--in", str(plain), "--out", str(tmp / "c.pgm"), "--key", str(degenerate)])
        assert code == EXIT_KEY

    def test_missing_input_is_io_error(self, workdir):
        tmp, _, key = workdir
        code = run(["encrypt", "--in", str(tmp / "nope.pgm"), "--out", str(tmp / "c.pgm"), "--key", str(key)])
        assert code == EXIT_IO

    def test_malformed_image_is_io_error(self, workdir):
        tmp, _, key = workdir
        bad = tmp / "bad.pgm"
        bad.write_bytes(b"P6\n2 2\n255\n" + bytes(12))
        code = run(["encrypt", "--in", str(bad), "--out", str(tmp / "c.pgm"), "--key", str(key)])
        assert code == EXIT_IO

    def test_invalid_sbox_file_is_io_error(self, workdir):
        tmp, plain, key = workdir
        sbox_path = tmp / "boxes.txt"
        sbox_path.write_text("1 2 3\n")
        code = run(
            ["encrypt", "--in", str(plain), "--out", str(tmp / "c.pgm"),
             "--key", str(key), "--sbox", str(sbox_path)]
        )
        assert code == EXIT_IO
