import io

from ciskit.cli import main
from ciskit.cis import read_sbox
from ciskit.formats import read_code


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestConstruct:
    def test_double_circulant(self, capsys, tmp_path):
        rc, out, _ = run(
            capsys, "construct", "double-circulant", "--n", "15", "--f", "110101011010000"
        )
        assert rc == 0
        code = read_code(io.StringIO(out))
        assert (code.length, code.dimension) == (30, 15)
        assert code.min_distance() == 8

    def test_paley(self, capsys):
        rc, out, _ = run(capsys, "construct", "paley", "--q", "5")
        assert rc == 0
        code = read_code(io.StringIO(out))
        assert (code.length, code.dimension) == (10, 5)

    def test_octacode(self, capsys):
        rc, out, _ = run(capsys, "construct", "octacode")
        assert rc == 0
        assert out.splitlines()[0] == "z4 4 8"

    def test_cyclic_extend(self, capsys):
        rc, out, _ = run(capsys, "construct", "cyclic-extend", "--N", "7", "--g", "1101")
        assert rc == 0
        code = read_code(io.StringIO(out))
        assert (code.length, code.dimension, code.min_distance()) == (8, 4, 4)

    def test_cyclic_shorten(self, capsys):
        rc, out, _ = run(
            capsys, "construct", "cyclic-shorten", "--N", "7", "--g", "1101", "--at", "last"
        )
        assert rc == 0
        code = read_code(io.StringIO(out))
        assert (code.length, code.dimension) == (6, 3)

    def test_buildup(self, capsys, tmp_path):
        base = tmp_path / "base.txt"
        base.write_text("bin 3 6\n100011\n010101\n001111\n")
        rc, out, _ = run(
            capsys, "construct", "buildup", "--base", str(base), "--x", "110", "--y", "110"
        )
        assert rc == 0
        code = read_code(io.StringIO(out))
        assert code.min_distance() == 4

    def test_z4_qr(self, capsys):
        rc, out, _ = run(capsys, "construct", "z4-qr", "--p", "31")
        assert rc == 0
        assert out.splitlines()[0] == "z4 16 32"

    def test_missing_params(self, capsys):
        rc, _, err = run(capsys, "construct", "paley")
        assert rc == 2 and "error:" in err

    def test_bad_construction(self, capsys):
        rc, _, err = run(capsys, "construct", "paley", "--q", "9")
        assert rc == 2 and "error:" in err


class TestCheck:
    def test_golay_cis_systematic(self, capsys, tmp_path):
        from ciskit.constructions import golay_code
        from ciskit.formats import write_code

        path = tmp_path / "golay.txt"
        with open(path, "w") as fp:
            write_code(golay_code(), fp)
        rc, out, _ = run(capsys, "check", str(path), "--what", "cis-systematic")
        assert rc == 0 and out.strip() == "cis=yes"
        rc, out, _ = run(capsys, "check", str(path), "--what", "self-dual")
        assert rc == 0 and out.strip() == "self-dual=yes"
        rc, out, _ = run(capsys, "check", str(path), "--what", "distance")
        assert rc == 0 and out.strip() == "distance=8"

    def test_zero_column(self, capsys, tmp_path):
        path = tmp_path / "zero.txt"
        path.write_text("bin 2 4\n1010\n0110\n")
        rc, out, _ = run(capsys, "check", str(path), "--what", "cis")
        assert rc == 0
        assert out.strip() == "cis=no reason=dual-weight-1"

    def test_cis_with_partition(self, capsys, tmp_path):
        from data34 import RECORD_34_RIGHT_BLOCK

        rows = [
            ("0" * i + "1" + "0" * (16 - i)) + r
            for i, r in enumerate(RECORD_34_RIGHT_BLOCK)
        ]
        path = tmp_path / "c34.txt"
        path.write_text("bin 17 34\n" + "\n".join(rows) + "\n")
        rc, out, _ = run(capsys, "check", str(path), "--what", "cis")
        assert rc == 0
        assert out.startswith("cis=yes left=")
        rc, out, _ = run(capsys, "check", str(path), "--what", "distance")
        assert out.strip() == "distance=8"

    def test_fsd(self, capsys, tmp_path):
        path = tmp_path / "c6.txt"
        path.write_text("bin 3 6\n100011\n010101\n001111\n")
        rc, out, _ = run(capsys, "check", str(path), "--what", "fsd")
        assert rc == 0 and out.strip() == "fsd=yes"
        rc, out, _ = run(capsys, "check", str(path), "--what", "dual-distance")
        assert out.strip() == "dual-distance=3"

    def test_z4_file_cis(self, capsys, tmp_path):
        rc, out, _ = run(capsys, "construct", "octacode")
        path = tmp_path / "oc.z4"
        path.write_text(out)
        rc, out, _ = run(capsys, "check", str(path), "--what", "cis")
        assert rc == 0 and out.strip() == "cis=yes"
        rc, _, err = run(capsys, "check", str(path), "--what", "distance")
        assert rc == 2 and "error:" in err

    def test_parse_error(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("bin 2 3\n101\n01x\n")
        rc, _, err = run(capsys, "check", str(path), "--what", "cis")
        assert rc == 2 and "error:" in err


class TestGci:
    def test_octacode(self, capsys, tmp_path):
        out_path = tmp_path / "oc.txt"
        rc, out, _ = run(capsys, "construct", "octacode")
        out_path.write_text(out)
        sbox = tmp_path / "sbox.txt"
        rc, out, _ = run(capsys, "gci", str(out_path), "--export", str(sbox))
        assert rc == 0
        assert (
            out.strip()
            == "gci-order=6 method=walsh crosscheck=dual-distance agreement=yes"
        )
        with open(sbox) as fp:
            f = read_sbox(fp)
        assert f.n == 8 and sorted(f.table) == list(range(256))

    def test_extended_hamming(self, capsys, tmp_path):
        path = tmp_path / "h8.txt"
        path.write_text("bin 4 8\n10001110\n01001011\n00101101\n00010111\n")
        rc, out, _ = run(capsys, "gci", str(path))
        assert rc == 0
        assert out.startswith("gci-order=4 ")
        assert "agreement=yes" in out

    def test_identity_block(self, capsys, tmp_path):
        path = tmp_path / "ii.txt"
        path.write_text("bin 3 6\n100100\n010010\n001001\n")
        rc, out, _ = run(capsys, "gci", str(path))
        assert rc == 0
        assert out.startswith("gci-order=2 ")

    def test_not_systematic_cis(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("bin 2 4\n1010\n0110\n")
        rc, _, err = run(capsys, "gci", str(path))
        assert rc == 2 and "error:" in err


class TestClassify:
    def test_length8(self, capsys, tmp_path):
        out_file = tmp_path / "len8.txt"
        rc, out, _ = run(
            capsys, "classify", "--length", "8", "--method", "buildup",
            "--out", str(out_file),
        )
        assert rc == 0
        assert out.strip() == "len=8 total=27 d2=22 d3=4 d4=1"
        assert out_file.read_text().count("\n") == 27

    def test_length2(self, capsys):
        rc, out, _ = run(capsys, "classify", "--length", "2")
        assert rc == 0
        assert out.strip() == "len=2 total=1 d2=1"

    def test_length10_exhaustive_summary(self, capsys):
        rc, out, _ = run(capsys, "classify", "--length", "10", "--method", "exhaustive")
        assert rc == 0
        assert out.strip() == "len=10 total=195 d2=156 d3=35 d4=4"

    def test_budget(self, capsys):
        rc, _, err = run(capsys, "classify", "--length", "14")
        assert rc == 2 and "error:" in err


class TestMassBounds:
    def test_masscheck_n2(self, capsys):
        rc, out, _ = run(capsys, "masscheck", "--n", "2")
        assert rc == 0 and out.strip() == "gn=6 sum=6 complete=yes"

    def test_bounds(self, capsys):
        rc, out, _ = run(capsys, "bounds", "--n", "3", "--d", "2")
        assert rc == 0
        fields = dict(p.split("=") for p in out.split())
        assert int(fields["B"]) <= int(fields["M"])

    def test_bounds_empty_sum(self, capsys):
        rc, out, _ = run(capsys, "bounds", "--n", "2", "--d", "1")
        assert rc == 0 and out.startswith("M=0 ")

    def test_bounds_no_B_above_4(self, capsys):
        rc, out, _ = run(capsys, "bounds", "--n", "6", "--d", "3")
        assert rc == 0 and "B=" not in out

    def test_masscheck_budget(self, capsys):
        rc, _, err = run(capsys, "masscheck", "--n", "5")
        assert rc == 2 and "error:" in err
