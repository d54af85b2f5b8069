import json

import pytest

from cayley.cli import main
from cayley.catalog import MON3_TEXT, SEMI3_TEXT, cyclic_group
from cayley.algebra import serialize_table

MON3_GRAPH_TEXT = """\
r a r
r b s
r c t
s a s
s b s
s c t
t a t
t b s
t c t
"""

SEMI3_GRAPH_TEXT = """\
p a p
p b r
q a r
q b q
r a r
r b r
"""


@pytest.fixture
def mon3_lgr(tmp_path):
    path = tmp_path / "mon3.lgr"
    path.write_text(MON3_GRAPH_TEXT)
    return str(path)


@pytest.fixture
def semi3_lgr(tmp_path):
    path = tmp_path / "semi3.lgr"
    path.write_text(SEMI3_GRAPH_TEXT)
    return str(path)


@pytest.fixture
def z3_lgr(tmp_path):
    path = tmp_path / "z3.lgr"
    path.write_text("0 a 1\n1 a 2\n2 a 0\n")
    return str(path)


class TestCheck:
    def test_exit_zero(self, z3_lgr, capsys):
        assert main(["check", z3_lgr]) == 0
        out = capsys.readouterr().out
        assert "deterministic: yes" in out
        assert "vertex 0:" in out and "propagating=yes" in out

    def test_nondeterministic_na(self, tmp_path, capsys):
        path = tmp_path / "nd.lgr"
        path.write_text("r a s\nr a t\n")
        assert main(["check", str(path)]) == 0
        out = capsys.readouterr().out
        assert "deterministic: no" in out
        assert "propagating=n/a: not deterministic" in out

    def test_empty_file_exit_2(self, tmp_path, capsys):
        path = tmp_path / "empty.lgr"
        path.write_text("")
        assert main(["check", str(path)]) == 2

    def test_missing_file_exit_3(self, tmp_path):
        assert main(["check", str(tmp_path / "nope.lgr")]) == 3

    def test_json_round_trip(self, z3_lgr, capsys):
        assert main(["check", z3_lgr, "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["structural"]["deterministic"] is True
        assert payload["structural"]["roots"] == ["0", "1", "2"]


class TestClassify:
    def test_mon3_text(self, mon3_lgr, capsys):
        assert main(["classify", mon3_lgr]) == 0
        out = capsys.readouterr().out
        assert "monoid: YES (vertex r)" in out
        assert "group: NO (not co-deterministic)" in out

    def test_semi3_json(self, semi3_lgr, capsys):
        assert main(["classify", semi3_lgr, "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        lattice = [v for v in payload["verdicts"] if v["class"] == "semilattice"][0]
        assert lattice["holds"] is True
        assert lattice["witness"]["injection"] == {"a": "p", "b": "q"}

    def test_single_edge_all_no(self, tmp_path, capsys):
        path = tmp_path / "one.lgr"
        path.write_text("r a s\n")
        assert main(["classify", str(path)]) == 0
        out = capsys.readouterr().out
        assert "YES" not in out

    def test_json_parses_back_identically(self, z3_lgr, capsys):
        assert main(["classify", z3_lgr, "--format", "json"]) == 0
        first = capsys.readouterr().out
        payload = json.loads(first)
        assert json.dumps(payload, indent=2, sort_keys=True) + "\n" == first

    def test_byte_deterministic(self, semi3_lgr, capsys):
        main(["classify", semi3_lgr])
        first = capsys.readouterr().out
        main(["classify", semi3_lgr])
        assert capsys.readouterr().out == first


class TestSynth:
    def test_mon3_path_mode(self, mon3_lgr, tmp_path, capsys):
        out = tmp_path / "out.mag"
        assert main(["synth", mon3_lgr, "--vertex", "r", "--mode", "path",
                     "-o", str(out)]) == 0
        assert out.read_text() == MON3_TEXT

    def test_precondition_failure_exit_1(self, mon3_lgr, tmp_path):
        out = tmp_path / "out.mag"
        assert main(["synth", mon3_lgr, "--vertex", "s", "--mode", "path",
                     "-o", str(out)]) == 1

    def test_chain_mode(self, z3_lgr, tmp_path):
        out = tmp_path / "z3.mag"
        assert main(["synth", z3_lgr, "--vertex", "0", "--mode", "chain",
                     "-o", str(out)]) == 0
        assert out.read_text() == serialize_table(cyclic_group(3))

    def test_unknown_vertex_exit_1(self, z3_lgr, tmp_path):
        assert main(["synth", z3_lgr, "--vertex", "9", "--mode", "path",
                     "-o", str(tmp_path / "x.mag")]) == 1


class TestBuild:
    def test_mag4(self, tmp_path):
        mag = tmp_path / "mag4.mag"
        mag.write_text(
            "elements r p q s\nr: r p q s\np: p r s p\nq: q s r q\ns: s p q r\n"
        )
        out = tmp_path / "mag4.lgr"
        assert main(["build", str(mag), "--generators", "p", "q",
                     "--labels", "p=a", "q=b", "-o", str(out)]) == 0
        assert out.read_text() == (
            "p a r\np b s\nq a s\nq b r\nr a p\nr b q\ns a p\ns b q\n"
        )

    def test_comma_separated_generators(self, tmp_path):
        mag = tmp_path / "z3.mag"
        mag.write_text(serialize_table(cyclic_group(3)))
        out = tmp_path / "z3.lgr"
        assert main(["build", str(mag), "--generators", "1,2", "-o", str(out)]) == 0
        assert "0 1 1" in out.read_text()

    def test_parse_error_exit_2(self, tmp_path):
        mag = tmp_path / "bad.mag"
        mag.write_text("elements a b\na: a\n")
        assert main(["build", str(mag), "--generators", "a"]) == 2


class TestRoundtrip:
    def test_z6_partial_generators(self, tmp_path, capsys):
        mag = tmp_path / "z6.mag"
        mag.write_text(serialize_table(cyclic_group(6)))
        assert main(["roundtrip", str(mag), "--generators", "2"]) == 0
        assert "equal on {0, 2, 4}" in capsys.readouterr().out

    def test_full_catalog_table(self, tmp_path):
        mag = tmp_path / "mon3.mag"
        mag.write_text(MON3_TEXT)
        assert main(["roundtrip", str(mag), "--generators", "s,t"]) == 0

    def test_requires_identity(self, tmp_path):
        mag = tmp_path / "semi3.mag"
        mag.write_text(SEMI3_TEXT)
        assert main(["roundtrip", str(mag), "--generators", "p,q"]) == 1
