import json
import subprocess
import sys

import pytest

from qlab.cli import main
from qlab.constructions import c2, c3, corpus, swap_locale
from qlab.errors import ParseError, ValidationError
from qlab.io import Document, parse, serialize, serialize_lattice, serialize_quantale, structure_hash
from qlab.lattice import make_diamond_m5
from qlab.modules import self_module
from qlab.report import AnalysisReport, analyze

C2_TEXT = """\
# two-element locale
quantale c2
order 2
join
0 1
1 1
mult
0 0
0 1
end
"""


# -- parsing -------------------------------------------------------------------

def test_parse_c2():
    doc = parse(C2_TEXT)
    assert doc.kind == "quantale" and doc.name == "c2"
    assert doc.quantale == c2()


def test_parse_lattice():
    doc = parse(serialize_lattice(make_diamond_m5(), "m5"))
    assert doc.kind == "lattice" and doc.structure == make_diamond_m5()


def test_non_associative_file():
    text = """\
quantale bad
order 3
join
0 1 2
1 1 2
2 2 2
mult
0 0 0
0 0 2
0 1 1
end
"""
    with pytest.raises(ValidationError) as e:
        parse(text)
    assert e.value.law == "NonAssociative"
    a, b, c = e.value.witnesses
    m = [[0, 0, 0], [0, 0, 2], [0, 1, 1]]
    assert m[m[a][b]][c] != m[a][m[b][c]]


@pytest.mark.parametrize(
    "text, line, col",
    [
        ("quantale c2\norder two\n", 2, 7),
        ("semigroup x\n", 1, 1),
        ("quantale c2\norder 2\njoin\n0 1\n1 1\nmul\n", 6, 1),
        ("quantale c2\norder 2\njoin\n0 1\n1\n", 6, 1),
        ("lattice c2\norder 2\njoin\n0 1\n1 1\nend\nextra\n", 7, 1),
        ("quantale c2\norder 0\n", 2, 7),
        ("quantale c2\norder 2\njoin\n0 1\n1 1\nmult\n0 0\n0 x\nend\n", 8, 3),
    ],
)
def test_parse_errors_have_positions(text, line, col):
    with pytest.raises(ParseError) as e:
        parse(text)
    assert (e.value.line, e.value.col) == (line, col)


def test_comments_and_whitespace_ignored():
    messy = "quantale   c2 # name\n order 2\njoin 0 1\n 1 1 mult 0 0 0 1\nend   \n\n"
    assert parse(messy).quantale == c2()
    assert serialize(parse(messy)) == serialize(parse(C2_TEXT))


def test_module_block(data_dir):
    doc = parse((data_dir / "c3_module.qnt").read_text())
    assert doc.kind == "module" and doc.module_name == "from_m"
    assert doc.structure is doc.module
    assert parse(serialize(doc)) == doc


def test_module_round_trip():
    Q = c3()
    Mod = self_module(Q)
    doc = Document("module", "c3", Q.lattice, Q, Mod, "self")
    again = parse(serialize(doc))
    assert again.module.act == Mod.act and again.module.lattice == Mod.lattice


def test_module_block_validated():
    bad = serialize_quantale(c2(), "c2") + "module m\nside left\norder 2\njoin\n0 1\n1 1\naction\n1 1\n1 1\nend\n"
    with pytest.raises(ValidationError) as e:
        parse(bad)
    assert e.value.law.startswith("NotJoinDistributive")


def test_star_round_trip():
    Q = swap_locale()
    text = serialize_quantale(Q, "swap")
    assert "star\n0 2 1 3\n" in text
    assert parse(text).quantale == Q


def test_round_trip_on_corpus():
    for Q in corpus(4) + corpus(4, with_star=True):
        text = serialize_quantale(Q, "q")
        doc = parse(text)
        assert doc.quantale == Q
        assert serialize(doc) == text


def test_serialization_format():
    text = serialize_quantale(c2(), "c2")
    assert text == "quantale c2\norder 2\njoin\n0 1\n1 1\nmult\n0 0\n0 1\nend\n"
    assert all(line == line.strip() for line in text.splitlines())


def test_structure_hash_ignores_name():
    assert structure_hash(c2()) == structure_hash(parse(C2_TEXT).quantale)
    assert structure_hash(c2()) != structure_hash(c3())
    assert len(structure_hash(c2())) == 16


# -- reports -------------------------------------------------------------------

def test_report_round_trip():
    rep = analyze(c3(), "c3")
    again = AnalysisReport.from_json(rep.to_json())
    assert again == rep
    assert rep.to_json() == again.to_json()


def test_report_contents():
    rep = analyze(c3(), "c3")
    assert rep.order == 3 and not rep.simple and rep.semisimple
    assert rep.two_sided_primes == [0, 1]
    assert rep.cyclic_sets == [[0], [1]]
    assert rep.all_passed


# -- CLI -------------------------------------------------------------------------

def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_validate(data_dir, capsys):
    code, out, _ = run(["validate", str(data_dir / "c2.qnt")], capsys)
    assert code == 0 and "ok" in out


def test_cli_validate_module(data_dir, capsys):
    code, out, _ = run(["validate", str(data_dir / "c3_module.qnt")], capsys)
    assert code == 0 and "module from_m" in out


def test_cli_analyze_json(data_dir, capsys):
    code, out, _ = run(["analyze", str(data_dir / "c2.qnt"), "--json"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["simple"] is True and rep["semisimple"] is True
    assert list(rep) == list(AnalysisReport.__dataclass_fields__)


def test_cli_analyze_json_byte_stable(data_dir):
    cmd = [sys.executable, "-m", "qlab", "analyze", str(data_dir / "swap.qnt"), "--json"]
    outs = {subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(3)}
    assert len(outs) == 1


def test_cli_check_z2(data_dir, capsys):
    code, out, _ = run(["check", str(data_dir / "z2.qnt")], capsys)
    assert code == 0
    assert "simple=false" in out
    assert "1·1=0" in out


def test_cli_quotient(data_dir, capsys):
    code, out, _ = run(["quotient", str(data_dir / "c3.qnt"), "--collapse", "1,2"], capsys)
    assert code == 0
    assert parse(out).quantale == c2()


def test_cli_quotient_star(data_dir, capsys):
    code, out, _ = run(["quotient", str(data_dir / "swap.qnt"), "--collapse", "1,0", "--star"], capsys)
    assert code == 0 and parse(out).quantale.n == 1
    code, out, _ = run(["quotient", str(data_dir / "c3.qnt"), "--collapse", "1,0", "--star"], capsys)
    assert code == 2


def test_cli_quotient_bad_args(data_dir, capsys):
    assert run(["quotient", str(data_dir / "c3.qnt"), "--collapse", "1"], capsys)[0] == 2
    assert run(["quotient", str(data_dir / "c3.qnt"), "--collapse", "1,9"], capsys)[0] == 2


def test_cli_endo(data_dir, capsys):
    code, out, _ = run(["endo", str(data_dir / "m5.lat")], capsys)
    assert code == 0
    assert parse(out).quantale.n == 50


def test_cli_enumerate(tmp_path, capsys):
    code, out, _ = run(["enumerate", "--order", "3", "--up-to-iso", "--out", str(tmp_path)], capsys)
    assert code == 0
    files = sorted(tmp_path.glob("*.qnt"))
    assert len(files) == 12
    for f in files:
        Q = parse(f.read_text()).quantale
        assert f.stem == structure_hash(Q)
    code, out, _ = run(["check", str(tmp_path)], capsys)
    assert code == 0
    assert out.count("PASS") == 12


def test_cli_enumerate_guard(tmp_path, capsys):
    code, _, err = run(["enumerate", "--order", "5", "--out", str(tmp_path)], capsys)
    assert code == 2 and "limit" in err


def test_cli_errors(tmp_path, capsys):
    bad = tmp_path / "bad.qnt"
    bad.write_text("quantale x\norder 2\njoin\n0 1\n1 1\nmult\n1 1\n1 1\nend\n")
    code, _, err = run(["validate", str(bad)], capsys)
    assert code == 1 and "BottomNotAbsorbed" in err
    bad.write_text("quantale x\norder\n")
    code, _, err = run(["validate", str(bad)], capsys)
    assert code == 2 and "line" in err
    code, _, _ = run(["validate", str(tmp_path / "missing.qnt")], capsys)
    assert code == 2
    with pytest.raises(SystemExit) as e:
        main(["no-such-command"])
    assert e.value.code == 2


def test_cli_analyze_needs_quantale(data_dir, capsys):
    code, _, _ = run(["analyze", str(data_dir / "m5.lat")], capsys)
    assert code == 2


def test_cli_selftest(capsys):
    code, out, _ = run(["selftest", "--max-order", "3"], capsys)
    assert code == 0 and out.startswith("PASS selftest")
