import io
from pathlib import Path

import pytest

from toricauto import fanio
from toricauto.cli import VERBS, parse_divisor, parse_kclass, run
from toricauto.divisors import DivisorClass, TorusDivisor
from toricauto.errors import NotComplete
from toricauto.fan import hirzebruch, paper_example
from toricauto.report import parse

FIXTURE = Path(__file__).resolve().parents[1] / "fixtures" / "paper-example.fan"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def test_fixture_is_the_example():
    assert fanio.load_fan(FIXTURE) == paper_example()
    assert FIXTURE.read_text() == fanio.dumps(paper_example())


def test_fan_text_roundtrip(tmp_path, fans_small):
    for f in fans_small:
        p = tmp_path / "f.fan"
        fanio.dump_fan(f, p)
        first = p.read_bytes()
        g = fanio.load_fan(p)
        assert g == f
        fanio.dump_fan(g, p)
        assert p.read_bytes() == first


def test_fan_text_comments_and_errors():
    text = "# eight-ray surface\n\n1 0\n0 1   # second ray\n-1 -1\n"
    assert fanio.loads(text).rays == ((1, 0), (0, 1), (-1, -1))
    with pytest.raises(fanio.FanParseError) as info:
        fanio.loads("1 0\n0 1 2\n-1 -1\n")
    assert info.value.line == 2 and "line 2" in str(info.value)
    with pytest.raises(fanio.FanParseError) as info:
        fanio.loads("1 0\n0 x\n")
    assert info.value.line == 2
    with pytest.raises(NotComplete):
        fanio.loads("1 0\n0 1\n-1 0\n")


def test_analyze_fixture():
    code, out, _ = call("analyze", FIXTURE)
    assert code == 0
    assert "torsion Z/2 [2]" in out and "conclusion: GENERATED" in out
    code, out, _ = call("analyze", FIXTURE, "--format", "structured")
    assert code == 0 and parse(out).torsion == (2,)


def test_validate_bad_fan(tmp_path):
    p = tmp_path / "bad.fan"
    p.write_text("1 0\n0 1\n-1 0\n")
    code, _, err = call("validate", p)
    assert code == 1 and "NotComplete" in err and "ray 3" in err
    p.write_text("1 0\n0 1 5\n")
    code, _, err = call("validate", p)
    assert code == 1 and "line 2" in err
    code, _, err = call("validate", tmp_path / "missing.fan")
    assert code == 1


def test_usage_errors():
    code, _, err = call("frobnicate")
    assert code == 1 and "usage" in err
    code, _, err = call("census", "--max-rays", "x", "--bound", "2")
    assert code == 1
    code, _, err = call("census", "-m", "5")
    assert code == 1
    assert len(VERBS) == 9


def test_census_verb():
    code, out, _ = call("census", "--max-rays", "6", "--bound", "2", "--fano")
    assert code == 0 and out.startswith("5 classes")
    code, out, _ = call("census", "--max-rays", "5", "--bound", "2", "--fano")
    assert out.startswith("4 classes")


def test_pic_and_cohomology_verbs():
    code, out, _ = call("pic", FIXTURE)
    assert code == 0
    assert "D_1 = D_3 + 2 D_4 + D_5 - D_7 - 2 D_8" in out
    assert "torsion: [2]" in out
    code, out, _ = call("cohomology", FIXTURE, "--divisor=-1,0,0,0,0,0,0,0")
    assert code == 0 and "h: 0 0 0" in out
    code, out, _ = call("cohomology", FIXTURE, "--divisor", "pic:1,0,0,0,0,0")
    assert code == 0 and "h: 1 1 0" in out
    code, out, _ = call("cohomology", FIXTURE, "--divisor", "1,2")
    assert code == 1


def test_ktheory_verb():
    code, out, _ = call("ktheory", FIXTURE, "--curve", "6", "--degree", "0", "--presentation", "--relations")
    assert code == 0
    assert "euler(S,S): 2" in out and "special pair: yes" in out
    assert "chain D_5 D_6 D_7: relations hold" in out
    code, out, _ = call("ktheory", FIXTURE, "--euler", "1,0,0,0,0,0,0,1/0,0,0,0,0,0,0,1")
    assert code == 0 and "euler: 1" in out
    code, _, _ = call("ktheory", FIXTURE)
    assert code == 1


def test_construct_and_minimal_model(tmp_path):
    p = tmp_path / "c.fan"
    assert call("construct", "--chains", "1,1,3", "--output", p)[0] == 0
    code, out, _ = call("minimal-model", p)
    assert code == 0 and out.startswith("base:")
    code, out, _ = call("construct", "--surface", "hirzebruch", "--n", "2")
    assert fanio.loads(out) == hirzebruch(2)
    assert call("construct")[0] == 1


def test_separation_verb():
    code, out, _ = call("separation-search", "--alpha-bound", "10", "--length-bound", "10")
    assert code == 0 and out.startswith("0 solutions")


def test_invariant_violation_exit_code(monkeypatch, tmp_path):
    from toricauto import cli
    from toricauto.errors import InvariantViolation

    def broken(f, canonical=False):
        raise InvariantViolation("holonomy is not the identity", f.rays)

    monkeypatch.setattr(cli, "analyze", broken)
    code, _, err = call("analyze", FIXTURE)
    assert code == 2
    assert "invariant violation" in err and "2 -1" in err


def test_argument_parsers():
    f = paper_example()
    assert parse_divisor(f, "pic:1,0,0,0,0,0") == DivisorClass((1, 0, 0, 0, 0, 0))
    assert parse_divisor(f, "1,0,0,0,0,0,0,0") == TorusDivisor((1, 0, 0, 0, 0, 0, 0, 0))
    assert parse_kclass(f, "1,0,0,0,0,0,0,1").rank == 1
    big = 10**40
    assert parse_divisor(f, f"pic:{big},0,0,0,0,0").coords[0] == big
