import random

import yaml

from toricauto.fan import Fan, blow_up, hirzebruch, paper_example, projective_plane
from toricauto.lattice import IntMatrix
from toricauto.neg2 import minus_two_set
from toricauto.report import AUT_CAVEAT, SCHEMA, Conclusion, analyze, parse, render


def test_paper_example_report():
    r = analyze(paper_example())
    assert r.conclusion is Conclusion.GENERATED
    assert r.torsion == (2,)
    assert [ch.type for ch in r.chains] == ["A_1", "A_1", "A_3"]
    assert r.chains[2].braid_subgroup == "braid group on 3 strands"
    assert r.complement == ()
    text = render(r)
    assert "torsion Z/2 [2]" in text
    assert "conclusion: GENERATED" in text


def test_hirzebruch_conclusions():
    for n in range(3, 8):
        r = analyze(hirzebruch(n))
        assert r.conclusion is Conclusion.STANDARD_ONLY
        assert "Aut(D(X)) = A(X)" in render(r)
    r = analyze(hirzebruch(2))
    assert r.conclusion is Conclusion.SEMIDIRECT
    assert len(r.chains) == 1 and r.chains[0].rays == (2,)
    assert r.complement == ((1, 0),) and r.complement_text == ("D_3",)
    text = render(r)
    assert "B(X) ⋊ (P ⋊ Aut(X)) × Z[1]" in text
    assert "P = <D_3>" in text
    for n in (0, 1):
        assert analyze(hirzebruch(n)).conclusion is Conclusion.STANDARD_ONLY
    assert analyze(projective_plane()).conclusion is Conclusion.STANDARD_ONLY


def test_mandatory_strings(fans_small):
    for f in fans_small[:20]:
        r = analyze(f)
        text = render(r)
        assert AUT_CAVEAT in text and "not claimed complete" in text
        assert "Aut(X) ∩ B(X) = 1" in text
        assert "Pic(X) ∩ B(X) = Pic_Δ(X)" in text
        assert (r.conclusion is Conclusion.STANDARD_ONLY) == (not minus_two_set(f))
        if r.conclusion is Conclusion.SEMIDIRECT:
            assert r.conditions.c5.splits


def test_structured_roundtrip(fans_small):
    for f in fans_small + [paper_example(), hirzebruch(2), hirzebruch(4)]:
        r = analyze(f)
        s = render(r, "structured")
        assert s.startswith(f"schema: {SCHEMA}\n")
        assert parse(s) == r
        assert render(parse(s), "structured") == s
        assert yaml.safe_load(s)["conclusion"]["kind"] == r.conclusion.value


def test_rendering_is_deterministic_up_to_equivalence():
    f = paper_example()
    m = IntMatrix([[2, 1], [1, 1]])
    rays = [m.apply(v) for v in f.rays]
    g = Fan(tuple(rays[3:] + rays[:3]))
    assert render(analyze(f, canonical=True)) == render(analyze(g, canonical=True))
    assert render(analyze(f)) == render(analyze(f))


def test_blowups_keep_generated_while_delta_nonempty():
    rng = random.Random(21)
    f = paper_example()
    for _ in range(15):
        f = blow_up(f, rng.randint(1, len(f)))
        r = analyze(f)
        assert sorted(i for ch in r.chains for i in ch.rays) == minus_two_set(f)
        if minus_two_set(f):
            assert r.conclusion is not Conclusion.STANDARD_ONLY


def test_parse_rejects_other_documents():
    import pytest

    with pytest.raises(ValueError):
        parse("schema: other/1\n")
    with pytest.raises(ValueError):
        render(analyze(projective_plane()), "json")
