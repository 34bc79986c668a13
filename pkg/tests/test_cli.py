"""Definition-file parsing, CLI commands, determinism, round trips."""

import json

import pytest

import hopfkit as hk
from hopfkit import cli
from hopfkit import fixtures as fx
from hopfkit.definitions import parse_text
from hopfkit.errors import (DefinitionSyntaxError, DimensionMismatch,
                            UnknownReference)

F2_BINV = json.dumps({
    "version": 1,
    "field": "rational",
    "declarations": [
        {"kind": "hopf", "name": "F2", "group_algebra": {"dihedral": 3}},
        {"kind": "map", "name": "B_inv", "on": "F2",
         "group_map": "inversion", "rota_baxter": True},
    ],
})

SMASH_DOC = json.dumps({
    "version": 1,
    "field": "rational",
    "declarations": [
        {"kind": "hopf", "name": "H", "group_algebra": {"cyclic": 3}},
        {"kind": "hopf", "name": "K", "group_algebra": {"cyclic": 2}},
        {"kind": "action", "name": "inv_act", "actor": "K", "carrier": "H",
         "group_action": {"e": {"e": "e", "g": "g", "g2": "g2"},
                          "g": {"e": "e", "g": "g2", "g2": "g"}}},
        {"kind": "smash", "name": "G", "left": "H", "right": "K",
         "action": "inv_act"},
    ],
})


@pytest.fixture
def f2_file(tmp_path):
    path = tmp_path / "f2.json"
    path.write_text(F2_BINV)
    return str(path)


@pytest.fixture
def smash_file(tmp_path):
    path = tmp_path / "smash.json"
    path.write_text(SMASH_DOC)
    return str(path)


# -- parsing ---------------------------------------------------------------------

def test_parse_fixture_two_declarations():
    defs = parse_text(F2_BINV)
    assert len(defs.declarations) == 2
    assert defs["F2"].kind == "hopf"
    assert defs["B_inv"].rota_baxter


def test_parse_unknown_reference():
    doc = json.dumps({"version": 1, "field": "rational", "declarations": [
        {"kind": "map", "name": "B", "on": "missing", "identity": True}]})
    with pytest.raises(UnknownReference):
        parse_text(doc)


def test_parse_forward_reference_rejected():
    doc = json.dumps({"version": 1, "field": "rational", "declarations": [
        {"kind": "map", "name": "B", "on": "H", "identity": True},
        {"kind": "hopf", "name": "H", "group_algebra": {"cyclic": 2}}]})
    with pytest.raises(UnknownReference):
        parse_text(doc)


def test_parse_wrong_length_row():
    doc = json.dumps({"version": 1, "field": "rational", "declarations": [
        {"kind": "hopf", "name": "H", "basis": ["e", "g"],
         "mul": [[0, 0, "1/1"]],  # wrong width: needs [i, j, k, scalar]
         "unit": [[0, "1/1"]], "comul": [[0, 0, 0, "1/1"], [1, 1, 1, "1/1"]],
         "counit": [[0, "1/1"], [1, "1/1"]],
         "antipode": [[0, 0, "1/1"], [1, 1, "1/1"]]}]})
    with pytest.raises(DimensionMismatch):
        parse_text(doc)


def test_parse_bad_version():
    with pytest.raises(DefinitionSyntaxError):
        parse_text(json.dumps({"version": 2, "declarations": []}))


def test_parse_duplicate_name():
    doc = json.dumps({"version": 1, "declarations": [
        {"kind": "hopf", "name": "H", "group_algebra": {"cyclic": 2}},
        {"kind": "hopf", "name": "H", "group_algebra": {"cyclic": 3}}]})
    with pytest.raises(DefinitionSyntaxError):
        parse_text(doc)


def test_parse_explicit_structure_constants():
    # Q[Z2] written out in full
    doc = json.dumps({"version": 1, "field": "rational", "declarations": [
        {"kind": "hopf", "name": "H", "basis": ["e", "g"],
         "mul": [[0, 0, 0, "1/1"], [0, 1, 1, "1/1"],
                 [1, 0, 1, "1/1"], [1, 1, 0, "1/1"]],
         "unit": [[0, "1/1"]],
         "comul": [[0, 0, 0, "1/1"], [1, 1, 1, "1/1"]],
         "counit": [[0, "1/1"], [1, "1/1"]],
         "antipode": [[0, 0, "1/1"], [1, 1, "1/1"]]}]})
    defs = parse_text(doc)
    h = defs["H"].obj
    assert hk.verify_hopf(h).passed
    assert h.structure_equal(fx.f1())


def test_parse_permutation_group():
    doc = json.dumps({"version": 1, "declarations": [
        {"kind": "group", "name": "S3",
         "group": {"permutations": [[1, 0, 2], [0, 2, 1]]}}]})
    defs = parse_text(doc)
    assert defs["S3"].obj.order == 6


def test_parse_prime_field_override():
    from hopfkit.linalg import Field
    defs = parse_text(F2_BINV, Field(5))
    assert defs.field.p == 5
    assert hk.verify_hopf(defs["F2"].obj).passed


# -- commands --------------------------------------------------------------------

def test_verify_exit_zero_nine_checks(f2_file, capsys):
    assert cli.main(["verify", f2_file]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 9 + 1  # 9 checks plus the summary line
    assert "result: PASS (9 checks)" in out


def test_verify_smash_file(smash_file, capsys):
    assert cli.main(["verify", smash_file]) == 0
    assert "result: PASS (16 checks)" in capsys.readouterr().out


def test_verify_failing_map_exit_one(tmp_path, capsys):
    doc = json.dumps({"version": 1, "declarations": [
        {"kind": "hopf", "name": "H", "group_algebra": {"dihedral": 3}},
        {"kind": "map", "name": "B", "on": "H", "group_map": "identity",
         "rota_baxter": True}]})
    path = tmp_path / "bad.json"
    path.write_text(doc)
    assert cli.main(["verify", str(path)]) == 1
    assert "FAIL  B.rota-baxter" in capsys.readouterr().out


def test_parse_error_exit_two(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert cli.main(["verify", str(path)]) == 2


def test_check_prop49_identity_map_witness(tmp_path, capsys):
    doc = json.dumps({"version": 1, "declarations": [
        {"kind": "hopf", "name": "H", "group_algebra": {"dihedral": 3}},
        {"kind": "map", "name": "B", "on": "H", "group_map": "identity"}]})
    path = tmp_path / "id.json"
    path.write_text(doc)
    assert cli.main(["check", "prop49", str(path)]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "(r,s" in out


@pytest.mark.parametrize("condition", ["op-module", "symmetric", "prop44",
                                       "prop48", "prop49", "central-image",
                                       "lemma218"])
def test_check_conditions_on_b_inv(f2_file, condition, capsys):
    code = cli.main(["check", condition, f2_file])
    out = capsys.readouterr().out
    if condition == "central-image":
        assert code == 1 and "FAIL" in out
    else:
        assert code == 0 and "PASS" in out


def test_derive_ybe_digest_stable(f2_file, tmp_path):
    out1 = tmp_path / "y1.json"
    out2 = tmp_path / "y2.json"
    assert cli.main(["derive", "ybe", f2_file, "--out", str(out1)]) == 0
    assert cli.main(["derive", "ybe", f2_file, "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    doc = json.loads(out1.read_text())
    c_decl = [d for d in doc["declarations"] if d["name"] == "B_inv_ybe_c"][0]
    assert len(c_decl["domain"]) == 36
    assert len(c_decl["matrix"]) == 36  # permutation-like braiding


def test_derive_circle_round_trip(f2_file, tmp_path, f2, b_inv_f2):
    out = tmp_path / "circle.json"
    assert cli.main(["derive", "circle", f2_file, "--out", str(out)]) == 0
    defs = parse_text(out.read_text())
    reparsed = defs["B_inv_circle"].obj
    direct = hk.descend(b_inv_f2).hopf
    assert reparsed.structure_equal(direct)


def test_derive_tilde_round_trip(f2_file, tmp_path, b_inv_f2):
    out = tmp_path / "tilde.json"
    assert cli.main(["derive", "tilde", f2_file, "--out", str(out)]) == 0
    defs = parse_text(out.read_text())
    assert defs["B_inv_tilde"].obj == hk.rb_tilde(b_inv_f2).map
    assert cli.main(["verify", str(out)]) == 0


def test_derive_embed(f2_file, tmp_path, f2):
    out = tmp_path / "embed.json"
    assert cli.main(["derive", "embed", f2_file, "--out", str(out)]) == 0
    defs = parse_text(out.read_text())
    assert defs["B_inv_ambient"].obj.dim == 36
    emb = hk.embed_into_rb(hk.brace_from_rb(fx.b_inv(f2)))
    assert defs["B_inv_ambient"].obj.structure_equal(emb.ambient)


def test_derive_smash(smash_file, tmp_path, f2):
    out = tmp_path / "smash_out.json"
    assert cli.main(["derive", "smash", smash_file, "--out", str(out)]) == 0
    defs = parse_text(out.read_text())
    smash = defs["G_smash"].obj
    assert hk.verify_hopf(smash).passed


def test_derive_conjugate_requires_using(f2_file, capsys):
    assert cli.main(["derive", "conjugate", f2_file]) == 2


def test_derive_posthopf_round_trip(f2_file, tmp_path, f2, b_inv_f2):
    out = tmp_path / "post.json"
    assert cli.main(["derive", "posthopf", f2_file, "--out", str(out)]) == 0
    defs = parse_text(out.read_text())
    p = hk.posthopf_from_rb(b_inv_f2)
    assert defs["B_inv_tri"].obj == p.tri
    assert defs["B_inv_beta"].obj == p.beta


def test_derive_matched_pair_round_trip(f2_file, tmp_path, b_inv_f2):
    out = tmp_path / "mp.json"
    assert cli.main(["derive", "matched-pair", f2_file, "--out", str(out)]) == 0
    defs = parse_text(out.read_text())
    m = hk.matched_pair_from_rb(b_inv_f2)
    assert defs["B_inv_lact"].obj == m.lact
    assert defs["B_inv_ract"].obj == m.ract
    assert defs["B_inv_circle"].obj.structure_equal(m.left)


def test_derive_cocycle_rb(tmp_path, f2):
    # an explicit identity cocycle over the flip brace's derived action
    br = hk.flip_brace(f2)
    from hopfkit.serialize import hopf_to_decl
    from hopfkit.brace import derived_action_map
    act = derived_action_map(br)
    act_entries = []
    for a in range(6):
        for i in range(6):
            col = act.columns[a * 6 + i]
            for j, c in col.items():
                act_entries.append([a, i, j, f2.field.render(c)])
    doc = {
        "version": 1, "field": "rational",
        "declarations": [
            hopf_to_decl("Hcirc", br.circle),
            hopf_to_decl("Hdot", br.dot),
            {"kind": "action", "name": "act", "actor": "Hcirc",
             "carrier": "Hdot", "matrix": act_entries},
            {"kind": "map", "name": "pi", "on": "Hcirc", "identity": True},
        ],
    }
    # identity map's domain is Hcirc's space but the cocycle goes to Hdot;
    # both share the space, so the parser accepts it
    doc["declarations"].append({"kind": "cocycle", "name": "C",
                                "source": "Hcirc", "target": "Hdot",
                                "action": "act", "map": "pi"})
    path = tmp_path / "coc.json"
    path.write_text(json.dumps(doc))
    assert cli.main(["verify", str(path)]) == 0
    out = tmp_path / "cocrb.json"
    assert cli.main(["derive", "cocycle-rb", str(path), "--out", str(out)]) == 0
    defs = parse_text(out.read_text())
    built = defs["C_ambient"].obj
    assert hk.verify_hopf(built).passed
    assert built.dim == 36


def test_report_byte_identical_across_thread_counts(f2_file, tmp_path):
    r1 = tmp_path / "r1.json"
    r2 = tmp_path / "r2.json"
    assert cli.main(["report", f2_file, "--format", "json", "--threads", "1",
                     "--out", str(r1)]) == 0
    assert cli.main(["report", f2_file, "--format", "json", "--threads", "8",
                     "--out", str(r2)]) == 0
    assert r1.read_bytes() == r2.read_bytes()


def test_search_rb_group(tmp_path, capsys):
    doc = json.dumps({"version": 1, "declarations": [
        {"kind": "group", "name": "S3", "group": {"dihedral": 3}}]})
    path = tmp_path / "grp.json"
    path.write_text(doc)
    assert cli.main(["search", "rb-group", str(path)]) == 0
    out = capsys.readouterr().out
    assert "group S3: 8 operators" in out


def test_search_includes_group_algebra_backing_group(f2_file, capsys):
    assert cli.main(["search", "rb-group", f2_file]) == 0
    assert "F2: 8 operators" in capsys.readouterr().out


def test_field_flag_switches_to_prime_field(f2_file, capsys):
    assert cli.main(["verify", f2_file, "--field", "7"]) == 0
    assert "field: 7" in capsys.readouterr().out


def test_cocycle_and_brace_declarations(tmp_path, capsys):
    # brace from rb construction; cocycle via matrices is exercised through
    # the canonical identity cocycle of the flip brace
    doc = json.dumps({"version": 1, "declarations": [
        {"kind": "hopf", "name": "H", "group_algebra": {"dihedral": 3}},
        {"kind": "map", "name": "B", "on": "H", "group_map": "inversion"},
        {"kind": "rb", "name": "RB", "hopf": "H", "map": "B"},
        {"kind": "brace", "name": "Br", "rb": "RB"}]})
    path = tmp_path / "brace.json"
    path.write_text(doc)
    assert cli.main(["verify", str(path)]) == 0
    out = capsys.readouterr().out
    assert "PASS  RB.rota-baxter" in out
    assert "PASS  Br.brace" in out
    assert cli.main(["check", "symmetric", str(path)]) == 0


def test_factorization_declaration(tmp_path, capsys):
    doc = json.dumps({"version": 1, "declarations": [
        {"kind": "hopf", "name": "H", "group_algebra": {"dihedral": 3}},
        {"kind": "factorization", "name": "F", "ambient": "H",
         "h": ["e"], "l": ["e", "r", "r2"], "m": ["e", "s"],
         "middle_rb": "unit-counit"}]})
    path = tmp_path / "fact.json"
    path.write_text(doc)
    assert cli.main(["verify", str(path)]) == 0
    assert "PASS  F.factorization" in capsys.readouterr().out
