import re

import pytest

from skewlab import cli
from skewlab.config import parse_config, parse_endo_expr, parse_ring_expr
from skewlab.errors import ConfigError

EVAL0_CONFIG = """\
# Z_2[x] window with f -> f(0)
ring W = BoundedPoly(Zn(2), 2)
endo s on W = eval0
task verify W s theorems=T2.3 D=2 N=3
"""


def run_text(tmp_path, text, *flags):
    path = tmp_path / "job.cfg"
    path.write_text(text, encoding="utf-8")
    return cli.main([str(path), *flags])


def machine_rows(out):
    return [line.split("\t") for line in out.splitlines() if line.startswith("RESULT\t")]


# ---------------------------------------------------------------- parsing

def test_parse_minimal():
    doc = parse_config("ring R = Zn(4)\ntask check R - property=baer\n")
    assert doc.rings["R"].order == 4
    t = doc.tasks[0]
    assert t.kind == "check" and t.endo is None and t.names == ("baer",)


def test_parse_full_grammar():
    doc = parse_config("""
        ring A = GF(2, 2)
        ring B = PolyQuot(Zn(3), "t^2+1")
        ring C = Product(Zn(2), Zn(2))
        ring M = Mat(2, Zn(2))
        ring T = UpperTri(2, Zn(3))
        ring W = BoundedPoly(Zn(2), 2)
        ring Q = GroupAlg(Zn(2), Q8)
        endo f on A = frobenius(2)
        endo s on C = swap
        endo k on W = eval0
        endo t on C = table{(0,0)->(0,0), (1,0)->(0,1), (0,1)->(1,0), (1,1)->(1,1)}
        bounds D=1 N=2 seed=7
        task check C t property=reduced,sigma_rigid
        task verify A f theorems=T2.3,L3.1 D=2
        task search P=reduced Q=sigma_rigid max_order=4 expect=fails
    """)
    assert [doc.rings[k].order for k in "ABCMTWQ"] == [4, 9, 4, 16, 27, 8, 256]
    assert doc.endos["t"] == doc.endos["s"]
    assert doc.bounds.D == 1 and doc.bounds.seed == 7
    assert doc.tasks[1].overrides == {"D": 2}
    assert doc.tasks[2].expect_fail


@pytest.mark.parametrize("text, line, fragment", [
    ("ring R = Zn(4)\nendo s on R = swap\n", 2, "Product"),
    ("ring R = Zn(4)\n\ntask check R - property=nonsense\n", 3, "unknown property"),
    ("ring R = Zn(4)\ntask check S - property=baer\n", 2, "undeclared ring"),
    ("ring R = Zn(4)\ntask check R s property=baer\n", 2, "undeclared endomorphism"),
    ("ring R = Zn(4\n", 1, "malformed"),
    ("ring R = Foo(2)\n", 1, "unknown ring constructor"),
    ("ring R = Zn(2)\nendo s on R = table{0->1, 1->1}\n", 2, ""),
    ("bounds D=0\n", 1, "positive"),
    ("ring R = Zn(4)\ntask verify R - theorems=T9\n", 2, "unknown theorem"),
    ("frobnicate\n", 1, "unknown directive"),
    ("ring R = Zn(4)\nring R = Zn(2)\n", 2, "twice"),
])
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(ConfigError) as info:
        parse_config(text)
    assert info.value.line == line
    assert fragment in str(info.value)


def test_ring_and_endo_expressions():
    r = parse_ring_expr("Product(GF(2,2), Zn(3))")
    assert r.order == 12
    dual = parse_ring_expr('PolyQuot(Zn(2), "t^2")')
    s = parse_endo_expr("table{0->0, 1->1, t->0, 1+t->1}", dual)
    assert s == parse_endo_expr("const_term", dual)
    with pytest.raises(ValueError):
        parse_endo_expr("frobenius", dual)


# ---------------------------------------------------------------- running

def test_swap_on_zn_exits_2(tmp_path, capsys):
    code = run_text(tmp_path, "ring R = Zn(4)\nendo s on R = swap\n")
    assert code == 2
    assert "line 2" in capsys.readouterr().err


def test_missing_file_exits_2(tmp_path, capsys):
    assert cli.main([str(tmp_path / "absent.cfg")]) == 2
    assert cli.main([]) == 2


def test_check_z4_baer(tmp_path, capsys):
    assert run_text(tmp_path, "ring R = Zn(4)\ntask check R - property=baer\n", "--format=machine") == 1
    rows = machine_rows(capsys.readouterr().out)
    assert rows == [["RESULT", "check R -", "baer", "Fails", "-", rows[0][5]]]
    assert "{0,2}" in rows[0][5] and "r({2})" in rows[0][5]
    assert run_text(tmp_path, "ring R = Zn(4)\ntask check R - property=baer expect=fails\n") == 0


def test_verify_gf4_all_confirmed(tmp_path, capsys):
    text = "ring F = GF(2,2)\nendo f on F = frobenius(2)\ntask verify F f theorems=all D=2 N=3\n"
    assert run_text(tmp_path, text, "--format=machine") == 0
    rows = machine_rows(capsys.readouterr().out)
    assert len(rows) == 10
    assert {r[3] for r in rows} == {"Confirmed"}
    assert all("D=2" in r[4] and "N=3" in r[4] for r in rows)


def test_eval0_config_runs(tmp_path, capsys):
    assert run_text(tmp_path, EVAL0_CONFIG) == 0
    out = capsys.readouterr().out
    assert "T2.3" in out


def test_human_format_is_default(tmp_path, capsys):
    run_text(tmp_path, "ring R = Zn(3)\ntask check R - property=reduced\n")
    out = capsys.readouterr().out
    assert "RESULT" not in out and "Holds" in out


def test_search_row_replays_as_check(tmp_path, capsys):
    text = "task search P=reduced Q=sigma_reversible_right max_order=4\n"
    assert run_text(tmp_path, text, "--format=machine") == 0
    rows = machine_rows(capsys.readouterr().out)
    assert rows
    for _, task, prop, status, _, witness in rows:
        assert status == "Fails"
        m = re.fullmatch(r"search ring=(.+) endo=(.+)", task)
        assert m, task
        replay_cfg = f"ring R = {m.group(1)}\nendo s on R = {m.group(2)}\ntask check R s property={prop}\n"
        assert run_text(tmp_path, replay_cfg, "--format=machine") == 1
        again = machine_rows(capsys.readouterr().out)
        assert again[0][3] == "Fails" and again[0][5] == witness


def test_search_without_hits_is_not_found(tmp_path, capsys):
    code = run_text(tmp_path, "task search P=sigma_rigid Q=reduced max_order=4\n", "--format=machine")
    rows = machine_rows(capsys.readouterr().out)
    assert code == 1 and rows[0][3] == "NotFound"


def test_budget_error_exits_2(tmp_path, capsys):
    text = "ring R = Zn(8)\ntask check R - property=armendariz\n"
    assert run_text(tmp_path, text, "--budget=10", "--format=machine") == 2
    rows = machine_rows(capsys.readouterr().out)
    assert rows[0][3] == "ERROR" and "line 2" in rows[0][5]


def test_bad_flags_exit_2(tmp_path, capsys):
    assert run_text(tmp_path, "ring R = Zn(2)\n", "--budget=0") == 2


def test_determinism_with_parallel(tmp_path, capsys):
    text = """\
ring C = Product(Zn(2), Zn(2))
ring D = PolyQuot(Zn(2), "t^2")
endo s on C = swap
endo c on D = const_term
task check C s property=reduced,sigma_reversible_right,sigma_rigid
task check D c property=c_sigma,sigma_reversible_right
task verify D c theorems=L3.1,L3.2
task search P=reduced Q=sigma_rigid max_order=4
"""
    outs = []
    for flags in ((), ("--parallel",), ("--seed=0",)):
        run_text(tmp_path, text, "--format=machine", *flags)
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1] == outs[2]
    tasks = [r[1] for r in machine_rows(outs[0])]
    assert tasks[0] == "check C s" and tasks[-1].startswith("search ring=")
