import json

import pytest

from mbdgame import families as fam
from mbdgame.cli import PlaySession, load_target, main, run_repl
from mbdgame.graph import format_edge_list
from mbdgame.hypergraph import Hypergraph, parse_hypergraph
from mbdgame.solver import GameSpec, GameValue, Player, Solver, apply_move


def run(*argv):
    lines = []
    code = main(list(argv), out=lines.append)
    return code, "\n".join(lines)


def scripted(moves):
    it = iter(moves)

    def read(prompt):
        try:
            return next(it)
        except StopIteration:
            raise EOFError from None

    return read


def test_values_examples():
    code, text = run("values", "path:5")
    assert code == 0
    assert "gamma'_SMB = 3" in text and "gamma_SMB  = inf" in text
    _, text = run("values", "tadpole:4:1")
    assert "gamma'_SMB = 3" in text and "gamma_SMB  = inf" in text
    _, text = run("values", "complete:3")
    assert "gamma'_SMB = inf" in text and "gamma_MB   = 1" in text


def test_values_json_uses_null_and_finite_flag():
    code, text = run("values", "complete:3", "--json")
    data = json.loads(text)
    assert data["values"]["gamma_smb"] == {"value": None, "finite": False}
    assert data["values"]["gamma_mb"] == {"value": 1, "finite": True}


def test_solve_hypergraph_file(tmp_path):
    p = tmp_path / "h.txt"
    p.write_text("h 3 2\n0 1\n1 2\n")
    code, text = run("solve", str(p), "--game", "MM", "--best")
    assert code == 0 and text.startswith("w_M^M = 2")
    code, text = run("solve", str(p), "--json", "--line")
    data = json.loads(text)
    assert data["results"]["w_M^B"]["finite"] is False
    assert data["results"]["w_M^M"]["line"][0][0] == "M"


def test_transversals():
    code, text = run("transversals", "path:4")
    assert code == 0 and "{v1,v3}" in text and "# 4 minimal transversals" in text
    _, text = run("transversals", "path:3", "--format", "hypergraph")
    assert parse_hypergraph(text).edge_sets() == [{1}, {0, 2}]


def test_generate():
    code, text = run("generate", "tadpole:4:2")
    assert code == 0 and "landmark tail: u1,u2" in text
    _, text = run("generate", "--catalog", "4", "--connected")
    assert text.count("p 4") == 6
    _, a = run("--seed", "5", "generate", "--random", "6", "--count", "2")
    _, b = run("--seed", "5", "generate", "--random", "6", "--count", "2")
    assert a == b and a.count("p 6") == 2


def test_export_examples():
    _, dot = run("export", "fprime:2", "--format", "dot")
    assert dot.count("[label=") == 7
    _, text = run("export", "path:3", "--format", "hypergraph")
    assert parse_hypergraph(text).edge_sets() == [{0, 1}, {1, 2}, {0, 1, 2}]
    _, text = run("export", "tadpole:3:1", "--format", "edge-list")
    assert text.splitlines() == ["p 4", "e 0 1", "e 0 2", "e 0 3", "e 1 2"]


@pytest.mark.parametrize("target", ["path:6", "tadpole:5:2", "fprime:3", "grstc:2:3:3", "star2:3", "path:2+cycle:5"])
@pytest.mark.parametrize("fmt", ["dot", "edge-list"])
def test_export_reimport_round_trip(tmp_path, target, fmt):
    out = tmp_path / "g.txt"
    assert run("export", target, "--format", fmt, "-o", str(out))[0] == 0
    back = load_target(str(out))
    assert back.graph == fam.parse_family(target).graph
    again = tmp_path / "again.txt"
    run("export", str(out), "--format", fmt, "-o", str(again))
    assert again.read_text() == out.read_text()


def test_export_is_bit_stable():
    assert run("export", "fprime:3", "--format", "dot") == run("export", "fprime:3", "--format", "dot")


def test_exit_codes(tmp_path):
    assert run("values", "nosuch:3")[0] == 2
    assert run("export", "path:3", "-o", str(tmp_path / "missing" / "x.dot"))[0] == 2
    assert run("--nodes", "3", "values", "path:13")[0] == 3
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_verify_exit_codes(tmp_path, monkeypatch):
    out = tmp_path / "r.json"
    code, text = run("--threads", "1", "verify", "--only", "paths/odd", "--json", str(out))
    assert code == 0 and "summary: 7 pass, 0 fail" in text
    assert json.loads(out.read_text())["summary"]["pass"] == 7
    monkeypatch.setattr("mbdgame.verify.path_gamma_smb_prime", lambda n: GameValue(1))
    assert run("--threads", "1", "verify", "--only", "paths/odd/n=05")[0] == 1


def test_edge_list_file_target(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text(format_edge_list(fam.path(3).graph))
    code, text = run("values", str(p))
    assert code == 0 and "gamma'_SMB = 2" in text


def test_hypergraph_target_rejected_where_graph_needed(tmp_path):
    p = tmp_path / "h.txt"
    p.write_text("h 2 1\n0 1\n")
    assert run("values", str(p))[0] == 2
    assert isinstance(load_target(str(p)), Hypergraph)


# -- interactive play -------------------------------------------------------------


def session(target, human, first):
    return PlaySession(fam.parse_family(target), human, first, Solver())


def test_dominator_wins_p3_with_the_centre():
    lines = []
    w = run_repl(session("path:3", Player.BREAKER, Player.BREAKER), scripted(["v2"]), lines.append)
    assert w is Player.BREAKER
    assert "Dominator has claimed a dominating set {v2}" in lines[-1]


def first_free(s, order):
    """Reader that plays the first unclaimed vertex of ``order``."""

    def read(prompt):
        taken = {v for _, v in s.history}
        for label in order:
            if s.f.vertex(label) not in taken:
                return label
        raise EOFError

    return read


def test_engine_dominator_holds_staller_to_three_moves_on_p5():
    labels = ["v1", "v2", "v3", "v4", "v5"]
    for opening in labels:
        s = session("path:5", Player.MAKER, Player.MAKER)
        order = [opening] + [x for x in labels if x != opening]
        w = run_repl(s, first_free(s, order), lambda line: None)
        assert w is not None
        if w is Player.MAKER:
            assert bin(s.claimed(Player.MAKER)).count("1") >= 3


def test_hint_on_fresh_tadpole_attains_value():
    s = session("tadpole:4:1", Player.MAKER, Player.MAKER)
    lines = []
    run_repl(s, scripted(["hint"]), lines.append)
    hint = next(line for line in lines if line.startswith("hint:"))
    assert hint.endswith("3)")
    label = hint.split()[1]
    after = apply_move(s.board(), Player.MAKER, s.f.vertex(label))
    assert Solver().solve(after, GameSpec(Player.MAKER, Player.BREAKER)) + 1 == 3


def test_illegal_moves_reprompt_and_undo_show():
    s = session("path:5", Player.MAKER, Player.MAKER)
    lines = []
    run_repl(s, scripted(["v9", "v3", "v3", "undo", "show", "17", "quit"]), lines.append)
    assert "illegal move: unknown vertex 'v9'" in lines
    assert "illegal move: v3 is already claimed" in lines
    assert "undone" in lines
    assert "Staller:   {}" in lines
    assert any("unknown vertex '17'" in line for line in lines)
    assert s.history == []


def test_raw_ids_are_accepted():
    s = session("path:3", Player.BREAKER, Player.BREAKER)
    assert run_repl(s, scripted(["1"]), lambda line: None) is Player.BREAKER


def test_engine_staller_wins_when_it_can():
    s = session("path:5", Player.BREAKER, Player.MAKER)
    lines = []
    w = run_repl(s, first_free(s, ["v1", "v2", "v3", "v4", "v5"]), lines.append)
    assert w is Player.MAKER
    assert bin(s.claimed(Player.MAKER)).count("1") <= 3
    assert "closed neighbourhood" in lines[-1]


def test_play_through_main(monkeypatch):
    monkeypatch.setattr("builtins.input", scripted(["v2"]))
    code, text = run("play", "path:3", "--as", "dominator", "--first", "dominator")
    assert code == 0 and "Dominator has claimed a dominating set" in text
