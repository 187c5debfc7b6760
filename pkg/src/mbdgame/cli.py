"""Command-line interface: solve, inspect, generate, verify, export and play."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path
from typing import Callable

from . import families as fam
from .catalog import all_graphs, connected_graphs, random_connected_graph
from .graph import closed_neighborhood_hypergraph, format_edge_list, parse_edge_list
from .hypergraph import Hypergraph, format_hypergraph, iter_bits, minimal_transversals, parse_hypergraph
from .solver import (
    DEFAULT_NODE_BUDGET,
    W_BB,
    W_BM,
    W_MB,
    W_MM,
    BudgetExceeded,
    GameOver,
    GameSpec,
    GameValue,
    Player,
    Solver,
    apply_move,
)
from .verify import SuiteConfig, make_report, report_csv, report_json, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

ROLE = {Player.MAKER: "Staller", Player.BREAKER: "Dominator"}
ROLE_OF = {"staller": Player.MAKER, "dominator": Player.BREAKER}
SPECS = {"MM": W_MM, "MB": W_MB, "BM": W_BM, "BB": W_BB}


class UsageError(Exception):
    pass


def value_json(v: GameValue) -> dict:
    return {"value": v.to_json(), "finite": v.finite}


def load_target(target: str) -> fam.LabeledFamily | Hypergraph:
    """A family string (``path:5``) or a file in DOT, edge-list or hypergraph format."""
    p = Path(target)
    if p.is_file():
        text = p.read_text()
        first = text.lstrip().split(None, 1)[0] if text.strip() else ""
        if first == "graph":
            return fam.parse_dot(text)
        if first == "h":
            return parse_hypergraph(text)
        g = parse_edge_list(text)
        return fam.LabeledFamily(p.name, g, tuple(str(v) for v in range(g.n)))
    return fam.parse_family(target)


def load_graph(target: str) -> fam.LabeledFamily:
    t = load_target(target)
    if isinstance(t, Hypergraph):
        raise UsageError(f"{target}: a graph is required here, got a hypergraph")
    return t


def as_hypergraph(t: fam.LabeledFamily | Hypergraph) -> tuple[Hypergraph, Callable[[int], str]]:
    if isinstance(t, Hypergraph):
        return t, str
    return closed_neighborhood_hypergraph(t.graph), lambda v: t.labels[v]


def fmt_set(mask: int, name: Callable[[int], str]) -> str:
    return "{" + ",".join(name(v) for v in iter_bits(mask)) + "}"


# -- batch commands ---------------------------------------------------------------


def cmd_values(args, out) -> int:
    f = load_graph(args.target)
    vals = Solver(args.nodes).mbd_values(f.graph, independent=args.independent)
    rows = [
        ("gamma_SMB", "Staller, D-game", vals.gamma_smb),
        ("gamma'_SMB", "Staller, S-game", vals.gamma_smb_prime),
        ("gamma_MB", "Dominator, D-game", vals.gamma_mb),
        ("gamma'_MB", "Dominator, S-game", vals.gamma_mb_prime),
    ]
    if args.json:
        data = {"target": f.name, "n": f.graph.n,
                "values": {k: value_json(v) for k, v in vals.as_dict().items()}}
        out(json.dumps(data, sort_keys=True))
    else:
        out(f"{f.name} (n={f.graph.n})")
        for name, what, v in rows:
            out(f"  {name:<11}= {str(v):<4} ({what})")
    return EXIT_OK


def cmd_solve(args, out) -> int:
    h, name = as_hypergraph(load_target(args.target))
    solver = Solver(args.nodes)
    keys = [args.game] if args.game else list(SPECS)
    results = {}
    for key in keys:
        spec = SPECS[key]
        entry = {"value": solver.solve(h, spec)}
        if args.best or args.line:
            try:
                entry["best"] = solver.best_move(h, spec)[0]
            except GameOver:
                entry["best"] = None
        if args.line:
            entry["line"] = solver.principal_line(h, spec)
        results[spec.name] = entry
    if args.json:
        data = {"target": args.target, "nodes": solver.nodes, "results": {}}
        for k, e in results.items():
            row = value_json(e["value"])
            if "best" in e:
                row["best_move"] = e["best"]
            if "line" in e:
                row["line"] = [[p.value, v] for p, v in e["line"]]
            data["results"][k] = row
        out(json.dumps(data, sort_keys=True))
        return EXIT_OK
    for k, e in results.items():
        line = f"{k} = {e['value']}"
        if e.get("best") is not None:
            line += f"  best first move: {name(e['best'])}"
        out(line)
        if e.get("line"):
            out("  line: " + " ".join(f"{p.value}:{name(v)}" for p, v in e["line"]))
    return EXIT_OK


def cmd_transversals(args, out) -> int:
    h, name = as_hypergraph(load_target(args.target))
    tr = minimal_transversals(h)
    if args.format == "hypergraph":
        out(format_hypergraph(tr).rstrip("\n"))
    else:
        for e in tr.edges:
            out(fmt_set(e, name))
        out(f"# {len(tr.edges)} minimal transversals")
    return EXIT_OK


def cmd_generate(args, out) -> int:
    if args.catalog is not None:
        pool = connected_graphs(args.catalog, args.catalog) if args.connected else all_graphs(args.catalog, args.catalog)
        for g in pool:
            out(format_edge_list(g))
        return EXIT_OK
    if args.random is not None:
        rng = random.Random(args.seed)
        for _ in range(args.count):
            out(format_edge_list(random_connected_graph(rng, args.random, args.p)))
        return EXIT_OK
    if not args.target:
        raise UsageError("generate needs a family, --catalog N or --random N")
    f = load_graph(args.target)
    out(f"{f.name}: n={f.graph.n} m={len(f.graph.edges())} min degree={f.graph.min_degree}")
    for v in range(f.graph.n):
        nbrs = ",".join(f.labels[u] for u in iter_bits(f.graph.adj[v]))
        out(f"  {v:>3} {f.labels[v]:<8} -> {nbrs}")
    for key, vs in sorted(f.landmarks.items()):
        out(f"  landmark {key}: " + ",".join(f.labels[v] for v in vs))
    return EXIT_OK


def render_export(t: fam.LabeledFamily | Hypergraph, fmt: str) -> str:
    if isinstance(t, Hypergraph):
        if fmt != "hypergraph":
            raise UsageError("a hypergraph target can only be exported as 'hypergraph'")
        return format_hypergraph(t)
    if fmt == "dot":
        return fam.format_dot(t)
    if fmt == "edge-list":
        return format_edge_list(t.graph)
    return format_hypergraph(closed_neighborhood_hypergraph(t.graph))


def cmd_export(args, out) -> int:
    text = render_export(load_target(args.target), args.format)
    if args.output:
        try:
            Path(args.output).write_text(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc.strerror}") from None
    else:
        out(text.rstrip("\n"))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    cfg = SuiteConfig(seed=args.seed, node_budget=args.nodes, stretch=not args.no_stretch)
    resume = json.loads(Path(args.resume).read_text()) if args.resume else None
    results, report = run_suite(cfg, only=args.only, workers=args.threads, resume=resume)
    if args.timings:
        report = make_report(cfg, results, timings=True)
    for r in results:
        line = f"{r.status.upper():<14} {r.check_id}  expected={r.expected} computed={r.computed}"
        out(line + (f"  [{r.note}]" if r.note and r.status != "pass" else ""))
    s = report["summary"]
    out(f"summary: {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped, {s['counterexample']} counterexample")
    if args.json:
        Path(args.json).write_text(report_json(report))
    if args.csv:
        Path(args.csv).write_text(report_csv(results))
    return EXIT_FAIL if s["fail"] else EXIT_OK


# -- interactive play -------------------------------------------------------------


class PlaySession:
    """State of one game on H_G: Staller is Maker, Dominator is Breaker."""

    def __init__(self, f: fam.LabeledFamily, human: Player, first: Player, solver: Solver):
        self.f = f
        self.human = human
        self.first = first
        self.solver = solver
        self.base = closed_neighborhood_hypergraph(f.graph)
        self.history: list[tuple[Player, int]] = []

    @property
    def turn(self) -> Player:
        return self.first if len(self.history) % 2 == 0 else self.first.other

    def claimed(self, p: Player) -> int:
        return sum(1 << v for who, v in self.history if who is p)

    def board(self) -> Hypergraph:
        h = self.base
        for who, v in self.history:
            h = apply_move(h, who, v)
        return h

    def winner(self) -> Player | None:
        h = self.board()
        if h.has_empty_edge:
            return Player.MAKER
        if not h.edges:
            return Player.BREAKER
        return None

    def label(self, v: int) -> str:
        return self.f.labels[v]

    def resolve(self, token: str) -> int:
        """Vertex id for a label or raw id; raises ValueError if unknown or taken."""
        if token in self.f.labels:
            v = self.f.labels.index(token)
        elif token.isdigit() and int(token) < self.f.graph.n:
            v = int(token)
        else:
            raise ValueError(f"unknown vertex {token!r}")
        if any(v == u for _, u in self.history):
            raise ValueError(f"{self.label(v)} is already claimed")
        return v

    def best(self) -> tuple[int, GameValue]:
        return self.solver.best_move(self.board(), GameSpec(Player.MAKER, self.turn))

    def value(self) -> GameValue:
        return self.solver.solve(self.board(), GameSpec(Player.MAKER, self.turn))

    def undo(self) -> bool:
        if not any(who is self.human for who, _ in self.history):
            return False
        while self.history:
            who, _ = self.history.pop()
            if who is self.human:
                break
        return True

    def announce(self, w: Player) -> str:
        own = self.claimed(w)
        moves = bin(own).count("1")
        after = f"after {moves} move" + ("" if moves == 1 else "s")
        if w is Player.MAKER:
            g = self.f.graph
            x = next(x for x in range(g.n) if g.closed(x) & ~own == 0)
            return (f"Staller has claimed the closed neighbourhood N[{self.label(x)}] = "
                    f"{fmt_set(g.closed(x), self.label)} and wins {after}.")
        return f"Dominator has claimed a dominating set {fmt_set(own, self.label)} and wins {after}."

    def show(self) -> list[str]:
        h = self.board()
        lines = [
            f"Staller:   {fmt_set(self.claimed(Player.MAKER), self.label)}",
            f"Dominator: {fmt_set(self.claimed(Player.BREAKER), self.label)}",
            "board: " + (" ".join(fmt_set(e, self.label) for e in h.edges) or "(no edges left)"),
        ]
        return lines


HELP = "commands: <vertex label or id>, hint, undo, show, help, quit"


def run_repl(session: PlaySession, read: Callable[[str], str] = input,
             write: Callable[[str], None] = print) -> Player | None:
    """Play until someone wins (returns the winner) or the human quits (None)."""
    you = ROLE[session.human]
    write(f"{session.f.name}: you are {you}; {ROLE[session.first]} moves first.")
    start = session.value()
    write(f"Staller's winning number for this game: {start}")
    write(HELP)
    while True:
        w = session.winner()
        if w is not None:
            write(session.announce(w))
            return w
        mover = session.turn
        if mover is not session.human:
            v, val = session.best()
            session.history.append((mover, v))
            write(f"{ROLE[mover]} plays {session.label(v)}")
            continue
        try:
            line = read(f"{you}> ").strip()
        except EOFError:
            return None
        if not line:
            continue
        cmd = line.lower()
        if cmd in ("quit", "exit", "q"):
            return None
        if cmd == "help":
            write(HELP)
        elif cmd == "show":
            for text in session.show():
                write(text)
        elif cmd == "hint":
            v, val = session.best()
            write(f"hint: {session.label(v)} (Staller's winning number with best play: {val})")
        elif cmd == "undo":
            write("undone" if session.undo() else "nothing to undo")
        else:
            try:
                v = session.resolve(line)
            except ValueError as exc:
                write(f"illegal move: {exc}")
                continue
            session.history.append((mover, v))
            write(f"{you} plays {session.label(v)}")


def cmd_play(args, out, read: Callable[[str], str] | None = None) -> int:
    f = load_graph(args.target)
    session = PlaySession(f, ROLE_OF[args.role], ROLE_OF[args.first], Solver(args.nodes))
    run_repl(session, read=read or input, write=out)
    return EXIT_OK


# -- entry point ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    defaults = SuiteConfig()
    p = argparse.ArgumentParser(prog="mbdgame", description="Maker-Breaker domination game solver.")
    p.add_argument("--nodes", type=int, default=DEFAULT_NODE_BUDGET,
                   help="search node budget per solver (env MBDGAME_NODES)")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1, help="worker processes for verify")
    p.add_argument("--seed", type=int, default=defaults.seed, help="seed for random samples")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="winning numbers of a hypergraph (or H_G of a graph)")
    s.add_argument("target")
    s.add_argument("--game", choices=sorted(SPECS), help="only w_X^Y with X counted, Y first")
    s.add_argument("--best", action="store_true", help="also print an optimal first move")
    s.add_argument("--line", action="store_true", help="also print a principal line")
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("values", help="the four domination-game numbers of a graph")
    s.add_argument("target")
    s.add_argument("--independent", action="store_true", help="search all four, no shortcuts")
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("generate", help="describe a family or list catalog/random graphs")
    s.add_argument("target", nargs="?")
    s.add_argument("--catalog", type=int, metavar="N", help="all graphs on N vertices")
    s.add_argument("--connected", action="store_true")
    s.add_argument("--random", type=int, metavar="N", help="random connected graphs on N vertices")
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--p", type=float, default=0.4)

    s = sub.add_parser("transversals", help="minimal transversals (minimal dominating sets for a graph)")
    s.add_argument("target")
    s.add_argument("--format", choices=["sets", "hypergraph"], default="sets")

    s = sub.add_parser("verify", help="run the verification suite")
    s.add_argument("--only", nargs="*", metavar="ID", help="job id prefixes to run")
    s.add_argument("--json", metavar="PATH")
    s.add_argument("--csv", metavar="PATH")
    s.add_argument("--resume", metavar="PATH", help="reuse passing jobs from an earlier JSON report")
    s.add_argument("--no-stretch", action="store_true", help="skip stretch-tier instances")
    s.add_argument("--timings", action="store_true", help="include wall times in the JSON report")

    s = sub.add_parser("play", help="play against the engine")
    s.add_argument("target")
    s.add_argument("--as", dest="role", choices=sorted(ROLE_OF), default="staller")
    s.add_argument("--first", choices=sorted(ROLE_OF), default="staller")

    s = sub.add_parser("export", help="write a graph as dot, edge-list or hypergraph")
    s.add_argument("target")
    s.add_argument("--format", choices=["dot", "edge-list", "hypergraph"], default="edge-list")
    s.add_argument("-o", "--output")
    return p


COMMANDS = {
    "solve": cmd_solve,
    "values": cmd_values,
    "generate": cmd_generate,
    "transversals": cmd_transversals,
    "verify": cmd_verify,
    "play": cmd_play,
    "export": cmd_export,
}


def main(argv: list[str] | None = None, out: Callable[[str], None] = print) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.nodes < 1 or args.threads < 1:
        parser.error("--nodes and --threads must be positive")
    try:
        return COMMANDS[args.command](args, out)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
