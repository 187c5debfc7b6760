"""Replay harness: solver results against closed forms and inequalities.

Work is split into jobs with stable ids (``paths/odd/n=05`` ...).  Each job
builds its own :class:`Solver`, so node counts and results do not depend on
scheduling, and a job can be run alone with ``only=``.  Reports sort results
by check id and omit wall times unless asked, which makes them byte-stable.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Iterable

import numpy as np

from . import families as fam
from .catalog import (
    all_graphs,
    connected_graphs,
    random_connected_graph,
    random_simple_hypergraph,
    self_test,
    simple_hypergraphs,
)
from .formulas import (
    ceil_log2,
    conjecture_bound,
    f_prime_values,
    floor_log2,
    path_gamma_smb_prime,
    realization_triple,
    tadpole_values,
)
from .graph import (
    Graph,
    closed_neighborhood_hypergraph,
    find_pairing_certificate,
    minimal_dominating_sets,
    verify_pairing_certificate,
)
from .hypergraph import Hypergraph, minimal_transversals, simplify
from .solver import (
    INF,
    W_BB,
    W_BM,
    W_MB,
    W_MM,
    BudgetExceeded,
    GameSpec,
    GameValue,
    Player,
    Solver,
)

PASS, FAIL, SKIPPED, COUNTEREXAMPLE = "pass", "fail", "skipped-budget", "counterexample"


@dataclass
class CheckResult:
    check_id: str
    instance: str
    expected: str
    computed: str
    status: str
    nodes: int = 0
    wall_time: float = 0.0
    note: str = ""

    def to_dict(self, timings: bool = False) -> dict:
        d = asdict(self)
        if not timings:
            d.pop("wall_time")
        return d


@dataclass
class SuiteConfig:
    path_odd: tuple[int, ...] = (1, 3, 5, 7, 9, 11, 13)
    path_even: tuple[int, ...] = (2, 4, 6, 8, 10)
    path_moreover: tuple[int, ...] = (1, 3, 5, 7, 9, 11)
    path_stretch: tuple[int, ...] = (15,)
    tadpole_n: tuple[int, ...] = (3, 4, 5, 6, 8)
    tadpole_k: tuple[int, ...] = (1, 2, 3, 5)
    tadpole_max_order: int = 13
    fprime_k: tuple[int, ...] = (1, 2)
    fprime_stretch: tuple[int, ...] = (3,)
    triples: tuple[tuple[int, int, int], ...] = ((2, 2, 2), (2, 2, 3), (2, 3, 3))
    star1_k: tuple[int, ...] = (2, 3, 4, 5)
    star2_k: tuple[int, ...] = (2, 3, 4)
    dgame_star1_k: tuple[int, ...] = (2, 3, 4)
    dgame_star2_k: tuple[int, ...] = (2, 3)
    even_cycles: tuple[int, ...] = (4, 6, 8, 10)
    graph_order: int = 6
    union_order: int = 4
    pass_order: int = 5
    hyper_exhaustive_order: int = 4
    hyper_samples: int = 500
    hyper_sample_order: int = 5
    random_graphs: int = 20
    random_graph_order: int = 7
    log_inequality_max: int = 4096
    seed: int = 20220401
    node_budget: int = 10**8
    stretch: bool = True

    def to_dict(self) -> dict:
        return json.loads(json.dumps(asdict(self)))


@dataclass(frozen=True)
class Job:
    job_id: str
    fn: Callable[..., list[CheckResult]]
    args: tuple = ()
    stretch: bool = False


class _Recorder:
    """Collects results for one job, charging solver nodes and time to each."""

    def __init__(self, job_id: str, solver: Solver | None = None):
        self.job_id = job_id
        self.solver = solver
        self.results: list[CheckResult] = []
        self._nodes = solver.nodes if solver else 0
        self._t = time.perf_counter()

    def add(self, suffix: str, instance: str, expected, computed, ok: bool | None = None,
            note: str = "", status: str | None = None) -> None:
        now = time.perf_counter()
        nodes = self.solver.nodes if self.solver else 0
        if status is None:
            if ok is None:
                ok = expected == computed
            status = PASS if ok else FAIL
        self.results.append(
            CheckResult(
                check_id=f"{self.job_id}/{suffix}" if suffix else self.job_id,
                instance=instance,
                expected=str(expected),
                computed=str(computed),
                status=status,
                nodes=nodes - self._nodes,
                wall_time=round(now - self._t, 6),
                note=note,
            )
        )
        self._nodes, self._t = nodes, now


def _h(g: Graph) -> Hypergraph:
    return closed_neighborhood_hypergraph(g)


def _describe(g: Graph) -> str:
    return f"n={g.n} E=" + ",".join(f"{u}-{v}" for u, v in g.edges())


# -- paths ----------------------------------------------------------------------


def _job_path(job_id: str, n: int, budget: int) -> list[CheckResult]:
    s = Solver(budget)
    rec = _Recorder(job_id, s)
    h = _h(fam.path(n).graph)
    got = s.solve(h, W_MM)
    rec.add("gamma_smb_prime", f"P_{n}", path_gamma_smb_prime(n), got)
    return rec.results


def _odd_neighborhood_indices(h: Hypergraph, n: int) -> list[int]:
    g = fam.path(n).graph
    wanted = {g.closed(i) for i in range(0, n, 2)}
    return [i for i, e in enumerate(h.edges) if e in wanted]


def _job_path_moreover(job_id: str, n: int, budget: int) -> list[CheckResult]:
    s = Solver(budget)
    rec = _Recorder(job_id, s)
    h = _h(fam.path(n).graph)
    full = s.solve(h, W_MM)
    restricted = s.solve_restricted(h, _odd_neighborhood_indices(h, n), W_MM)
    rec.add("restricted_equals_full", f"P_{n} winning sets N[v1],N[v3],...,N[v{n}]", full, restricted)
    return rec.results


def _path_jobs(cfg: SuiteConfig) -> list[Job]:
    jobs = [Job(f"paths/odd/n={n:02d}", _job_path, (n,)) for n in cfg.path_odd]
    jobs += [Job(f"paths/even/n={n:02d}", _job_path, (n,)) for n in cfg.path_even]
    jobs += [Job(f"paths/moreover/n={n:02d}", _job_path_moreover, (n,)) for n in cfg.path_moreover]
    if cfg.stretch:
        jobs += [Job(f"paths/stretch/n={n:02d}", _job_path, (n,), stretch=True) for n in cfg.path_stretch]
    return jobs


# -- tadpoles -------------------------------------------------------------------


def _job_tadpole(job_id: str, n: int, k: int, budget: int) -> list[CheckResult]:
    s = Solver(budget)
    rec = _Recorder(job_id, s)
    h = _h(fam.tadpole(n, k).graph)
    want = tadpole_values((n, k))
    rec.add("gamma_smb", f"T({n},{k})", want.gamma_smb, s.solve(h, W_MB))
    rec.add("gamma_smb_prime", f"T({n},{k})", want.gamma_smb_prime, s.solve(h, W_MM))
    return rec.results


def _tadpole_grid(cfg: SuiteConfig) -> list[tuple[int, int]]:
    return [(n, k) for n in cfg.tadpole_n for k in cfg.tadpole_k if n + k <= cfg.tadpole_max_order]


def _tadpole_jobs(cfg: SuiteConfig) -> list[Job]:
    return [Job(f"tadpoles/n={n:02d}/k={k:02d}", _job_tadpole, (n, k)) for n, k in _tadpole_grid(cfg)]


# -- constructions --------------------------------------------------------------


def _job_fprime(job_id: str, k: int, budget: int) -> list[CheckResult]:
    s = Solver(budget)
    rec = _Recorder(job_id, s)
    g = fam.F_prime(k).graph
    want = f_prime_values(k)
    rec.add("min_degree", f"F'_{k}", k, g.min_degree)
    rec.add("gamma_smb_prime", f"F'_{k}", want.gamma_smb_prime, s.solve(_h(g), W_MM))
    rec.add("gamma_smb", f"F'_{k}", want.gamma_smb, s.solve(_h(g), W_MB))
    return rec.results


def _job_triple(job_id: str, r: int, s_: int, t: int, connected: bool, budget: int) -> list[CheckResult]:
    s = Solver(budget)
    rec = _Recorder(job_id, s)
    f = fam.G_rst_connected(r, s_, t) if connected else fam.G_rst(r, s_, t)
    g = f.graph
    want = realization_triple(r, s_, t)
    inst = f.name
    if connected:
        rec.add("connected", inst, True, g.is_connected)
    rec.add("delta_plus_one", inst, want.delta_plus_one, g.min_degree + 1)
    rec.add("gamma_smb_prime", inst, want.gamma_smb_prime, s.solve(_h(g), W_MM))
    rec.add("gamma_smb", inst, want.gamma_smb, s.solve(_h(g), W_MB))
    return rec.results


def _job_star(job_id: str, kind: int, k: int, budget: int) -> list[CheckResult]:
    s = Solver(budget)
    rec = _Recorder(job_id, s)
    f = fam.subdivided_star_1(k) if kind == 1 else fam.subdivided_star_2(k)
    g = f.graph
    got = s.solve(_h(g), W_MM)
    rec.add("gamma_smb_prime", f.name, GameValue(k + 1), got)
    rec.add("half_n_sharp", f.name, GameValue((g.n + 1) // 2), got)
    return rec.results


def _job_star_dgame(job_id: str, kind: int, k: int, budget: int) -> list[CheckResult]:
    s = Solver(budget)
    rec = _Recorder(job_id, s)
    base = fam.subdivided_star_1(k) if kind == 1 else fam.subdivided_star_2(k)
    f = fam.with_isolated_vertex(base)
    g = f.graph
    got = s.solve(_h(g), W_MB)
    want = GameValue(g.n // 2)
    rec.add("gamma_smb_half_n", f.name, want, got,
            note="" if got == want else "implied D-game sharpness value differs; needs human review")
    return rec.results


def _construction_jobs(cfg: SuiteConfig) -> list[Job]:
    jobs = [Job(f"constructions/fprime/k={k}", _job_fprime, (k,)) for k in cfg.fprime_k]
    if cfg.stretch:
        jobs += [Job(f"constructions/fprime/k={k}", _job_fprime, (k,), stretch=True) for k in cfg.fprime_stretch]
    for r, s, t in cfg.triples:
        jobs.append(Job(f"constructions/grst/{r}-{s}-{t}", _job_triple, (r, s, t, False)))
        jobs.append(Job(f"constructions/grstc/{r}-{s}-{t}", _job_triple, (r, s, t, True)))
    jobs += [Job(f"constructions/star1/k={k}", _job_star, (1, k)) for k in cfg.star1_k]
    jobs += [Job(f"constructions/star2/k={k}", _job_star, (2, k)) for k in cfg.star2_k]
    jobs += [Job(f"constructions/star1-iso/k={k}", _job_star_dgame, (1, k)) for k in cfg.dgame_star1_k]
    jobs += [Job(f"constructions/star2-iso/k={k}", _job_star_dgame, (2, k)) for k in cfg.dgame_star2_k]
    return jobs


# -- inequalities ---------------------------------------------------------------


class _GraphValues:
    """Staller numbers of graphs, cached per solver."""

    def __init__(self, solver: Solver):
        self.s = solver

    def prime(self, g: Graph) -> GameValue:
        return self.s.solve(_h(g), W_MM)

    def dgame(self, g: Graph) -> GameValue:
        return self.s.solve(_h(g), W_MB)


def _inequality_violations(g: Graph, vals: _GraphValues) -> dict[str, list[str]]:
    """Every inequality check on one graph; returns violation descriptions per prop."""
    out: dict[str, list[str]] = {k: [] for k in ("mindeg_bound", "half_order_bound", "cut_vertex", "support_leaf", "support_leaf_dgame")}
    counts = {"cut_vertex": 0, "support_leaf": 0, "support_leaf_dgame": 0}
    sp, dg = vals.prime(g), vals.dgame(g)
    if not (g.min_degree + 1 <= sp <= dg):
        out["mindeg_bound"].append(f"delta+1={g.min_degree + 1} S={sp} D={dg}")
    if sp.finite and sp > (g.n + 1) // 2:
        out["half_order_bound"].append(f"S={sp} > ceil(n/2)")
    if dg.finite and dg > g.n // 2:
        out["half_order_bound"].append(f"D={dg} > floor(n/2)")
    for v in g.cut_vertices():
        counts["cut_vertex"] += 1
        rest = g.full & ~(1 << v)
        comp_vals = sorted(vals.prime(g.induced(c)[0]) for c in g.components(rest))
        second = comp_vals[1]
        if not sp <= second + 1:
            out["cut_vertex"].append(f"cut {v}: S={sp} second={second}")
    for u in g.weak_support_vertices():
        leaf = next(x for x in g.leaves() if g.has_edge(u, x))
        gp = g.remove((1 << u) | (1 << leaf))
        counts["support_leaf"] += 1
        sp2, dg2 = vals.prime(gp), vals.dgame(gp)
        if not (sp - 1 <= sp2 <= sp and dg2 <= dg):
            out["support_leaf"].append(f"support {u}: S={sp} S'={sp2} D={dg} D'={dg2}")
        if g.degree(u) == 2:
            counts["support_leaf_dgame"] += 1
            if not dg - 1 <= dg2:
                out["support_leaf_dgame"].append(f"support {u}: D={dg} D'={dg2}")
    out["_counts"] = [f"{k}={v}" for k, v in counts.items()]
    return out


def _job_inequalities(job_id: str, graphs: list[Graph], label: str, budget: int) -> list[CheckResult]:
    s = Solver(budget)
    rec = _Recorder(job_id, s)
    vals = _GraphValues(s)
    merged: dict[str, list[str]] = {k: [] for k in ("mindeg_bound", "half_order_bound", "cut_vertex", "support_leaf", "support_leaf_dgame")}
    tested = {"cut_vertex": 0, "support_leaf": 0, "support_leaf_dgame": 0}
    for g in graphs:
        res = _inequality_violations(g, vals)
        for key in merged:
            merged[key] += [f"[{_describe(g)}] {msg}" for msg in res[key]]
        for item in res["_counts"]:
            k, v = item.split("=")
            tested[k] += int(v)
    for key, bad in merged.items():
        extent = f"{len(graphs)} graphs" + (f", {tested[key]} vertices" if key in tested else "")
        rec.add(key, f"{label} ({extent})", "0 violations", f"{len(bad)} violations",
                ok=not bad, note="; ".join(bad[:5]))
    return rec.results


def _job_unions(job_id: str, order: int, budget: int) -> list[CheckResult]:
    s = Solver(budget)
    rec = _Recorder(job_id, s)
    vals = _GraphValues(s)
    base = connected_graphs(order)
    bad, count = [], 0
    for i, g1 in enumerate(base):
        for g2 in base[i:]:
            count += 1
            u = fam.disjoint_union(_family(g1), _family(g2)).graph
            a, b = sorted([vals.prime(g1), vals.prime(g2)])
            su, du = vals.prime(u), vals.dgame(u)
            if su != a or not a <= du <= b:
                bad.append(f"[{_describe(g1)} + {_describe(g2)}] S={su} D={du} parts={a},{b}")
    rec.add("component_union", f"two-component unions of connected graphs <= {order} ({count} unions)",
            "0 violations", f"{len(bad)} violations", ok=not bad, note="; ".join(bad[:5]))
    return rec.results


def _family(g: Graph) -> fam.LabeledFamily:
    return fam.LabeledFamily("g", g, tuple(str(i) for i in range(g.n)))


def _job_no_skip(job_id: str, order: int, budget: int) -> list[CheckResult]:
    s = Solver(budget)
    rec = _Recorder(job_id, s)
    bad_m, bad_b, count = [], [], 0
    for g in all_graphs(order):
        h = _h(g)
        for first in (Player.MAKER, Player.BREAKER):
            count += 1
            plain = s.solve(h, GameSpec(Player.MAKER, first))
            mp = s.solve_with_pass(h, GameSpec(Player.MAKER, first, maker_may_pass=True))
            bp = s.solve_with_pass(h, GameSpec(Player.MAKER, first, breaker_may_pass=True))
            if mp != plain:
                bad_m.append(f"[{_describe(g)} first={first.value}] pass={mp} plain={plain}")
            if not bp <= plain:
                bad_b.append(f"[{_describe(g)} first={first.value}] pass={bp} plain={plain}")
    inst = f"all graphs <= {order} vertices, S- and D-game ({count} games)"
    rec.add("staller_pass_equal", inst, "0 violations", f"{len(bad_m)} violations", ok=not bad_m,
            note="; ".join(bad_m[:5]))
    rec.add("dominator_pass_le", inst, "0 violations", f"{len(bad_b)} violations", ok=not bad_b,
            note="; ".join(bad_b[:5]))
    return rec.results


def _inequality_jobs(cfg: SuiteConfig) -> list[Job]:
    jobs = [
        Job(f"inequalities/catalog/n={n}", _job_inequalities_order, (n,))
        for n in range(1, cfg.graph_order + 1)
    ]
    if cfg.random_graphs:
        jobs.append(Job(f"inequalities/random/n={cfg.random_graph_order}", _job_inequalities_random,
                        (cfg.random_graph_order, cfg.random_graphs, cfg.seed)))
    jobs.append(Job(f"inequalities/unions/n<={cfg.union_order}", _job_unions, (cfg.union_order,)))
    jobs.append(Job(f"inequalities/no-skip/n<={cfg.pass_order}", _job_no_skip, (cfg.pass_order,)))
    return jobs


def _job_inequalities_order(job_id: str, n: int, budget: int) -> list[CheckResult]:
    return _job_inequalities(job_id, connected_graphs(n, n), f"connected graphs on {n} vertices", budget)


def _job_inequalities_random(job_id: str, n: int, count: int, seed: int, budget: int) -> list[CheckResult]:
    rng = random.Random(seed)
    graphs = [random_connected_graph(rng, n) for _ in range(count)]
    return _job_inequalities(job_id, graphs, f"{count} random connected graphs on {n} vertices", budget)


# -- duality --------------------------------------------------------------------


def _duality_violations(h: Hypergraph, s: Solver) -> list[str]:
    bad = []
    tr = minimal_transversals(h)
    if minimal_transversals(tr) != simplify(h):
        bad.append(f"{h!r}: Tr(Tr(H)) != simplify(H)")
    pairs = [(W_MM, W_BB), (W_MB, W_BM), (W_BB, W_MM), (W_BM, W_MB)]
    for spec, dual in pairs:
        a, b = s.solve(h, spec), s.solve(tr, dual)
        if a != b:
            bad.append(f"{h!r}: {spec.name}(H)={a} but {dual.name}(Tr H)={b}")
    return bad


def _job_duality_exhaustive(job_id: str, n: int, budget: int) -> list[CheckResult]:
    s = Solver(budget)
    rec = _Recorder(job_id, s)
    bad, count = [], 0
    for h in simple_hypergraphs(n):
        if not h.edges:
            continue  # Tr of the empty family is {∅}, a finished game
        count += 1
        bad += _duality_violations(h, s)
    rec.add("berge_and_role_switch", f"all {count} non-empty simple hypergraphs on {n} labelled vertices",
            "0 violations", f"{len(bad)} violations", ok=not bad, note="; ".join(bad[:5]))
    return rec.results


def _job_duality_sampled(job_id: str, n: int, count: int, seed: int, budget: int) -> list[CheckResult]:
    s = Solver(budget)
    rec = _Recorder(job_id, s)
    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        bad += _duality_violations(random_simple_hypergraph(rng, n), s)
    rec.add("berge_and_role_switch", f"{count} seeded random simple hypergraphs on {n} vertices",
            "0 violations", f"{len(bad)} violations", ok=not bad, note="; ".join(bad[:5]))
    return rec.results


def _job_graph_duality(job_id: str, n: int, budget: int) -> list[CheckResult]:
    rec = _Recorder(job_id)
    graphs = all_graphs(n, n)
    bad = []
    for g in graphs:
        hg, dg = _h(g), minimal_dominating_sets(g)
        if minimal_transversals(hg) != dg:
            bad.append(f"[{_describe(g)}] Tr(H_G) != D_G")
        if minimal_transversals(dg) != simplify(hg):
            bad.append(f"[{_describe(g)}] Tr(D_G) != simplify(H_G)")
    rec.add("tr_hg_equals_dg", f"all {len(graphs)} graphs on {n} vertices", "0 violations",
            f"{len(bad)} violations", ok=not bad, note="; ".join(bad[:5]))
    return rec.results


def _job_catalog_selftest(job_id: str, order: int, budget: int) -> list[CheckResult]:
    rec = _Recorder(job_id)
    try:
        self_test(order)
        ok, got = True, "counts match"
    except AssertionError as exc:
        ok, got = False, str(exc)
    rec.add("counts", f"graph catalog up to {order} vertices", "counts match", got, ok=ok)
    return rec.results


def _duality_jobs(cfg: SuiteConfig) -> list[Job]:
    jobs = [Job(f"duality/hypergraphs/n={n}", _job_duality_exhaustive, (n,))
            for n in range(1, cfg.hyper_exhaustive_order + 1)]
    batch = 100
    for start in range(0, cfg.hyper_samples, batch):
        size = min(batch, cfg.hyper_samples - start)
        jobs.append(Job(f"duality/sampled/n={cfg.hyper_sample_order}/batch={start // batch:02d}",
                        _job_duality_sampled, (cfg.hyper_sample_order, size, cfg.seed + start)))
    jobs += [Job(f"duality/graphs/n={n}", _job_graph_duality, (n,)) for n in range(1, cfg.graph_order + 1)]
    jobs.append(Job(f"duality/catalog-selftest/n<={cfg.graph_order}", _job_catalog_selftest, (cfg.graph_order,)))
    return jobs


# -- conjecture probe -----------------------------------------------------------


def _job_conjecture(job_id: str, graphs: list[Graph], label: str, budget: int) -> list[CheckResult]:
    s = Solver(budget)
    rec = _Recorder(job_id, s)
    found = []
    for g in graphs:
        cap_s, cap_d = conjecture_bound(g)
        sp, dg = s.solve(_h(g), W_MM), s.solve(_h(g), W_MB)
        if sp.finite and sp > cap_s:
            found.append(f"[{_describe(g)}] S-game {sp} > {cap_s}")
        if dg.finite and dg > cap_d:
            found.append(f"[{_describe(g)}] D-game {dg} > {cap_d}")
    rec.add("probe", f"{label} ({len(graphs)} graphs)", "consistent",
            "consistent" if not found else f"{len(found)} counterexamples",
            status=PASS if not found else COUNTEREXAMPLE, note="; ".join(found[:5]))
    return rec.results


def _job_conjecture_catalog(job_id: str, n: int, budget: int) -> list[CheckResult]:
    return _job_conjecture(job_id, connected_graphs(n, n), f"connected graphs on {n} vertices", budget)


def _job_conjecture_families(job_id: str, budget: int) -> list[CheckResult]:
    graphs = [fam.subdivided_star_1(k).graph for k in (2, 3, 4, 5)]
    graphs += [fam.subdivided_star_2(k).graph for k in (2, 3, 4)]
    graphs += [fam.F_prime(k).graph for k in (1, 2)]
    return _job_conjecture(job_id, graphs, "subdivided stars and F'_k", budget)


def _conjecture_jobs(cfg: SuiteConfig) -> list[Job]:
    jobs = [Job(f"conjecture/catalog/n={n}", _job_conjecture_catalog, (n,)) for n in range(1, cfg.graph_order + 1)]
    jobs.append(Job("conjecture/families", _job_conjecture_families))
    return jobs


# -- arithmetic and pairing -----------------------------------------------------


def _job_log_inequality(job_id: str, top: int, budget: int) -> list[CheckResult]:
    rec = _Recorder(job_id)
    # lemma61_check over the whole grid, logarithms tabulated
    flog = np.array([0] + [floor_log2(x) for x in range(1, 2 * top + 1)], dtype=np.int16)
    clog = np.array([0] + [ceil_log2(x) for x in range(1, 2 * top + 1)], dtype=np.int16)
    a = np.arange(1, top + 1)[:, None]
    b = np.arange(2, top + 1)[None, :]
    ok = np.maximum(flog[a] + 1, clog[b - 1]) >= clog[a + b] - 1
    bad = [(int(a[i, 0]), int(b[0, j])) for i, j in zip(*np.nonzero(~ok))]
    rec.add("exhaustive", f"1 <= a <= {top}, 2 <= b <= {top}", "0 violations", f"{len(bad)} violations",
            ok=not bad, note=str(bad[:5]) if bad else "")
    return rec.results


def _job_pairing(job_id: str, family: str, budget: int) -> list[CheckResult]:
    f = fam.parse_family(family)
    g = f.graph
    s = Solver(budget, pairing_oracle=False)
    rec = _Recorder(job_id, s)
    cert = find_pairing_certificate(g)
    rec.add("certificate", f.name, True, cert is not None and verify_pairing_certificate(g, cert))
    rec.add("gamma_smb_prime", f.name, INF, s.solve(_h(g), W_MM), note="solver run without pairing oracle")
    rec.add("gamma_smb", f.name, INF, s.solve(_h(g), W_MB), note="solver run without pairing oracle")
    return rec.results


def _pairing_jobs(cfg: SuiteConfig) -> list[Job]:
    targets = [f"path:{n}" for n in cfg.path_even]
    targets += [f"cycle:{n}" for n in cfg.even_cycles]
    targets += [f"tadpole:{n}:{k}" for n, k in _tadpole_grid(cfg) if (n - k) % 2 == 0]
    return [Job(f"pairing/{t.replace(':', '-')}", _job_pairing, (t,)) for t in targets]


# -- suite ----------------------------------------------------------------------

GROUPS: dict[str, Callable[[SuiteConfig], list[Job]]] = {
    "paths": _path_jobs,
    "tadpoles": _tadpole_jobs,
    "constructions": _construction_jobs,
    "inequalities": _inequality_jobs,
    "duality": _duality_jobs,
    "conjecture": _conjecture_jobs,
    "arithmetic": lambda cfg: [Job("arithmetic/log-inequality", _job_log_inequality, (cfg.log_inequality_max,))],
    "pairing": _pairing_jobs,
}


def build_jobs(cfg: SuiteConfig, only: Iterable[str] | None = None) -> list[Job]:
    jobs = [job for build in GROUPS.values() for job in build(cfg)]
    if only:
        prefixes = tuple(only)
        jobs = [j for j in jobs if j.job_id.startswith(prefixes)]
    return jobs


def run_job(job: Job, budget: int) -> list[CheckResult]:
    try:
        return job.fn(job.job_id, *job.args, budget)
    except BudgetExceeded as exc:
        bound = "" if exc.lower_bound is None else f" (value >= {exc.lower_bound})"
        return [CheckResult(job.job_id, job.job_id, "within budget", f"budget exceeded{bound}",
                            SKIPPED if job.stretch else FAIL, nodes=exc.nodes, note=str(exc))]


def _run_job_star(args: tuple[Job, int]) -> list[CheckResult]:
    return run_job(*args)


def run_jobs(jobs: list[Job], budget: int, workers: int = 1) -> list[CheckResult]:
    if workers <= 1 or len(jobs) <= 1:
        batches = [run_job(j, budget) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_run_job_star, [(j, budget) for j in jobs]))
    results = [r for batch in batches for r in batch]
    results.sort(key=lambda r: r.check_id)
    return results


def _group_check(name: str):
    def check(cfg: SuiteConfig | None = None, workers: int = 1) -> list[CheckResult]:
        cfg = cfg or SuiteConfig()
        return run_jobs(GROUPS[name](cfg), cfg.node_budget, workers)

    check.__name__ = f"check_{name}"
    check.__doc__ = f"Run every {name} job and return its results sorted by id."
    return check


check_paths = _group_check("paths")
check_tadpoles = _group_check("tadpoles")
check_constructions = _group_check("constructions")
check_inequalities = _group_check("inequalities")
check_duality = _group_check("duality")
probe_conjecture = _group_check("conjecture")
check_arithmetic = _group_check("arithmetic")
check_pairing = _group_check("pairing")


def summarize(results: list[CheckResult]) -> dict[str, int]:
    counts = {"pass": 0, "fail": 0, "skipped": 0, "counterexample": 0}
    for r in results:
        key = "skipped" if r.status == SKIPPED else r.status
        counts[key] += 1
    return counts


def run_suite(cfg: SuiteConfig | None = None, only: Iterable[str] | None = None, workers: int = 1,
              resume: dict | None = None) -> tuple[list[CheckResult], dict]:
    """Run the selected jobs; returns (results, report dict).

    ``resume`` is an earlier report: jobs whose results there all passed are
    not rerun and their old results are reused.
    """
    cfg = cfg or SuiteConfig()
    jobs = build_jobs(cfg, only)
    reused: list[CheckResult] = []
    if resume:
        old = [CheckResult(**{"wall_time": 0.0, **r}) for r in resume.get("results", [])]
        todo = []
        for job in jobs:
            mine = [r for r in old if r.check_id == job.job_id or r.check_id.startswith(job.job_id + "/")]
            if mine and all(r.status == PASS for r in mine):
                reused += mine
            else:
                todo.append(job)
        jobs = todo
    results = run_jobs(jobs, cfg.node_budget, workers) + reused
    results.sort(key=lambda r: r.check_id)
    return results, make_report(cfg, results)


def make_report(cfg: SuiteConfig, results: list[CheckResult], timings: bool = False, suite: str = "mbdgame") -> dict:
    return {
        "suite": suite,
        "config": cfg.to_dict(),
        "results": [r.to_dict(timings) for r in results],
        "summary": summarize(results),
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def report_csv(results: list[CheckResult]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["check_id", "status", "expected", "computed", "nodes", "instance"])
    for r in results:
        writer.writerow([r.check_id, r.status, r.expected, r.computed, r.nodes, r.instance])
    return buf.getvalue()
