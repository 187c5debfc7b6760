"""Exact Maker-Breaker solver.

Maker claims vertices to fill a winning set, Breaker claims vertices to hit
every winning set.  Positions are edge families after Maker's moves have been
shrunk out and Breaker's moves deleted, so the state is just a tuple of edge
masks plus the side to move.

The engine answers the bounded question "can the counted player win within
``d`` of their own moves?" and finds the winning number by iterative
deepening on ``d``.  Facts used for pruning:

* edges larger than Maker's remaining budget can never be completed, so they
  are dropped before the position is looked up;
* a family is replaced by its inclusion-minimal edges (supersets are
  redundant for Maker and automatically hit for Breaker);
* a single-vertex edge is an immediate threat: Maker completes it if he is
  to move, Breaker must take it otherwise;
* a vertex shared by all edges wins on the spot for Breaker;
* optionally, a pairing (disjoint vertex pairs, every edge containing one)
  proves Maker cannot win at all.

Moves are restricted to vertices lying in some edge; any other move is a pass
in disguise and passing never helps either player.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable

from .graph import Graph, closed_neighborhood_hypergraph
from .hypergraph import Hypergraph, components, iter_bits

DEFAULT_NODE_BUDGET = int(os.environ.get("MBDGAME_NODES", 10**8))

_BIG = 1 << 30
_KEY_SHIFT = 64


@total_ordering
class GameValue:
    """A winning number: a finite move count or infinity (no win possible)."""

    __slots__ = ("k",)

    def __init__(self, k: int | None):
        if k is not None and k < 0:
            raise ValueError("winning numbers are non-negative")
        object.__setattr__(self, "k", k)

    def __setattr__(self, name, value):
        raise AttributeError("GameValue is immutable")

    @property
    def finite(self) -> bool:
        return self.k is not None

    def _cmp_key(self) -> float:
        return float("inf") if self.k is None else self.k

    def __eq__(self, other) -> bool:
        if isinstance(other, GameValue):
            return self.k == other.k
        if isinstance(other, (int, float)) and not isinstance(other, bool):
            return self._cmp_key() == other
        return NotImplemented

    def __lt__(self, other) -> bool:
        if isinstance(other, GameValue):
            return self._cmp_key() < other._cmp_key()
        if isinstance(other, (int, float)):
            return self._cmp_key() < other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._cmp_key())

    def __add__(self, other: int) -> "GameValue":
        if not isinstance(other, int):
            return NotImplemented
        return self if self.k is None else GameValue(self.k + other)

    __radd__ = __add__

    def __sub__(self, other: int) -> "GameValue":
        if not isinstance(other, int):
            return NotImplemented
        return self if self.k is None else GameValue(max(self.k - other, 0))

    def __str__(self) -> str:
        return "inf" if self.k is None else str(self.k)

    def __repr__(self) -> str:
        return "INF" if self.k is None else f"GameValue({self.k})"

    def to_json(self) -> int | None:
        return self.k


INF = GameValue(None)


class Player(enum.Enum):
    MAKER = "M"
    BREAKER = "B"

    @property
    def other(self) -> "Player":
        return Player.BREAKER if self is Player.MAKER else Player.MAKER


@dataclass(frozen=True)
class GameSpec:
    counted: Player
    first: Player
    maker_may_pass: bool = False
    breaker_may_pass: bool = False

    @property
    def has_passes(self) -> bool:
        return self.maker_may_pass or self.breaker_may_pass

    @property
    def name(self) -> str:
        base = f"w_{self.counted.value}^{self.first.value}"
        if self.maker_may_pass:
            base += "+Mpass"
        if self.breaker_may_pass:
            base += "+Bpass"
        return base

    def starting(self, first: Player) -> "GameSpec":
        return GameSpec(self.counted, first, self.maker_may_pass, self.breaker_may_pass)


W_MM = GameSpec(Player.MAKER, Player.MAKER)
W_MB = GameSpec(Player.MAKER, Player.BREAKER)
W_BM = GameSpec(Player.BREAKER, Player.MAKER)
W_BB = GameSpec(Player.BREAKER, Player.BREAKER)


class BudgetExceeded(RuntimeError):
    """The node budget ran out; ``lower_bound`` is what was proven so far."""

    def __init__(self, nodes: int, lower_bound: int | None = None):
        self.nodes = nodes
        self.lower_bound = lower_bound
        msg = f"search budget exceeded after {nodes} nodes"
        if lower_bound is not None:
            msg += f" (value >= {lower_bound})"
        super().__init__(msg)


class GameOver(ValueError):
    """The position is already decided."""


# -- edge-family primitives -----------------------------------------------------


def _size_key(m: int) -> int:
    return (m.bit_count() << _KEY_SHIFT) | m


def normalize(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-minimal members, sorted by (size, mask)."""
    out: list[int] = []
    for e in sorted(set(masks), key=_size_key):
        for f in out:
            if f & e == f:
                break
        else:
            out.append(e)
    return tuple(out)


def _shrink(edges: tuple[int, ...], bit: int) -> tuple[int, ...]:
    if not any(e & bit for e in edges):
        return edges
    return normalize([e & ~bit for e in edges])


def _delete(edges: tuple[int, ...], bit: int) -> tuple[int, ...]:
    return tuple(e for e in edges if not e & bit)


def _union(edges: tuple[int, ...]) -> int:
    u = 0
    for e in edges:
        u |= e
    return u


def _common(edges: tuple[int, ...]) -> int:
    c = edges[0]
    for e in edges:
        c &= e
        if not c:
            break
    return c


def _by_size(edges: tuple[int, ...], limit: int) -> tuple[int, ...]:
    if edges and edges[-1].bit_count() > limit:
        return tuple(e for e in edges if e.bit_count() <= limit)
    return edges


def _ordered_moves(edges: tuple[int, ...]) -> list[int]:
    """Vertices weighted by sum of 2^-|e| over their edges, heaviest first."""
    score: dict[int, int] = {}
    for e in edges:
        w = 1 << (_KEY_SHIFT - e.bit_count())
        for v in iter_bits(e):
            score[v] = score.get(v, 0) + w
    return sorted(score, key=lambda v: (-score[v], v))


def _packing(edges: tuple[int, ...]) -> int:
    """Size of a greedy family of pairwise disjoint edges (a transversal lower bound)."""
    used = 0
    count = 0
    for e in edges:
        if not e & used:
            used |= e
            count += 1
    return count


class _Abort(Exception):
    pass


def find_pairing(edges: Iterable[int], step_limit: int = 5000) -> list[int] | None:
    """Disjoint vertex pairs such that every edge contains one of them.

    Such a pairing lets Breaker answer each Maker move inside a pair with the
    partner vertex, so Maker never completes an edge whoever starts.  Returns
    pair masks, or ``None`` if none exists or the step limit is hit.
    """
    edges = normalize(edges)
    if not edges or edges[0].bit_count() < 2:
        return None if edges else []
    steps = 0

    def search(pairs: list[int], used: int) -> list[int] | None:
        nonlocal steps
        steps += 1
        if steps > step_limit:
            raise _Abort
        best, best_count = 0, _BIG
        for e in edges:
            if any(p & e == p for p in pairs):
                continue
            avail = e & ~used
            c = avail.bit_count()
            if c < 2:
                return None
            if c < best_count:
                best, best_count = avail, c
                if c == 2:
                    break
        if not best:
            return pairs
        vs = [1 << v for v in iter_bits(best)]
        for i, a in enumerate(vs):
            for b in vs[i + 1:]:
                found = search(pairs + [a | b], used | a | b)
                if found is not None:
                    return found
        return None

    try:
        return search([], 0)
    except _Abort:
        return None


# -- the engine -----------------------------------------------------------------


@dataclass(frozen=True)
class MBDValues:
    """The four Maker-Breaker domination numbers of a graph."""

    gamma_smb: GameValue
    gamma_smb_prime: GameValue
    gamma_mb: GameValue
    gamma_mb_prime: GameValue

    def as_dict(self) -> dict[str, GameValue]:
        return {
            "gamma_smb": self.gamma_smb,
            "gamma_smb_prime": self.gamma_smb_prime,
            "gamma_mb": self.gamma_mb,
            "gamma_mb_prime": self.gamma_mb_prime,
        }


class Solver:
    """Memoizing solver; one instance may be reused across many positions.

    ``pairing_oracle`` enables the pairing shortcut for proving that Maker
    cannot win.  It only ever proves "no win", never a finite value.
    """

    def __init__(self, node_budget: int | None = None, pairing_oracle: bool = True):
        self.node_budget = DEFAULT_NODE_BUDGET if node_budget is None else node_budget
        self.pairing_oracle = pairing_oracle
        self.nodes = 0
        self._maker_memo: dict[tuple, tuple[int, int]] = {}
        self._breaker_memo: dict[tuple, tuple[int, int]] = {}
        self._pass_memo: dict[tuple, bool] = {}

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise BudgetExceeded(self.nodes)

    # ---- counted Maker -------------------------------------------------------

    def _maker_wins(self, edges: tuple[int, ...], d: int, maker_turn: bool) -> bool:
        """Can Maker fill an edge within ``d`` more Maker moves?"""
        self._tick()
        if d <= 0:
            return False
        edges = _by_size(edges, d)
        if not edges:
            return False
        if maker_turn:
            if edges[0].bit_count() == 1:
                return True
            if d == 1:
                return False
        else:
            if edges[0].bit_count() == 1:
                if len(edges) > 1 and edges[1].bit_count() == 1:
                    return True
                return self._maker_wins(_delete(edges, edges[0]), d, True)
            if _common(edges):
                return False
        key = (edges, maker_turn)
        lo, hi = self._maker_memo.get(key, (0, _BIG))
        if d >= hi:
            return True
        if d <= lo:
            return False
        if self.pairing_oracle and find_pairing(edges, 200) is not None:
            self._maker_memo[key] = (_BIG, _BIG)
            return False
        if maker_turn:
            won = any(
                self._maker_wins(_shrink(edges, 1 << v), d - 1, False)
                for v in _ordered_moves(edges)
            )
        else:
            won = all(
                self._maker_wins(_delete(edges, 1 << v), d, True)
                for v in _ordered_moves(edges)
            )
        lo, hi = self._maker_memo.get(key, (0, _BIG))
        self._maker_memo[key] = (lo, min(hi, d)) if won else (max(lo, d), hi)
        return won

    def maker_value(self, edges: tuple[int, ...], maker_turn: bool) -> GameValue:
        """Maker's winning number on a normalized, non-terminal edge tuple."""
        if not edges:
            return INF
        if edges[0] == 0:
            raise GameOver("Maker has already won")
        free = _union(edges).bit_count()
        dmax = (free + 1) // 2 if maker_turn else free // 2
        d = max(edges[0].bit_count(), 1)
        try:
            while d <= dmax:
                if self._maker_wins(edges, d, maker_turn):
                    return GameValue(d)
                d += 1
        except BudgetExceeded as exc:
            raise BudgetExceeded(exc.nodes, d) from None
        return INF

    # ---- counted Breaker -----------------------------------------------------

    def _breaker_wins(self, edges: tuple[int, ...], d: int, breaker_turn: bool) -> bool:
        """Can Breaker hit every edge within ``d`` more Breaker moves?"""
        self._tick()
        if not edges:
            return True
        if breaker_turn:
            if d <= 0:
                return False
            if edges[0].bit_count() == 1:
                if len(edges) > 1 and edges[1].bit_count() == 1:
                    return False
                rest = _delete(edges, edges[0])
                return not rest or self._breaker_wins(rest, d - 1, False)
            if _common(edges):
                return True
            if d == 1:
                return False
        elif edges[0].bit_count() == 1:
            return False
        if _packing(edges) > d:
            return False
        key = (edges, breaker_turn)
        lo, hi = self._breaker_memo.get(key, (0, _BIG))
        if d >= hi:
            return True
        if d <= lo:
            return False
        if breaker_turn:
            won = any(
                self._breaker_wins(_delete(edges, 1 << v), d - 1, False)
                for v in _ordered_moves(edges)
            )
        else:
            won = all(
                self._breaker_wins(_shrink(edges, 1 << v), d, True)
                for v in _ordered_moves(edges)
            )
        lo, hi = self._breaker_memo.get(key, (0, _BIG))
        self._breaker_memo[key] = (lo, min(hi, d)) if won else (max(lo, d), hi)
        return won

    def breaker_value(self, edges: tuple[int, ...], breaker_turn: bool) -> GameValue:
        """Breaker's winning number on a normalized edge tuple."""
        if not edges:
            return GameValue(0)
        if edges[0] == 0:
            raise GameOver("Maker has already won")
        free = _union(edges).bit_count()
        dmax = (free + 1) // 2 if breaker_turn else free // 2
        d = max(_packing(edges), 1)
        try:
            while d <= dmax:
                if self._breaker_wins(edges, d, breaker_turn):
                    return GameValue(d)
                d += 1
        except BudgetExceeded as exc:
            raise BudgetExceeded(exc.nodes, d) from None
        return INF

    # ---- pass-permitting variant ----------------------------------------------

    def _pass_wins(self, edges, d, maker_turn, prev_pass, spec: GameSpec) -> bool:
        """Bounded win test when one or both players may pass.

        A pass claims nothing, is never counted, and may not directly follow
        the opponent's pass (so the game cannot stall).
        """
        self._tick()
        counted_maker = spec.counted is Player.MAKER
        if counted_maker:
            if not edges or d <= 0:
                return False
            edges = _by_size(edges, d)
            if not edges:
                return False
        else:
            if not edges:
                return True
            if d <= 0:
                return False
        key = (edges, d, maker_turn, prev_pass, spec)
        hit = self._pass_memo.get(key)
        if hit is not None:
            return hit
        may_pass = spec.maker_may_pass if maker_turn else spec.breaker_may_pass
        outcomes = []
        for v in sorted(iter_bits(_union(edges))):
            bit = 1 << v
            if maker_turn:
                child = _shrink(edges, bit)
                if child[0] == 0:
                    outcomes.append(counted_maker)
                elif counted_maker:
                    outcomes.append(self._pass_wins(child, d - 1, False, False, spec))
                else:
                    outcomes.append(self._pass_wins(child, d, False, False, spec))
            else:
                child = _delete(edges, bit)
                if counted_maker:
                    outcomes.append(bool(child) and self._pass_wins(child, d, True, False, spec))
                else:
                    outcomes.append(not child or self._pass_wins(child, d - 1, True, False, spec))
        if may_pass and not prev_pass:
            outcomes.append(self._pass_wins(edges, d, not maker_turn, True, spec))
        counted_to_move = maker_turn == counted_maker
        won = any(outcomes) if counted_to_move else all(outcomes)
        self._pass_memo[key] = won
        return won

    def _pass_value(self, edges: tuple[int, ...], spec: GameSpec) -> GameValue:
        if spec.counted is Player.MAKER and not edges:
            return INF
        if spec.counted is Player.BREAKER and not edges:
            return GameValue(0)
        free = _union(edges).bit_count()
        maker_turn = spec.first is Player.MAKER
        for d in range(1, free + 1):
            if self._pass_wins(edges, d, maker_turn, False, spec):
                return GameValue(d)
        return INF

    # ---- public entry points -------------------------------------------------

    def value(self, edges: Iterable[int], spec: GameSpec) -> GameValue:
        """Value of a position given as raw edge masks."""
        edges = normalize(edges)
        if edges and edges[0] == 0:
            raise GameOver("the position already contains a claimed winning set")
        if spec.has_passes:
            return self._pass_value(edges, spec)
        if spec.counted is Player.MAKER:
            return self.maker_value(edges, spec.first is Player.MAKER)
        return self.breaker_value(edges, spec.first is Player.BREAKER)

    def solve(self, h: Hypergraph, spec: GameSpec = W_MM) -> GameValue:
        if h.has_empty_edge:
            raise GameOver("the root contains an empty edge; Maker has already won")
        return self.value(h.edges, spec)

    def solve_with_components(self, h: Hypergraph, spec: GameSpec = W_MM) -> GameValue:
        """Maker-first Maker-counted value as the minimum over components."""
        if spec != W_MM:
            raise ValueError("component decomposition is only valid for w_M^M")
        if h.has_empty_edge:
            raise GameOver("the root contains an empty edge")
        return min((self.solve(c, spec) for c in components(h)), default=INF)

    def solve_restricted(self, h: Hypergraph, keep: Iterable[int], spec: GameSpec = W_MM) -> GameValue:
        """Solve with only the edges at positions ``keep`` of ``h.edges`` as winning sets."""
        keep = sorted(set(keep))
        if not keep:
            raise ValueError("keep must name at least one edge")
        if keep[0] < 0 or keep[-1] >= len(h.edges):
            raise IndexError("edge index out of range")
        return self.solve(Hypergraph(h.universe, tuple(h.edges[i] for i in keep)), spec)

    def solve_with_pass(self, h: Hypergraph, spec: GameSpec) -> GameValue:
        return self.solve(h, spec)

    def _move_value(self, edges: tuple[int, ...], v: int, spec: GameSpec, mover: Player):
        """(value after ``mover`` plays ``v``, tie-break key for the mover)."""
        bit = 1 << v
        if mover is Player.MAKER:
            child = _shrink(edges, bit)
            immediate = child[0] == 0
        else:
            child = _delete(edges, bit)
            immediate = not child
        own_move = 1 if spec.counted is mover else 0
        if immediate:
            val = GameValue(1) if spec.counted is mover else INF
            return val, 1
        nxt_maker_turn = mover is Player.BREAKER
        if spec.counted is Player.MAKER:
            val = self.maker_value(child, nxt_maker_turn) + own_move
        else:
            val = self.breaker_value(child, not nxt_maker_turn) + own_move
        secondary = 0
        if spec.counted is not mover and not val.finite:
            # mover wins anyway: prefer the move that wins fastest
            if mover is Player.MAKER:
                secondary = (self.maker_value(child, False) + 1).k
            else:
                secondary = (self.breaker_value(child, False) + 1).k
        return val, secondary

    def best_move(self, h: Hypergraph, spec: GameSpec = W_MM) -> tuple[int, GameValue]:
        """An optimal move for ``spec.first`` in ``h`` and the resulting value.

        The counted player minimizes its winning number, the other side
        maximizes it.  When the other side can prevent the counted player's
        win entirely, it picks the move that wins fastest for itself.  Ties
        go to the smallest vertex id.
        """
        if spec.has_passes:
            raise ValueError("best_move does not support pass variants")
        edges = normalize(h.edges)
        if not edges or edges[0] == 0:
            raise GameOver("no move: the game is already decided")
        mover = spec.first
        best = None
        for v in sorted(iter_bits(_union(edges))):
            val, secondary = self._move_value(edges, v, spec, mover)
            key = (val, secondary) if spec.counted is mover else (-val._cmp_key(), secondary)
            if best is None or key < best[0]:
                best = (key, v, val)
        return best[1], best[2]

    def principal_line(self, h: Hypergraph, spec: GameSpec = W_MM) -> list[tuple[Player, int]]:
        """Both sides follow :meth:`best_move` until the game is decided."""
        line = []
        mover = spec.first
        while True:
            edges = normalize(h.edges)
            if not edges or edges[0] == 0:
                return line
            v, _ = self.best_move(h, spec.starting(mover))
            line.append((mover, v))
            h = apply_move(h, mover, v)
            mover = mover.other

    def mbd_values(self, g: Graph, independent: bool = False) -> MBDValues:
        """The four domination-game numbers of ``g``.

        Staller is Maker on the closed neighbourhood hypergraph.  Dominator's
        numbers are searched only when Staller cannot win the same game
        (exactly one side wins), unless ``independent`` asks for all four.
        """
        h = closed_neighborhood_hypergraph(g)
        s_prime = self.solve(h, W_MM)
        s_dgame = self.solve(h, W_MB)
        d_dgame = self.solve(h, W_BB) if independent or s_dgame.finite is False else INF
        d_sgame = self.solve(h, W_BM) if independent or s_prime.finite is False else INF
        return MBDValues(s_dgame, s_prime, d_dgame, d_sgame)


def apply_move(h: Hypergraph, player: Player, v: int) -> Hypergraph:
    """Board after ``player`` claims ``v``: Maker shrinks, Breaker deletes."""
    from .hypergraph import delete, shrink

    return shrink(h, 1 << v) if player is Player.MAKER else delete(h, 1 << v)


def solve(h: Hypergraph, spec: GameSpec = W_MM, **kwargs) -> GameValue:
    return Solver(**kwargs).solve(h, spec)


def best_move(h: Hypergraph, spec: GameSpec = W_MM, **kwargs) -> tuple[int, GameValue]:
    return Solver(**kwargs).best_move(h, spec)


def mbd_values(g: Graph, **kwargs) -> MBDValues:
    independent = kwargs.pop("independent", False)
    return Solver(**kwargs).mbd_values(g, independent=independent)
