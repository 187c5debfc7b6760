"""Closed-form values and bounds for the domination-game numbers.

All logarithms are computed on integers via ``int.bit_length``.
"""

from __future__ import annotations

from typing import NamedTuple

from .graph import Graph
from .solver import INF, GameValue


def floor_log2(n: int) -> int:
    if n < 1:
        raise ValueError("log2 needs n >= 1")
    return n.bit_length() - 1


def ceil_log2(n: int) -> int:
    if n < 1:
        raise ValueError("log2 needs n >= 1")
    return (n - 1).bit_length()


def path_gamma_smb_prime(n: int) -> GameValue:
    """S-game Staller number of P_n: floor(log2 n) + 1 for odd n, inf for even n."""
    if n < 1:
        raise ValueError("path order must be positive")
    if n % 2 == 0:
        return INF
    return GameValue(floor_log2(n) + 1)


def sigma(n: int) -> int:
    """(2^ceil(log2 n) - n)/2 + 1 for even n >= 4."""
    if n < 4 or n % 2:
        raise ValueError("sigma is defined for even n >= 4")
    return ((1 << ceil_log2(n)) - n) // 2 + 1


class TadpoleParams(NamedTuple):
    n: int
    k: int

    def validate(self) -> "TadpoleParams":
        if self.n < 3 or self.k < 1:
            raise ValueError("tadpole needs n >= 3 and k >= 1")
        return self


class StallerValues(NamedTuple):
    gamma_smb: GameValue
    gamma_smb_prime: GameValue


def tadpole_values(p: TadpoleParams | tuple[int, int]) -> StallerValues:
    n, k = TadpoleParams(*p).validate()
    if n % 2 == 0 and k % 2 == 1:
        prime = GameValue(ceil_log2(n + k + sigma(n)))
    else:
        prime = INF
    return StallerValues(gamma_smb=INF, gamma_smb_prime=prime)


def f_prime_values(k: int) -> StallerValues:
    if k < 1:
        raise ValueError("F'_k needs k >= 1")
    return StallerValues(gamma_smb=INF, gamma_smb_prime=GameValue(k + 1))


class Triple(NamedTuple):
    delta_plus_one: int
    gamma_smb_prime: GameValue
    gamma_smb: GameValue


def realization_triple(r: int, s: int, t: int) -> Triple:
    if not 2 <= r <= s <= t:
        raise ValueError("need 2 <= r <= s <= t")
    return Triple(r, GameValue(s), GameValue(t))


def lemma61_check(a: int, b: int) -> bool:
    """max{floor(log2 a)+1, ceil(log2(b-1))} >= ceil(log2(a+b)) - 1."""
    if a < 1 or b < 2:
        raise ValueError("need a >= 1 and b >= 2")
    return max(floor_log2(a) + 1, ceil_log2(b - 1)) >= ceil_log2(a + b) - 1


class Bounds(NamedTuple):
    min_degree_lb: int
    half_n_ub_sgame: int
    half_n_ub_dgame: int


def bounds(g: Graph) -> Bounds:
    """delta+1 (lower bound for the S-game number), ceil(n/2), floor(n/2)."""
    return Bounds(g.min_degree + 1, (g.n + 1) // 2, g.n // 2)


def conjecture_bound(g: Graph) -> tuple[int, int]:
    """Conjectured caps (S-game, D-game): ceil(n/2)-delta+1 and floor(n/2)-delta+1."""
    d = g.min_degree
    return (g.n + 1) // 2 - d + 1, g.n // 2 - d + 1
