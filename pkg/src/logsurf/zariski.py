"""Zariski decomposition and volume of effective rational divisors.

The decomposition D = P + N is computed by growing the support of the
negative part: starting from the curves D meets negatively, solve the
exact linear system (D - N) . C_j = 0 on the current support, then adjoin
any curve the remainder still meets negatively.  The support only grows,
so the loop terminates; ties (pairing exactly zero) never enter.

A brute-force oracle enumerating all supports is provided for testing.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from itertools import combinations

from . import _solve
from .lattice import (
    CurveConfig,
    LatticeError,
    QDivisor,
    divisor_to_json,
    is_negative_definite,
    pairing,
    pairings_with_curves,
    rational_str,
)


@dataclass(frozen=True)
class ZariskiResult:
    """Positive part P, negative part N, support of N, bigness and volume."""

    positive: QDivisor
    negative: QDivisor
    support: frozenset[str]
    big: bool
    volume: Q

    def to_json(self) -> dict:
        return {
            "positive": divisor_to_json(self.positive),
            "negative": divisor_to_json(self.negative),
            "support": sorted(self.support),
            "big": self.big,
            "volume": rational_str(self.volume),
        }


def _require_effective(d: QDivisor) -> None:
    if not d.is_effective():
        raise LatticeError("not-effective", "divisor has a negative coefficient")


def _solve_negative_part(config: CurveConfig, dvals: list[Q], support: list[int]) -> list[Q]:
    """Solve N . C_j = D . C_j for N supported on `support` (config indices)."""
    block = [[config.gram[i][j] for j in support] for i in support]
    rhs = [dvals[i] for i in support]
    xs = _solve.solve_symmetric(block, rhs)
    if xs is None:
        raise LatticeError("gram-singular", f"support {[config.names[i] for i in support]}")
    if any(x < 0 for x in xs):
        raise LatticeError(
            "negative-part-not-effective", f"support {[config.names[i] for i in support]}"
        )
    return xs


def _finish(config: CurveConfig, d: QDivisor, negative: QDivisor) -> ZariskiResult:
    support = negative.support
    if not is_negative_definite(config, support):
        raise LatticeError("not-negative-definite", f"support {sorted(support)}")
    positive = d - negative
    square = pairing(config, positive, positive)
    big = square > 0
    return ZariskiResult(positive, negative, support, big, square if big else Q(0))


def zariski_decompose(config: CurveConfig, d: QDivisor) -> ZariskiResult:
    """Unique decomposition of an effective divisor relative to the lattice."""
    _require_effective(d)
    dvals = pairings_with_curves(config, d)
    support = sorted(i for i, v in enumerate(dvals) if v < 0)
    xs: list[Q] = []
    while True:
        xs = _solve_negative_part(config, dvals, support) if support else []
        # remainder pairings: (D - N) . C_i for every tracked curve
        nvals = [Q(0)] * config.n
        for i, x in zip(support, xs):
            if x == 0:
                continue
            row = config.gram[i]
            for j in range(config.n):
                if row[j]:
                    nvals[j] += x * row[j]
        grown = False
        for i in range(config.n):
            if i not in support and dvals[i] - nvals[i] < 0:
                support.append(i)
                grown = True
        if not grown:
            break
        support.sort()
    negative = QDivisor({config.names[i]: x for i, x in zip(support, xs)})
    return _finish(config, d, negative)


def volume(config: CurveConfig, d: QDivisor) -> Q:
    """vol(D): square of the positive part when big, else 0."""
    return zariski_decompose(config, d).volume


def zariski_oracle(config: CurveConfig, d: QDivisor) -> ZariskiResult:
    """Subset-enumeration reference implementation (test use only).

    Tries every support, keeps the candidates satisfying all four result
    invariants, and insists there is exactly one.
    """
    if config.n > 12:
        raise LatticeError("oracle-too-large", f"{config.n} curves (max 12)")
    _require_effective(d)
    dvals = pairings_with_curves(config, d)
    candidates: dict[QDivisor, ZariskiResult] = {}
    indices = range(config.n)
    for size in range(config.n + 1):
        for subset in combinations(indices, size):
            block = [[config.gram[i][j] for j in subset] for i in subset]
            rhs = [dvals[i] for i in subset]
            xs = _solve.solve_symmetric(block, rhs)
            if xs is None or any(x < 0 for x in xs):
                continue
            negative = QDivisor({config.names[i]: x for i, x in zip(subset, xs)})
            positive = d - negative
            if not all(v >= 0 for v in pairings_with_curves(config, positive)):
                continue
            if any(
                pairing(config, positive, QDivisor({name: 1})) != 0
                for name in negative.support
            ):
                continue
            if not is_negative_definite(config, negative.support):
                continue
            if negative not in candidates:
                square = pairing(config, positive, positive)
                big = square > 0
                candidates[negative] = ZariskiResult(
                    positive, negative, negative.support, big, square if big else Q(0)
                )
    if not candidates:
        raise LatticeError("no-valid-decomposition", "no support yields a valid result")
    if len(candidates) > 1:
        raise LatticeError("ambiguous", f"{len(candidates)} distinct valid decompositions")
    return next(iter(candidates.values()))
