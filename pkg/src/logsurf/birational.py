"""Class-level blow-ups and contractions with history bookkeeping.

A blow-up is specified purely by branch multiplicities: the curves through
the centre and how often each passes.  Tangencies and infinitely-near
points are expressed as sequences of steps whose branches include earlier
exceptionals.  Intersection classes determine every number computed here,
so no analytic local data is carried.

Conventions: the exceptional of a blow-up is a (-1)-curve of genus 0;
strict transforms keep their names; contraction pushes canonical degrees
forward (K downstairs is the pushforward of K upstairs).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable, Mapping, Sequence

from .lattice import (
    CurveConfig,
    CurveRecord,
    LatticeError,
    QDivisor,
    pairings_with_curves,
)


@dataclass(frozen=True)
class BlowupStep:
    """One blow-up: branch (curve, multiplicity) pairs and the new name.

    `joins_boundary` marks whether the new exceptional is adjoined to the
    running boundary divisor; only `boundary_adjustment` consults it.
    """

    branches: tuple[tuple[str, int], ...]
    exceptional_name: str
    joins_boundary: bool = False

    def multiplicity(self, name: str) -> int:
        for curve, m in self.branches:
            if curve == name:
                return m
        return 0


@dataclass(frozen=True)
class History:
    """An ordered sequence of blow-ups from `base` up to `top`."""

    base: CurveConfig
    steps: tuple[BlowupStep, ...]
    top: CurveConfig

    @property
    def exceptional_names(self) -> tuple[str, ...]:
        return tuple(s.exceptional_name for s in self.steps)


def _validate_step(config: CurveConfig, step: BlowupStep) -> None:
    names = [name for name, _ in step.branches]
    if len(set(names)) != len(names):
        raise LatticeError("bad-step", "branch names must be distinct")
    for name, m in step.branches:
        config.index(name)
        if m < 1:
            raise LatticeError("bad-step", f"multiplicity {m} on {name}")
    if not step.exceptional_name:
        raise LatticeError("bad-step", "empty exceptional name")
    if step.exceptional_name in config.names:
        raise LatticeError("bad-step", f"name {step.exceptional_name} already tracked")


def blow_up(config: CurveConfig, step: BlowupStep) -> CurveConfig:
    """Blow up one point with the given branch multiplicities.

    Each branch (C, m) loses m^2 from its self-intersection, m(m-1)/2 from
    its genus, gains m on its canonical degree and meets the new
    exceptional m times; branch pairs lose m*m' intersection.
    """
    _validate_step(config, step)
    n = config.n
    mult = {name: m for name, m in step.branches}
    records = []
    for c in config.curves:
        m = mult.get(c.name, 0)
        drop = m * (m - 1) // 2
        if c.pa - drop < 0:
            raise LatticeError("pa-negative", f"{c.name}: pa {c.pa} cannot absorb m={m}")
        records.append(CurveRecord(c.name, c.pa - drop, c.kdeg + m))
    gram = [list(row) + [0] for row in config.gram]
    gram.append([0] * (n + 1))
    for i, ci in enumerate(config.curves):
        mi = mult.get(ci.name, 0)
        if not mi:
            continue
        gram[i][i] -= mi * mi
        gram[i][n] = gram[n][i] = mi
        for j in range(i + 1, n):
            mj = mult.get(config.curves[j].name, 0)
            if mj:
                gram[i][j] -= mi * mj
                gram[j][i] = gram[i][j]
                if gram[i][j] < 0:
                    raise LatticeError(
                        "intersection-negative",
                        f"{ci.name}.{config.curves[j].name} drops below 0",
                    )
    gram[n][n] = -1
    records.append(CurveRecord(step.exceptional_name, 0, -1))
    return CurveConfig(
        tuple(records), tuple(tuple(row) for row in gram), config.assume_tracked_complete
    )


def contract_minus_one(config: CurveConfig, name: str) -> CurveConfig:
    """Contract a (-1)-curve; exact inverse of `blow_up`."""
    g = config.index(name)
    rec = config.curves[g]
    if config.gram[g][g] != -1 or rec.pa != 0 or rec.kdeg != -1:
        raise LatticeError("not-minus-one-curve", name)
    keep = [i for i in range(config.n) if i != g]
    records = []
    for i in keep:
        c = config.curves[i]
        m = config.gram[i][g]
        records.append(CurveRecord(c.name, c.pa + m * (m - 1) // 2, c.kdeg - m))
    gram = []
    for i in keep:
        row = []
        for j in keep:
            row.append(config.gram[i][j] + config.gram[i][g] * config.gram[j][g])
        gram.append(tuple(row))
    return CurveConfig(tuple(records), tuple(gram), config.assume_tracked_complete)


def apply_script(config: CurveConfig, steps: Sequence[BlowupStep]) -> History:
    """Replay a blow-up script, returning the full history."""
    top = config
    for step in steps:
        top = blow_up(top, step)
    return History(config, tuple(steps), top)


# ---------------------------------------------------------------------------
# Divisor transport along a history.
# ---------------------------------------------------------------------------

def _pull_step(coeffs: dict[str, Q], step: BlowupStep) -> dict[str, Q]:
    e = sum((Q(m) * coeffs.get(name, Q(0)) for name, m in step.branches), Q(0))
    out = dict(coeffs)
    if e:
        out[step.exceptional_name] = e
    return out


def total_transform(history: History, d_on_base: QDivisor) -> QDivisor:
    """Pull a base divisor back step by step (the full preimage class)."""
    for name in d_on_base.coeffs:
        history.base.index(name)
    coeffs = dict(d_on_base.coeffs)
    for step in history.steps:
        coeffs = _pull_step(coeffs, step)
    return QDivisor(coeffs)


def strict_transform(history: History, d_on_base: QDivisor) -> QDivisor:
    """Carry named base curves upstairs with no exceptional components."""
    for name in d_on_base.coeffs:
        history.base.index(name)
    return QDivisor(dict(d_on_base.coeffs))


def pushforward(history: History, d_on_top: QDivisor) -> QDivisor:
    """Drop all exceptional coefficients; keep curves originating downstairs."""
    for name in d_on_top.coeffs:
        history.top.index(name)
    exceptional = set(history.exceptional_names)
    return QDivisor({k: v for k, v in d_on_top.items() if k not in exceptional})


def boundary_adjustment(history: History, boundary: Iterable[str]) -> QDivisor:
    """Relative log divisor R with K_top + B_top = h*(K_base + B_base) + R.

    B is the running boundary: strict transforms of `boundary` plus every
    exceptional whose step has joins_boundary set.  Each step contributes
    (1 - m_B(p) + [joins]) times its exceptional, where m_B(p) sums the
    multiplicities of the boundary branches at the centre.
    """
    current = set(boundary)
    for name in current:
        history.base.index(name)
    coeffs: dict[str, Q] = {}
    for step in history.steps:
        coeffs = _pull_step(coeffs, step)
        m_b = sum(m for name, m in step.branches if name in current)
        a = 1 - m_b + (1 if step.joins_boundary else 0)
        if a:
            coeffs[step.exceptional_name] = coeffs.get(step.exceptional_name, Q(0)) + a
        if step.joins_boundary:
            current.add(step.exceptional_name)
    return QDivisor(coeffs)


# ---------------------------------------------------------------------------
# Contraction loops.
# ---------------------------------------------------------------------------

def _minus_one_curves(config: CurveConfig) -> list[str]:
    out = []
    for i, c in enumerate(config.curves):
        if config.gram[i][i] == -1 and c.pa == 0 and c.kdeg == -1:
            out.append(c.name)
    return sorted(out)


def mmp_contract_disjoint(
    config: CurveConfig, marked: Iterable[str]
) -> tuple[CurveConfig, list[str]]:
    """Contract (-1)-curves pairing zero with every marked curve, to a fixpoint.

    Candidates are taken in lexicographic name order for determinism.  A
    marked (-1)-curve never qualifies (it meets itself in -1).
    """
    marked = set(marked)
    for name in marked:
        config.index(name)
    contracted: list[str] = []
    while True:
        found = None
        for name in _minus_one_curves(config):
            i = config.index(name)
            if all(config.gram[i][config.index(m)] == 0 for m in marked if m != name):
                if name in marked:
                    continue  # self-pairing -1 disqualifies marked curves
                found = name
                break
        if found is None:
            return config, contracted
        config = contract_minus_one(config, found)
        contracted.append(found)


def mmp_contract_log(
    config: CurveConfig, log_class: QDivisor
) -> tuple[CurveConfig, QDivisor, list[str]]:
    """Contract (-1)-curves the supplied class meets negatively, to a fixpoint.

    The class (the caller's numerical representative of K + boundary) is
    pushed forward after each contraction.  Lexicographic order; the curve
    count strictly decreases, so the fixpoint is always reached.
    """
    for name in log_class.coeffs:
        config.index(name)
    contracted: list[str] = []
    while True:
        found = None
        vals = pairings_with_curves(config, log_class)
        for name in _minus_one_curves(config):
            if vals[config.index(name)] < 0:
                found = name
                break
        if found is None:
            return config, log_class, contracted
        config = contract_minus_one(config, found)
        log_class = QDivisor({k: v for k, v in log_class.items() if k != found})
        contracted.append(found)


def contract_lc_trivial(
    config: CurveConfig, log_class: QDivisor
) -> tuple[CurveConfig, QDivisor, list[str]]:
    """Contract (-1)-curves on which the positive part of the class is zero.

    These are volume-neutral contractions toward the model on which the
    class separates curves; the class is pushed forward and re-decomposed
    each round.  Lexicographic order, fixpoint guaranteed.
    """
    from .zariski import zariski_decompose

    contracted: list[str] = []
    while True:
        result = zariski_decompose(config, log_class)
        vals = pairings_with_curves(config, result.positive)
        found = None
        for name in _minus_one_curves(config):
            if vals[config.index(name)] == 0:
                found = name
                break
        if found is None:
            return config, log_class, contracted
        config = contract_minus_one(config, found)
        log_class = QDivisor({k: v for k, v in log_class.items() if k != found})
        contracted.append(found)


# ---------------------------------------------------------------------------
# JSON formats.
#
# Script: [{"point": [{"curve", "mult"}], "name", "joins_boundary"}, ...]
# History: {"base": <config>, "steps": <script>}; the top is replayed.
# ---------------------------------------------------------------------------

def step_to_json(step: BlowupStep) -> dict:
    return {
        "point": [{"curve": name, "mult": m} for name, m in step.branches],
        "name": step.exceptional_name,
        "joins_boundary": step.joins_boundary,
    }


def step_from_json(data: Mapping) -> BlowupStep:
    branches = tuple((p["curve"], int(p["mult"])) for p in data["point"])
    return BlowupStep(branches, data["name"], bool(data.get("joins_boundary", False)))


def script_to_json(steps: Sequence[BlowupStep]) -> list[dict]:
    return [step_to_json(s) for s in steps]


def script_from_json(data: Sequence[Mapping]) -> list[BlowupStep]:
    return [step_from_json(s) for s in data]


def history_to_json(history: History) -> dict:
    from .lattice import config_to_json

    return {"base": config_to_json(history.base), "steps": script_to_json(history.steps)}


def history_from_json(data: Mapping) -> History:
    from .lattice import config_from_json

    base = config_from_json(data["base"])
    return apply_script(base, script_from_json(data["steps"]))
