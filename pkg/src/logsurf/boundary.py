"""Semistable part of a boundary curve and the volume-decreasing tower.

The semistable part is the fixpoint of discarding genus-0 members that
meet the rest of the boundary in fewer than two points.  Self-nodes of an
irreducible member (pa > 0) never disqualify it; only the sum of Gram
entries against the rest is consulted.

The tower blows up a chosen boundary intersection point and then walks up
the semistable curve, excluding the last exceptional from the boundary;
it returns the history together with the transported log class.
"""
from __future__ import annotations

from fractions import Fraction as Q
from typing import Iterable

from dataclasses import dataclass

from .birational import BlowupStep, History, apply_script, boundary_adjustment, total_transform
from .lattice import CurveConfig, LatticeError, QDivisor, pa_of, sum_divisor


@dataclass(frozen=True)
class BoundarySplit:
    """Semistable part C, complement E, and genera of C's components."""

    C: frozenset[str]
    E: frozenset[str]
    component_genera: tuple[tuple[frozenset[str], Q], ...]


def _components(config: CurveConfig, names: frozenset[str]) -> list[frozenset[str]]:
    remaining = set(names)
    out = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        frontier = [seed]
        while frontier:
            cur = frontier.pop()
            i = config.index(cur)
            for other in remaining - comp:
                if config.gram[i][config.index(other)] > 0:
                    comp.add(other)
                    frontier.append(other)
        out.append(frozenset(comp))
        remaining -= comp
    return sorted(out, key=min)


def semistable_part(config: CurveConfig, delta: Iterable[str]) -> BoundarySplit:
    """Discard rational members meeting the rest in < 2 points, to a fixpoint."""
    delta = set(delta)
    for name in delta:
        config.index(name)
    current = set(delta)
    while True:
        doomed = None
        for name in sorted(current):
            rec = config.record(name)
            if rec.pa != 0:
                continue
            i = config.index(name)
            contact = sum(config.gram[i][config.index(o)] for o in current if o != name)
            if contact < 2:
                doomed = name
                break
        if doomed is None:
            break
        current.remove(doomed)
    C = frozenset(current)
    E = frozenset(delta - current)
    genera = tuple(
        (comp, pa_of(config, sum_divisor(config, comp))) for comp in _components(config, C)
    )
    return BoundarySplit(C, E, genera)


def _fresh_name(config: CurveConfig, taken: set[str], stem: str) -> str:
    name = stem
    while name in config.names or name in taken:
        name += "'"
    return name


def tower(
    config: CurveConfig,
    c_name: str,
    e_name: str,
    log_class: QDivisor,
    b: Q,
    n: int,
) -> tuple[History, QDivisor]:
    """Blow up C meet E, then n-1 times the newest exceptional on C.

    All exceptionals except the last join the boundary, so the returned
    class transports K + (strict boundary + G_1..G_{n-1}); it equals the
    pullback of `log_class` minus the final exceptional.  `b` is the
    caller's positive-part coefficient of `e_name`; it is recorded for the
    caller's bookkeeping and does not enter the transform.
    """
    if n < 1:
        raise LatticeError("bad-tower", f"n = {n}")
    if config.entry(c_name, e_name) < 1:
        raise LatticeError("bad-tower", f"{c_name} does not meet {e_name}")
    if not 0 <= Q(b) <= 1:
        raise LatticeError("bad-tower", f"coefficient b = {b} outside [0, 1]")
    steps = []
    taken: set[str] = set()
    prev = e_name
    for k in range(1, n + 1):
        name = _fresh_name(config, taken, f"G{k}")
        taken.add(name)
        steps.append(BlowupStep(((c_name, 1), (prev, 1)), name, joins_boundary=k < n))
        prev = name
    history = apply_script(config, steps)
    adjust = boundary_adjustment(history, {c_name, e_name})
    new_class = total_transform(history, log_class) + adjust
    return history, new_class
