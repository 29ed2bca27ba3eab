"""Shared deterministic generators for the property suites."""
from __future__ import annotations

import random
from fractions import Fraction as Q

from logsurf import BlowupStep, QDivisor, apply_script, blow_up, make_config


def random_config(rng: random.Random, max_curves: int = 5, allow_positive: bool = True):
    """Validate-clean configuration: selfs in -3..3, off-diagonals clipped >= 0."""
    n = rng.randint(1, max_curves)
    names = [f"C{i}" for i in range(1, n + 1)]
    hi = 3 if allow_positive else 0
    curves = [(names[i], rng.randint(-3, hi), rng.randint(0, 2)) for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            m = max(0, rng.randint(-3, 3))
            if m:
                edges.append((names[i], names[j], m))
    return make_config(curves, edges)


def random_effective_divisor(rng: random.Random, config, density: float = 0.8) -> QDivisor:
    """Effective divisor with small denominators (possibly zero)."""
    return QDivisor(
        {
            name: Q(rng.randint(0, 6), rng.choice([1, 2, 3]))
            for name in config.names
            if rng.random() < density
        }
    )


def random_rational(rng: random.Random, lo: int = -4, hi: int = 4) -> Q:
    return Q(rng.randint(lo, hi), rng.choice([1, 2, 3]))


def _step_budget_ok(config, names, mults) -> bool:
    for i in range(len(names)):
        m = mults[i]
        if m * (m - 1) // 2 > config.record(names[i]).pa:
            return False
        for j in range(i + 1, len(names)):
            if config.entry(names[i], names[j]) < mults[i] * mults[j]:
                return False
    return True


def random_history(rng: random.Random, base, max_steps: int = 4, pool=None, prefix: str = "X"):
    """Random blow-up history; branches drawn from `pool` names plus earlier
    exceptionals (default: every curve).  Steps respect the genus and
    intersection budgets; gives up silently when nothing fits."""
    steps = []
    cfg = base
    allowed = set(pool if pool is not None else base.names)
    want = rng.randint(1, max_steps)
    for k in range(want):
        placed = False
        for _ in range(40):
            size = rng.randint(1, min(3, len(allowed)))
            names = rng.sample(sorted(allowed), size)
            mults = [
                rng.choice([1, 1, 2]) if cfg.record(nm).pa >= 1 else 1 for nm in names
            ]
            if _step_budget_ok(cfg, names, mults):
                placed = True
                break
        if not placed:
            break
        step = BlowupStep(tuple(zip(names, mults)), f"{prefix}{k + 1}")
        cfg = blow_up(cfg, step)
        steps.append(step)
        allowed.add(step.exceptional_name)
    return apply_script(base, steps)
