"""Deterministic rational sampling with side conditions.

Every sampled value is a small Fraction drawn from a seeded RNG, so runs
with equal seeds produce identical reports.  Conditions mirror the side
conditions carried by the catalog (a != 0, b >= 0, a not in {0,1}, joint
polynomial constraints).
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .poly import Poly


class SampleError(RuntimeError):
    pass


class RationalSampler:
    def __init__(self, seed: int):
        self.rng = random.Random(seed)

    def fraction(self, span: int = 5, denominators: Sequence[int] = (1, 1, 2, 3)) -> Fraction:
        num = self.rng.randint(-span, span)
        den = self.rng.choice(list(denominators))
        return Fraction(num, den)

    def satisfying(self, condition: tuple, span: int = 5) -> Fraction:
        for _ in range(200):
            q = self.fraction(span)
            if _meets(q, condition):
                return q
        raise SampleError(f"could not sample a rational meeting {condition}")

    def params(self, specs, solve_last=None, extra_guards: Sequence[tuple] = (),
               override: Optional[Dict[str, Fraction]] = None) -> Dict[str, Fraction]:
        """One assignment for a catalog parameter list.

        ``override`` pins named parameters; ``solve_last`` computes one
        parameter from the others; ``extra_guards`` are rejection
        constraints on the whole assignment.
        """
        override = override or {}
        for _ in range(500):
            values: Dict[str, Fraction] = {}
            ok = True
            for spec in specs:
                if solve_last and spec.name == solve_last[0]:
                    continue
                if spec.name in override:
                    values[spec.name] = Fraction(override[spec.name])
                    if not _meets(values[spec.name], spec.condition):
                        raise SampleError(
                            f"override {spec.name}={override[spec.name]} violates {spec.condition}")
                    continue
                try:
                    values[spec.name] = self.satisfying(spec.condition)
                except SampleError:
                    ok = False
                    break
            if not ok:
                continue
            if solve_last:
                name, num, den = solve_last
                d = den.evaluate(values)
                if d == 0:
                    continue
                values[name] = num.evaluate(values) / d
                if name in override and values[name] != override[name]:
                    continue
            if all(_guard_ok(g, values) for g in extra_guards):
                return values
        raise SampleError("could not sample parameters meeting all constraints")

    def param_list(self, specs, count: int, **kw) -> List[Dict[str, Fraction]]:
        return [self.params(specs, **kw) for _ in range(count)]


def _meets(q: Fraction, condition: tuple) -> bool:
    kind = condition[0]
    if kind == "any":
        return True
    if kind == "nonzero":
        return q != 0
    if kind == "nonneg":
        return q >= 0
    if kind == "positive":
        return q > 0
    if kind == "not_in":
        return q not in {Fraction(v) for v in condition[1]}
    raise ValueError(f"unknown condition {condition!r}")


def _guard_ok(guard: tuple, values: Dict[str, Fraction]) -> bool:
    kind = guard[0]
    if kind == "not_in":
        return values[guard[1]] not in {Fraction(v) for v in guard[2]}
    if kind == "poly_nonzero":
        return guard[1].evaluate(values) != 0
    if kind == "poly_zero":
        return guard[1].evaluate(values) == 0
    raise ValueError(f"unknown guard {guard!r}")
