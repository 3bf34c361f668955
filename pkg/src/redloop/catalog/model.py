"""Data model for the subalgebra catalog.

Subalgebra bases and complement leading vectors are stored with
polynomial entries in the catalog's outer parameters (the a, b, c, ... of
the listings); instantiating at rational parameter values produces exact
coordinate vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..algebra import AlgebraError
from ..poly import Poly

Coords = Tuple[Fraction, ...]


class PVec:
    """Vector with Poly entries; supports the linear combinations the
    listings are written in."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence):
        self.entries = tuple(Poly.lift(x) for x in entries)

    def __add__(self, other: "PVec") -> "PVec":
        return PVec([a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "PVec") -> "PVec":
        return PVec([a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "PVec":
        return PVec([-a for a in self.entries])

    def __rmul__(self, scalar) -> "PVec":
        s = Poly.lift(scalar)
        return PVec([s * a for a in self.entries])

    def evaluate(self, bindings: Dict[str, Fraction]) -> Coords:
        return tuple(p.evaluate(bindings) for p in self.entries)

    def substitute(self, bindings) -> "PVec":
        return PVec([p.substitute(bindings) for p in self.entries])

    def variables(self) -> set:
        out = set()
        for p in self.entries:
            out |= p.variables()
        return out

    def __repr__(self):
        return f"PVec({list(self.entries)!r})"


class Basis:
    """1-based standard basis accessor, matching the e_1..e_n of the texts."""

    def __init__(self, dim: int):
        self.dim = dim

    def __call__(self, index: int) -> PVec:
        if not 1 <= index <= self.dim:
            raise IndexError(index)
        entries = [Poly() for _ in range(self.dim)]
        entries[index - 1] = Poly.const(1)
        return PVec(entries)


# parameter side conditions: ("any",), ("nonzero",), ("nonneg",),
# ("positive",), ("not_in", (q1, q2, ...))
@dataclass(frozen=True)
class ParamSpec:
    name: str
    condition: tuple = ("any",)


@dataclass
class SubalgebraSpec:
    algebra: str
    sid: str                       # e.g. "sl3R.h17"
    params: List[ParamSpec]
    basis: List[PVec]
    # joint constraint: last param solved as numerator/denominator polys of
    # the earlier ones (e.g. bc - ad = 1/2 pinning d)
    solve_last: Optional[Tuple[str, Poly, Poly]] = None
    notes: List[str] = field(default_factory=list)

    def param_names(self) -> List[str]:
        return [p.name for p in self.params]

    def instantiate(self, outer: Dict[str, Fraction]) -> List[Coords]:
        return [v.evaluate(outer) for v in self.basis]

    def short_id(self) -> str:
        return self.sid.split(".", 1)[1]


@dataclass
class FamilyCase:
    leading: List[PVec]
    # guard: None for the single case, else (param, "zero"/"nonzero")
    guard: Optional[Tuple[str, str]] = None


@dataclass
class ComplementFamily:
    algebra: str
    subalgebra_id: str
    cases: List[FamilyCase]

    def leading_for(self, outer: Dict[str, Fraction]) -> List[Coords]:
        for case in self.cases:
            if case.guard is None:
                return [v.evaluate(outer) for v in case.leading]
            name, kind = case.guard
            value = outer[name]
            if (kind == "zero") == (value == 0):
                return [v.evaluate(outer) for v in case.leading]
        raise AlgebraError(f"no family case matches parameters for {self.subalgebra_id}")


# expected basis: maps outer parameter values to vectors whose entries are
# polynomials in the outcome's free parameters
ExpectedBasis = Callable[[Dict[str, Fraction]], List[PVec]]


@dataclass
class ExpectedOutcome:
    prop: str                      # e.g. "Prop4"
    case_id: str                   # e.g. "Prop4.h5"
    algebra: str
    subalgebra_id: str
    verdict: str                   # "reductive" | "not-reductive" | "undocumented"
    expected: Optional[ExpectedBasis] = None
    free: List[str] = field(default_factory=list)
    # when False, the listed complements are slices of a larger solution
    # set and only containment of the listed families is asserted
    exhaustive: bool = True
    outer_override: Dict[str, Fraction] = field(default_factory=dict)
    # extra sampling constraints beyond the subalgebra's own conditions:
    # ("not_in", name, values) or ("poly_nonzero", Poly) or ("poly_zero", Poly)
    outer_guard: List[tuple] = field(default_factory=list)
    # constructive constraint: pin one outer parameter to num/den of the others
    outer_solve: Optional[Tuple[str, Poly, Poly]] = None
    citation: str = ""
