"""Reductive-pair machinery.

``constraints`` turns [h, m(p)] <= m(p) into a polynomial system over the
complement parameters p (degree at most 2 by construction), ``solve_family``
resolves such a system into a finite union of affine-linear parameter
families (or refutes it, or honestly reports Unknown), and ``verify_pair``
checks a frozen pair exactly.  Everything is exact rational arithmetic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .algebra import (AlgebraError, Element, LieAlgebra, Subspace, bracket,
                      decompose, direct_sum, is_subalgebra, lie_closure)
from .poly import P, Poly

Coords = Tuple[Fraction, ...]

GEN_LETTERS = "abcdfghjkl"  # letter per generator, as in the source listings


class PreconditionError(AlgebraError):
    pass


@dataclass(frozen=True)
class Provenance:
    h_index: int       # which h basis vector was bracketed
    gen_index: int     # with which family generator
    h_coord: int       # which h-coordinate of the result produced the equation

    def describe(self) -> str:
        return (f"bracket [h{self.h_index + 1}, gen{self.gen_index + 1}], "
                f"h-component {self.h_coord + 1}")


@dataclass
class Equation:
    poly: Poly
    provenance: Provenance


@dataclass
class PolySystem:
    algebra: LieAlgebra
    params: List[str]                  # ordered parameter names
    equations: List[Equation]
    h_vectors: List[Coords]
    leading: List[Coords]
    param_grid: List[List[str]]        # param_grid[j][t] names the H_t weight of generator j

    def generator_vectors(self, point: Dict[str, Fraction]) -> List[Coords]:
        gens = []
        for j, lead in enumerate(self.leading):
            vec = list(lead)
            for t, hvec in enumerate(self.h_vectors):
                w = point[self.param_grid[j][t]]
                if w:
                    for k, hv in enumerate(hvec):
                        vec[k] += w * hv
            gens.append(tuple(vec))
        return gens

    def evaluate(self, point: Dict[str, Fraction]) -> List[Fraction]:
        return [eq.poly.evaluate(point) for eq in self.equations]


def constraints(algebra: LieAlgebra, h_vectors: Sequence[Coords],
                leading: Sequence[Coords]) -> PolySystem:
    """Constraint system for [h, m(p)] <= m(p).

    m(p) is spanned by generators G_j = v_j + sum_t p[j][t] H_t; existence
    of the decomposition below needs (v, H) to be a basis of the algebra,
    i.e. the family must be complementary at p = 0.
    """
    h_vectors = [tuple(Fraction(c) for c in v) for v in h_vectors]
    leading = [tuple(Fraction(c) for c in v) for v in leading]
    n = algebra.dim
    full = [list(v) for v in leading] + [list(h) for h in h_vectors]
    if len(full) != n or linalg.rank(full) != n:
        raise PreconditionError("family is not complementary at zero parameters")
    basis_inv = linalg.inverse(linalg.transpose(full))

    def coeffs_of(vec: Sequence[Fraction]) -> List[Fraction]:
        return [sum(basis_inv[i][k] * vec[k] for k in range(n)) for i in range(n)]

    s = len(leading)
    r = len(h_vectors)
    if s > len(GEN_LETTERS):
        raise PreconditionError("too many generators for the naming scheme")
    grid = [[f"{GEN_LETTERS[j]}{t + 1}" for t in range(r)] for j in range(s)]
    params = [grid[j][t] for j in range(s) for t in range(r)]

    # decompositions of [H_i, v_j] and [H_i, H_t] against (v, H)
    equations: List[Equation] = []
    for i in range(r):
        base_parts = [coeffs_of(algebra.bracket_coords(h_vectors[i], v)) for v in leading]
        h_parts = [coeffs_of(algebra.bracket_coords(h_vectors[i], h)) for h in h_vectors]
        for j in range(s):
            # beta_l and gamma_t of [H_i, G_j] as polynomials in p
            coeff_polys = [Poly.const(c) for c in base_parts[j]]
            for t in range(r):
                pv = P(grid[j][t])
                for k in range(n):
                    if h_parts[t][k]:
                        coeff_polys[k] = coeff_polys[k] + pv * h_parts[t][k]
            beta = coeff_polys[:s]
            gamma = coeff_polys[s:]
            for t in range(r):
                eq = gamma[t]
                for l in range(s):
                    if not beta[l].is_zero():
                        eq = eq - beta[l] * P(grid[l][t])
                if not eq.is_zero():
                    equations.append(Equation(eq, Provenance(i, j, t)))
    return PolySystem(algebra, params, equations, h_vectors, leading, grid)


# -- quadratic analysis -------------------------------------------------------

def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    num = math.isqrt(q.numerator)
    den = math.isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


def _as_quadratic_in(poly: Poly, v: str) -> Tuple[Poly, Poly, Poly]:
    """poly = alpha v^2 + beta v + gamma with alpha/beta/gamma free of v."""
    alpha: Dict[tuple, Fraction] = {}
    beta: Dict[tuple, Fraction] = {}
    gamma: Dict[tuple, Fraction] = {}
    for mon, c in poly.terms.items():
        count = sum(1 for x in mon if x == v)
        rest = tuple(x for x in mon if x != v)
        if count == 0:
            gamma[mon] = c
        elif count == 1:
            beta[rest] = beta.get(rest, Fraction(0)) + c
        elif count == 2:
            alpha[rest] = alpha.get(rest, Fraction(0)) + c
        else:
            raise ValueError("degree above 2")
    return Poly(alpha), Poly(beta), Poly(gamma)


def _perfect_square_root(poly: Poly) -> Optional[Poly]:
    """Linear delta with delta^2 == poly, if one exists over Q."""
    if poly.is_zero():
        return Poly()
    if poly.degree() == 0:
        root = _rational_sqrt(poly.constant_value())
        return Poly.const(root) if root is not None else None
    if poly.degree() != 2:
        return None
    vs = sorted(poly.variables())
    lead = vs[0]
    d = poly.coefficient((lead, lead))
    if d == 0:
        return None
    s = _rational_sqrt(d)
    if s is None:
        return None
    delta = s * P(lead)
    for w in vs[1:]:
        delta = delta + (poly.coefficient((lead, w)) / (2 * s)) * P(w)
    delta = delta + Poly.const(poly.coefficient((lead,)) / (2 * s))
    return delta if delta * delta == poly else None


def _complete_squares(poly: Poly):
    """poly = sum alpha_i * S_i^2 + remainder, remainder square-free."""
    squares = []
    rest = poly
    while True:
        vs = sorted(v for v in rest.variables()
                    if rest.coefficient((v, v)) != 0)
        if not vs:
            return squares, rest
        v = vs[0]
        alpha, beta, gamma = _as_quadratic_in(rest, v)
        a = alpha.constant_value() if alpha.is_constant() else None
        if a is None:
            return squares, rest
        s_form = P(v) + beta / (2 * a)
        squares.append((a, s_form))
        rest = gamma - (beta * beta) / (4 * a)


def _divide_linear(num: Poly, den: Poly) -> Optional[Poly]:
    """num / den when den is linear and divides num with a linear quotient."""
    vs = sorted(num.variables() | den.variables())
    unknowns = vs + ["__const__"]
    monomials = set(num.terms)
    # coefficient matching for num == den * (sum q_v * v + q_0)
    rows = []
    rhs = []
    prod_polys = {}
    for u in unknowns:
        factor = Poly.const(1) if u == "__const__" else P(u)
        prod_polys[u] = den * factor
        monomials |= set(prod_polys[u].terms)
    monomials = sorted(monomials, key=lambda m: (len(m), m))
    for mon in monomials:
        rows.append([prod_polys[u].terms.get(mon, Fraction(0)) for u in unknowns])
        rhs.append(num.terms.get(mon, Fraction(0)))
    sol = linalg.solve(rows, rhs)
    if sol is None:
        return None
    quotient = Poly.const(sol[-1])
    for u, c in zip(vs, sol):
        if c:
            quotient = quotient + c * P(u)
    return quotient


def analyze_quadratic(poly: Poly):
    """Classify a degree-2 polynomial equation poly == 0 over the reals.

    Returns one of
      ("unsat", None)           -- provably no real solution
      ("linears", [l1, ...])    -- equivalent to the linear system l_i == 0
      ("split", (l1, l2))       -- poly == c * l1 * l2
      (None, None)              -- no affine handle found
    """
    squares, rest = _complete_squares(poly)
    if squares and rest.is_constant():
        c = rest.constant_value()
        signs = {1 if a > 0 else -1 for a, _ in squares}
        if len(signs) == 1:
            sign = signs.pop()
            if c == 0:
                return "linears", [s for _, s in squares]
            if (c > 0) == (sign > 0):
                return "unsat", None
    # try to factor into two linear forms via the discriminant
    for v in sorted(poly.variables()):
        alpha, beta, gamma = _as_quadratic_in(poly, v)
        if alpha.is_zero():
            continue
        if not alpha.is_constant():
            continue
        a = alpha.constant_value()
        disc = beta * beta - 4 * a * gamma
        delta = _perfect_square_root(disc)
        if delta is None:
            if disc.is_constant() and disc.constant_value() < 0:
                # a v^2 + b v + c with negative constant discriminant
                return "unsat", None
            continue
        half = Fraction(1, 2) / a
        l1 = P(v) + (beta - delta) * half
        l2 = P(v) + (beta + delta) * half
        return "split", (l1, l2)
    # pure cross structure: poly = v * L + M, factorable iff L | M
    for v in sorted(poly.variables()):
        alpha, beta, gamma = _as_quadratic_in(poly, v)
        if not alpha.is_zero() or beta.is_zero():
            continue
        if gamma.is_zero():
            return "split", (P(v), beta)
        quotient = _divide_linear(gamma, beta)
        if quotient is not None:
            return "split", (P(v) + quotient, beta)
    return None, None


# -- solution sets ------------------------------------------------------------

@dataclass
class Branch:
    solved: Dict[str, Poly]
    free: List[str]

    def contains_point(self, point: Dict[str, Fraction]) -> bool:
        for var, expr in self.solved.items():
            if expr.evaluate(point) != point[var]:
                return False
        return True

    def sample_points(self, params: List[str], values: Sequence[Fraction]) -> Dict[str, Fraction]:
        point = dict(zip(self.free, values))
        for var, expr in self.solved.items():
            point[var] = expr.evaluate(point)
        for name in params:
            point.setdefault(name, Fraction(0))
        return point

    def describe(self) -> str:
        zero = [v for v, e in sorted(self.solved.items()) if e.is_zero()]
        nonzero = [f"{v}={e!r}" for v, e in sorted(self.solved.items()) if not e.is_zero()]
        parts = []
        if self.free:
            parts.append("free " + ",".join(self.free))
        if nonzero:
            parts.append("; ".join(nonzero))
        if zero:
            parts.append(f"{len(zero)} pinned to 0")
        return "; ".join(parts) if parts else "unique point (no parameters)"


@dataclass
class SolutionSet:
    kind: str                       # "sat" | "unsat" | "unknown"
    branches: List[Branch] = field(default_factory=list)
    residuals: List[Equation] = field(default_factory=list)
    unsat_witness: Optional[Provenance] = None

    def describe(self) -> str:
        if self.kind == "unsat":
            who = self.unsat_witness.describe() if self.unsat_witness else "contradiction"
            return f"no solution ({who})"
        if self.kind == "unknown":
            return f"unknown ({len(self.residuals)} residual equations past budget)"
        return " | ".join(b.describe() for b in self.branches)


def solve_family(system: PolySystem, case_depth: int = 12) -> SolutionSet:
    """Resolve the system into affine branches, refute it, or give up.

    Linear equations are eliminated deterministically (first equation in
    listing order, lowest parameter name); remaining quadratics are split
    on the vanishing of their linear factors up to ``case_depth`` nested
    splits.  Unknown is an honest outcome, never a wrong verdict.
    """
    params = system.params
    branches: List[Branch] = []
    residuals: List[Equation] = []
    unsat_witness: List[Optional[Provenance]] = [None]

    def recurse(equations: List[Equation], solved: Dict[str, Poly], depth: int):
        eqs = list(equations)
        while True:
            simplified: List[Equation] = []
            for eq in eqs:
                p = eq.poly.substitute(solved) if solved else eq.poly
                if p.is_zero():
                    continue
                if p.is_constant():
                    if unsat_witness[0] is None:
                        unsat_witness[0] = eq.provenance
                    return
                simplified.append(Equation(p, eq.provenance))
            eqs = simplified
            linear = next((eq for eq in eqs if eq.poly.degree() <= 1), None)
            if linear is None:
                break
            lin = linear.poly.linear_part()
            var = sorted(lin)[0]
            coeff = lin[var]
            expr = (Poly({(): linear.poly.coefficient(())})
                    + Poly({(v,): c for v, c in lin.items() if v != var}))
            expr = expr.scale(Fraction(-1) / coeff)
            binding = {var: expr}
            solved = {v: e.substitute(binding) for v, e in solved.items()}
            solved[var] = expr
            eqs = [Equation(eq.poly.substitute(binding), eq.provenance) for eq in eqs]
        if not eqs:
            free = [v for v in params if v not in solved]
            branches.append(Branch(dict(solved), free))
            return
        target = eqs[0]
        kind, data = analyze_quadratic(target.poly)
        if kind == "unsat":
            if unsat_witness[0] is None:
                unsat_witness[0] = target.provenance
            return
        if kind == "linears":
            extra = [Equation(l, target.provenance) for l in data]
            recurse(eqs[1:] + extra, solved, depth)
            return
        if kind == "split":
            if depth <= 0:
                residuals.extend(eqs)
                return
            l1, l2 = data
            recurse(eqs[1:] + [Equation(l1, target.provenance)], solved, depth - 1)
            recurse(eqs[1:] + [Equation(l2, target.provenance)], solved, depth - 1)
            return
        residuals.extend(eqs)

    recurse(system.equations, {}, case_depth)
    if residuals:
        return SolutionSet("unknown", branches=_dedupe(branches), residuals=residuals)
    if not branches:
        return SolutionSet("unsat", unsat_witness=unsat_witness[0])
    return SolutionSet("sat", branches=_dedupe(branches))


def _dedupe(branches: List[Branch]) -> List[Branch]:
    seen = set()
    out = []
    for b in branches:
        key = (tuple(sorted((v, tuple(sorted(e.terms.items()))) for v, e in b.solved.items())),
               tuple(b.free))
        if key not in seen:
            seen.add(key)
            out.append(b)
    return out


# -- frozen pairs --------------------------------------------------------------

@dataclass
class PairVerdict:
    reductive: bool
    generates: Optional[bool] = None
    witness: Optional[tuple] = None   # (h element, m generator, bracket, h-part)

    def describe(self) -> str:
        if self.reductive:
            gen = "generates g" if self.generates else "does NOT generate g"
            return f"reductive; complement {gen}"
        h_elt, m_gen, br, h_part = self.witness
        return (f"not reductive: [{h_elt!r}, {m_gen!r}] = {br!r} "
                f"has h-component {h_part!r}")


def verify_pair(h: Subspace, m: Subspace) -> PairVerdict:
    alg = h.algebra
    if m.algebra is not alg:
        raise PreconditionError("subspaces of different algebras")
    if not is_subalgebra(h):
        raise PreconditionError("h is not a subalgebra")
    if not direct_sum(h, m):
        raise PreconditionError("h and m do not decompose the algebra")
    for he in h.basis_elements():
        for me in m.basis_elements():
            br = bracket(he, me)
            if not m.contains(br):
                m_part, h_part = decompose(br, h, m)
                h_vec = [Fraction(0)] * alg.dim
                for t, c in enumerate(h_part):
                    if c:
                        for k, hv in enumerate(h.basis_matrix[t]):
                            h_vec[k] += c * hv
                witness = (he, me, br, Element(alg, tuple(h_vec)))
                return PairVerdict(False, witness=witness)
    generates = lie_closure(m).dim == alg.dim
    return PairVerdict(True, generates=generates)
