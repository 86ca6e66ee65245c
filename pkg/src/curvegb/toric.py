"""Defining ideal of a monomial curve by eliminating ``t``.

The ideal is computed from scratch as ``<x_i - t^{m_i}> ∩ K[x]`` using a
block order with ``t`` above every ``x`` monomial.  It serves as the
independent reference that the closed-form bases are compared against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .binalg import BasisSet, Binomial, buchberger_close, normal_form, reduced_basis
from .order import Direction, OrderSpec, ascending
from .semigroup import CurveInput


@dataclass(frozen=True)
class EliminationProblem:
    curve: CurveInput
    generators: BasisSet

    @property
    def spec(self) -> OrderSpec:
        return self.generators.spec


def elimination_problem(curve: CurveInput) -> EliminationProblem:
    weights = curve.weights
    spec = OrderSpec(weights, Direction.ASCENDING, elimination=True)
    k = len(weights)
    pairs = []
    for i, m in enumerate(weights):
        x = [0] * (k + 1)
        x[i] = 1
        t = [0] * (k + 1)
        t[k] = m
        pairs.append((tuple(x), tuple(t)))
    return EliminationProblem(curve, BasisSet.from_pairs(pairs, spec))


def defining_ideal_gb(curve: CurveInput, max_size: Optional[int] = None) -> BasisSet:
    """Reduced Groebner basis of the curve's ideal, ascending weighted grevlex."""
    problem = elimination_problem(curve)
    closed = buchberger_close(problem.generators, max_size=max_size)
    spec = ascending(curve.weights)
    kept = [Binomial(f.lead[:-1], f.tail[:-1]) for f in closed if not f.lead[-1] and not f.tail[-1]]
    return reduced_basis(BasisSet.from_pairs(kept, spec), check=False)


def ideal_contains(basis: BasisSet, f: Binomial) -> bool:
    """Membership test; ``basis`` must be a Groebner basis of the ideal."""
    return normal_form(f, basis) is None


def in_kernel(f: Binomial, weights) -> bool:
    """Whether ``lead - tail`` maps to zero under ``x_i -> t^{m_i}``."""
    deg = lambda m: sum(e * w for e, w in zip(m, weights))
    return deg(f.lead) == deg(f.tail)
