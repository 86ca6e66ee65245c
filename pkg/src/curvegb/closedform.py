"""Explicit generator families of the curve ideal and the sets built from them.

Families, with ``p = n - 1``::

    xi(i, j) = x_i x_j - x_0 x_{i+j}          (i + j <= p)
             = x_i x_j - x_{i+j-p} x_p        (i + j >  p)
    phi(i)   = x_{r+i} x_p^q - x_0^{lam-1} x_i x_n^w
    psi(j)   = x_{r'+j} x_p^{q'} x_n^{v-w} - x_0^{nu-1} x_j
    theta    = x_n^v - x_0^mu x_{r_z} x_p^{q_z}

Products are merged into exponent vectors, so ``x_0^{lam-1} x_0`` is
``x_0^lam`` and ``x_p x_p^{-1}`` (the ``z = 0`` convention) is ``1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

from .binalg import BasisSet, Binomial, orient
from .errors import ContractViolation, IndexOutOfRange
from .order import Monomial, OrderSpec, ascending
from .semigroup import CurveParameters


@dataclass(frozen=True)
class FamilyLabel:
    family: str  # "xi", "phi", "psi" or "theta"
    i: Optional[int] = None
    j: Optional[int] = None

    def __str__(self) -> str:
        if self.family == "theta":
            return "theta"
        if self.family == "xi":
            return f"xi_{self.i},{self.j}"
        return f"{self.family}_{self.i}"


def Xi(i: int, j: int) -> FamilyLabel:
    return FamilyLabel("xi", i, j)


def Phi(i: int) -> FamilyLabel:
    return FamilyLabel("phi", i)


def Psi(j: int) -> FamilyLabel:
    return FamilyLabel("psi", j)


Theta = FamilyLabel("theta")


class Kind(str, Enum):
    OMEGA = "omega"
    PATIL_SINGH = "patil-singh"
    PHI = "phi"


def _mono(nvars: int, *factors: tuple[int, int]) -> Monomial:
    exps = [0] * nvars
    for index, e in factors:
        exps[index] += e
    if any(e < 0 for e in exps):
        raise ContractViolation(f"negative exponent in {exps}")
    return tuple(exps)


def family_terms(params: CurveParameters, label: FamilyLabel) -> tuple[Monomial, Monomial]:
    """The two monomials of a family member, in display order (first minus second)."""
    p = params.p
    n = p + 1
    k = n + 1
    f = label.family
    if f == "xi":
        i, j = label.i, label.j
        if not (1 <= i <= j <= p - 1):
            raise IndexOutOfRange(f"xi_{i},{j} needs 1 <= i <= j <= {p - 1}")
        left = _mono(k, (i, 1), (j, 1))
        if i + j <= p:
            right = _mono(k, (0, 1), (i + j, 1))
        else:
            right = _mono(k, (i + j - p, 1), (p, 1))
    elif f == "phi":
        i = label.i
        if not (0 <= i <= p - params.r):
            raise IndexOutOfRange(f"phi_{i} needs 0 <= i <= {p - params.r}")
        left = _mono(k, (params.r + i, 1), (p, params.q))
        right = _mono(k, (0, params.lam - 1), (i, 1), (n, params.w))
    elif f == "psi":
        j = label.i
        if not (0 <= j <= p - params.r_prime):
            raise IndexOutOfRange(f"psi_{j} needs 0 <= j <= {p - params.r_prime}")
        left = _mono(k, (params.r_prime + j, 1), (p, params.q_prime), (n, params.v - params.w))
        right = _mono(k, (0, params.nu - 1), (j, 1))
    elif f == "theta":
        left = _mono(k, (n, params.v))
        right = _mono(k, (0, params.mu), (params.r_z, 1), (p, params.q_z))
    else:
        raise IndexOutOfRange(f"unknown family {f!r}")
    weights = params.curve.weights
    if sum(e * w for e, w in zip(left, weights)) != sum(e * w for e, w in zip(right, weights)):
        raise ContractViolation(f"{label} is not weight-homogeneous on {params.curve}")
    if left == right:
        raise ContractViolation(f"{label} is zero on {params.curve}")
    return left, right


def build_family(params: CurveParameters, label: FamilyLabel,
                 spec: Optional[OrderSpec] = None) -> Binomial:
    spec = spec or ascending(params.curve.weights)
    return orient(*family_terms(params, label), spec)


def labels(params: CurveParameters, kind: Kind) -> Iterator[FamilyLabel]:
    """Members of a named set, in the order theta, xi, phi, psi."""
    p = params.p
    kind = Kind(kind)
    yield Theta
    for i in range(1, p):
        for j in range(i, p):
            yield Xi(i, j)
    if kind is Kind.OMEGA:
        phis, psis = params.I_range(), params.J_range()
    elif kind is Kind.PATIL_SINGH:
        phis, psis = range(p - params.r + 1), range(p - params.r_prime + 1)
    else:
        phis, psis = range(p - params.r + 1), params.J_range()
    for i in phis:
        yield Phi(i)
    for j in psis:
        yield Psi(j)


@dataclass(frozen=True)
class NamedBasis:
    kind: Kind
    basis: BasisSet
    params: CurveParameters

    @property
    def family_labels(self) -> tuple[str, ...]:
        return self.basis.labels


def assemble(params: CurveParameters, kind: Kind, spec: Optional[OrderSpec] = None) -> NamedBasis:
    spec = spec or ascending(params.curve.weights)
    labs = list(labels(params, kind))
    pairs = [family_terms(params, lab) for lab in labs]
    basis = BasisSet.from_pairs(pairs, spec, [str(lab) for lab in labs])
    return NamedBasis(Kind(kind), basis, params)
