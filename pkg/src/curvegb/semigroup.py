"""Numerical semigroup arithmetic for almost arithmetic sequences.

The generators are ``m_0 < m_1 < ... < m_p`` (an arithmetic progression)
plus one free generator ``m_n`` with ``n = p + 1``.  Everything here is
exact integer arithmetic; membership is answered from Apery tables.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd
from typing import Optional, Sequence

from .errors import (
    ContractViolation,
    GcdNotOne,
    InputError,
    NonIncreasing,
    NotArithmetic,
    NotInSemigroup,
    NotMinimallyGenerated,
    TooShort,
    UniquenessViolation,
)


@dataclass(frozen=True)
class SemigroupTable:
    """Apery table of a semigroup with respect to ``modulus``.

    ``apery[r]`` is the least semigroup element congruent to ``r``, or
    ``None`` when the residue class is never reached (gcd > 1).
    """

    modulus: int
    apery: tuple[Optional[int], ...]

    def __contains__(self, gamma: int) -> bool:
        if gamma < 0:
            return False
        least = self.apery[gamma % self.modulus]
        return least is not None and gamma >= least

    @property
    def complete(self) -> bool:
        return all(a is not None for a in self.apery)

    @property
    def max_apery(self) -> int:
        return max(a for a in self.apery if a is not None)


def apery_table(generators: Sequence[int], partial: bool = False) -> SemigroupTable:
    """Shortest paths over residues modulo the first generator.

    Each generator ``g`` contributes the edge ``r -> (r + g) mod m0`` of
    cost ``g``.  Unreachable residues raise :class:`GcdNotOne` unless
    ``partial`` is set, in which case they are stored as ``None``.
    """
    if not generators or any(g <= 0 for g in generators):
        raise InputError("generators must be a nonempty sequence of positive integers")
    m0 = generators[0]
    steps = sorted({g for g in generators if g % m0})
    dist: list[Optional[int]] = [None] * m0
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        cost, r = heapq.heappop(heap)
        if cost != dist[r]:
            continue
        for g in steps:
            nxt = (r + g) % m0
            c = cost + g
            if dist[nxt] is None or c < dist[nxt]:
                dist[nxt] = c
                heapq.heappush(heap, (c, nxt))
    if not partial and any(d is None for d in dist):
        raise GcdNotOne(f"generators {tuple(generators)} do not have gcd 1")
    return SemigroupTable(m0, tuple(dist))


@dataclass(frozen=True)
class CurveInput:
    """A validated almost arithmetic sequence (see :func:`validate_input`)."""

    m: tuple[int, ...]
    mn: int

    @property
    def p(self) -> int:
        return len(self.m) - 1

    @property
    def n(self) -> int:
        return self.p + 1

    @property
    def step(self) -> int:
        return self.m[1] - self.m[0]

    @property
    def weights(self) -> tuple[int, ...]:
        """Weights of ``x_0, ..., x_n``."""
        return self.m + (self.mn,)

    @cached_property
    def gamma(self) -> SemigroupTable:
        return apery_table(self.weights)

    @cached_property
    def gamma_prime(self) -> SemigroupTable:
        return apery_table(self.m, partial=True)

    def __str__(self) -> str:
        return f"({','.join(map(str, self.m))};{self.mn})"


def validate_input(arithmetic_part: Sequence[int], mn: int) -> CurveInput:
    """Check the standing hypotheses and build a :class:`CurveInput`."""
    m = tuple(int(v) for v in arithmetic_part)
    mn = int(mn)
    if not m or any(v <= 0 for v in m) or mn <= 0:
        raise InputError("all generators must be positive and the arithmetic part nonempty")
    if len(m) < 2:
        raise TooShort("the arithmetic part needs at least two terms (p >= 1)")
    if any(b <= a for a, b in zip(m, m[1:])):
        raise NonIncreasing(f"arithmetic part {m} is not strictly increasing")
    d = m[1] - m[0]
    if any(b - a != d for a, b in zip(m, m[1:])):
        raise NotArithmetic(f"arithmetic part {m} has no constant difference")
    gens = m + (mn,)
    if reduce(gcd, gens) != 1:
        raise GcdNotOne(f"gcd{gens} != 1")
    for k, g in enumerate(gens):
        others = gens[:k] + gens[k + 1:]
        # Reorder so the modulus is the smallest remaining generator.
        others = tuple(sorted(others))
        if g in apery_table(others, partial=True):
            raise NotMinimallyGenerated(g)
    return CurveInput(m, mn)


@dataclass(frozen=True)
class DegreeSplit:
    t: int
    q: int
    r: int
    g: int


def degree_split(curve: CurveInput, t: int) -> DegreeSplit:
    """Write ``t = q*p + r`` with ``r`` in ``[1, p]`` and ``g = q*m_p + m_r``."""
    if t < 0:
        raise InputError("t must be nonnegative")
    p = curve.p
    q = (t - 1) // p
    r = t - q * p
    return DegreeSplit(t, q, r, q * curve.m[p] + curve.m[r])


@dataclass(frozen=True)
class CurveParameters:
    """Semigroup constants of a curve.

    ``v`` is the least ``b >= 1`` with ``b*m_n`` in the arithmetic
    semigroup; ``u`` the least ``t`` with ``g_t - m_0`` in the full
    semigroup.  ``I`` and ``J`` are inclusive ranges stored as
    ``(lo, hi)`` and are empty when ``lo > hi``.
    """

    curve: CurveInput
    u: int
    v: int
    w: int
    z: int
    lam: int
    mu: int
    nu: int
    g_u: int
    g_z: int
    q: int
    r: int
    q_prime: int
    r_prime: int
    q_z: int
    r_z: int
    eps: int
    I: tuple[int, int]
    J: tuple[int, int]

    @property
    def p(self) -> int:
        return self.curve.p

    @property
    def w_empty(self) -> bool:
        return self.z == 0 or self.w == 0

    def I_range(self) -> range:
        return range(self.I[0], self.I[1] + 1)

    def J_range(self) -> range:
        return range(self.J[0], self.J[1] + 1)

    def in_v_minus_w(self, s: int, b: int) -> bool:
        return in_v_minus_w(self, s, b)

    def as_dict(self) -> dict:
        return {
            "u": self.u, "upsilon": self.v, "w": self.w, "z": self.z,
            "lambda": self.lam, "mu": self.mu, "nu": self.nu,
            "g_u": self.g_u, "g_z": self.g_z,
            "q": self.q, "r": self.r, "q_prime": self.q_prime, "r_prime": self.r_prime,
            "q_z": self.q_z, "r_z": self.r_z, "epsilon": self.eps,
            "W_empty": self.w_empty,
            "I": list(self.I_range()), "J": list(self.J_range()),
        }


def compute_parameters(curve: CurveInput) -> CurveParameters:
    """Solve for every semigroup constant and check the defining identities."""
    gamma, gamma_p = curve.gamma, curve.gamma_prime
    m0, mn, p = curve.m[0], curve.mn, curve.p

    u = 1
    while degree_split(curve, u).g - m0 not in gamma:
        u += 1
    v = 1
    while v * mn not in gamma_p:
        v += 1

    su = degree_split(curve, u)
    hits = [(w, (su.g - w * mn) // m0) for w in range(v)
            if su.g - w * mn >= m0 and (su.g - w * mn) % m0 == 0]
    if len(hits) != 1:
        raise UniquenessViolation(f"{len(hits)} solutions for (w, lambda) on {curve}")
    w, lam = hits[0]

    hits = []
    for z in range(u):
        rest = v * mn - degree_split(curve, z).g
        if rest >= 0 and rest % m0 == 0:
            hits.append((z, rest // m0))
    if len(hits) != 1:
        raise UniquenessViolation(f"{len(hits)} solutions for (z, mu) on {curve}")
    z, mu = hits[0]

    sz = degree_split(curve, z)
    eps = 0 if su.r > sz.r else 1
    q_prime = su.q - sz.q - eps
    r_prime = eps * p + su.r - sz.r
    suz = degree_split(curve, u - z)
    if (suz.q, suz.r) != (q_prime, r_prime):
        raise ContractViolation(f"split of u-z disagrees with q', r' on {curve}")

    nu = lam + mu + 1 if r_prime < su.r else lam + mu
    if suz.g + (v - w) * mn != nu * m0:
        raise ContractViolation(f"g_(u-z) + (v-w) m_n != nu m_0 on {curve}")
    if not (u > p and su.q > 0 and lam >= 1 and mu >= 0 and nu >= 2):
        raise ContractViolation(f"parameter bounds fail on {curve}")

    w_empty = z == 0 or w == 0
    if mu != 0 or w_empty:
        I = (0, p - su.r)
    else:
        I = (max(sz.r - su.r + 1, 0), p - su.r)
    if w_empty:
        J = (0, -1)
    elif sz.q > 0 or eps > 0:
        J = (0, p - r_prime)
    else:
        J = (0, sz.r - 1)

    return CurveParameters(
        curve=curve, u=u, v=v, w=w, z=z, lam=lam, mu=mu, nu=nu,
        g_u=su.g, g_z=sz.g, q=su.q, r=su.r, q_prime=q_prime, r_prime=r_prime,
        q_z=sz.q, r_z=sz.r, eps=eps, I=I, J=J,
    )


def in_v_minus_w(params: CurveParameters, s: int, b: int) -> bool:
    u, v, z, w = params.u, params.v, params.z, params.w
    if not (0 <= s <= u - 1 and 0 <= b <= v - 1):
        return False
    return not (u - z <= s and v - w <= b)


def window(params: CurveParameters):
    """Yield every ``(s, b)`` of the grid window, row by row."""
    for s in range(params.u):
        for b in range(params.v):
            if in_v_minus_w(params, s, b):
                yield s, b


def unique_representation(params: CurveParameters, gamma: int) -> tuple[int, int, int]:
    """Exhaustive search for ``gamma = a*m_0 + g_s + b*m_n``, ``(s, b)`` in the window."""
    if gamma < 0:
        raise InputError("gamma must be nonnegative")
    curve = params.curve
    m0, mn = curve.m[0], curve.mn
    hits = []
    for s, b in window(params):
        rest = gamma - degree_split(curve, s).g - b * mn
        if rest >= 0 and rest % m0 == 0:
            hits.append((rest // m0, s, b))
    if len(hits) == 1:
        return hits[0]
    if not hits and gamma not in curve.gamma:
        raise NotInSemigroup(f"{gamma} is not in the semigroup of {curve}")
    raise UniquenessViolation(f"{len(hits)} representations of {gamma} on {curve}")


def representation_counts(params: CurveParameters, upto: int) -> dict[int, int]:
    """Number of window representations of every ``gamma`` in ``[0, upto]``.

    Bulk version of :func:`unique_representation`: the window bases are
    bucketed by residue so each count is a bisect rather than a grid scan.
    """
    from bisect import bisect_right

    curve = params.curve
    m0, mn = curve.m[0], curve.mn
    buckets: dict[int, list[int]] = {}
    for s, b in window(params):
        base = degree_split(curve, s).g + b * mn
        buckets.setdefault(base % m0, []).append(base)
    for lst in buckets.values():
        lst.sort()
    return {g: bisect_right(buckets.get(g % m0, []), g) for g in range(upto + 1)}
