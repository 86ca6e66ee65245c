"""Binomial ideals with unit coefficients and a Buchberger engine.

A binomial ``lead - tail`` is stored as the pair of its monomials with the
lead greater under the ambient :class:`OrderSpec`.  S-polynomials and
reductions of such binomials are again binomials (or zero), so no
coefficient arithmetic is ever needed.
"""

from __future__ import annotations

import heapq
import json
import random
from operator import le
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .errors import ContractViolation, NotAGroebnerBasis, ParseError, ResourceLimit
from .order import Monomial, OrderSpec, coprime, divides, lcm, parse, render

DEFAULT_MAX_BASIS = 10_000


class Binomial(NamedTuple):
    lead: Monomial
    tail: Monomial

    def render(self, t_slot: bool = False) -> str:
        return f"{render(self.lead, t_slot)} - {render(self.tail, t_slot)}"


def orient(a: Monomial, b: Monomial, spec: OrderSpec) -> Optional[Binomial]:
    """The binomial ``±(a - b)`` with its lead first, or ``None`` when ``a == b``."""
    if a == b:
        return None
    return Binomial(a, b) if spec.key(a) > spec.key(b) else Binomial(b, a)


@dataclass(frozen=True)
class BasisSet:
    elements: tuple[Binomial, ...]
    spec: OrderSpec
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.labels is not None and len(self.labels) != len(self.elements):
            raise ValueError("one label per element")
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate basis elements")
        for f in self.elements:
            if self.spec.key(f.lead) <= self.spec.key(f.tail):
                raise ValueError(f"{f.render()} is not oriented")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Monomial, Monomial]], spec: OrderSpec,
                   labels: Optional[Sequence[str]] = None) -> "BasisSet":
        """Orient each pair and drop zero binomials and repeats (first label wins)."""
        elems, labs, seen = [], [], set()
        labels = list(labels) if labels is not None else None
        for k, (a, b) in enumerate(pairs):
            f = orient(a, b, spec)
            if f is None or f in seen:
                continue
            seen.add(f)
            elems.append(f)
            if labels is not None:
                labs.append(labels[k])
        return cls(tuple(elems), spec, tuple(labs) if labels is not None else None)

    def reoriented(self, spec: OrderSpec) -> "BasisSet":
        return BasisSet.from_pairs(self.elements, spec, self.labels)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def as_set(self) -> frozenset:
        return frozenset(self.elements)

    def label(self, k: int) -> str:
        return self.labels[k] if self.labels else f"g{k}"

    def leads(self) -> list[Monomial]:
        return [f.lead for f in self.elements]


# ---------------------------------------------------------------------------
# S-polynomials and reduction

def s_polynomial(f: Binomial, g: Binomial, spec: OrderSpec) -> Optional[Binomial]:
    """``(L/lead_f) f - (L/lead_g) g`` with ``L`` the lcm of the leads; ``None`` if zero."""
    m = lcm(f.lead, g.lead)
    a = tuple(x - y + z for x, y, z in zip(m, f.lead, f.tail))
    b = tuple(x - y + z for x, y, z in zip(m, g.lead, g.tail))
    return orient(a, b, spec)


def reduce_monomial(m: Monomial, elements: Sequence[Binomial],
                    rng: Optional[random.Random] = None) -> Monomial:
    """Rewrite ``m`` by lead -> tail steps until no lead divides it.

    With ``rng`` the reducer is chosen at random among the applicable
    ones; otherwise the first applicable element is used.
    """
    while True:
        if rng is None:
            for f in elements:
                if all(map(le, f.lead, m)):
                    break
            else:
                return m
        else:
            usable = [f for f in elements if divides(f.lead, m)]
            if not usable:
                return m
            f = rng.choice(usable)
        m = tuple(x - y + z for x, y, z in zip(m, f.lead, f.tail))


def normal_form(f: Union[Binomial, Monomial], basis: BasisSet,
                rng: Optional[random.Random] = None):
    """Normal form of a binomial (``None`` for zero) or of a monomial."""
    if isinstance(f, Binomial):
        a = reduce_monomial(f.lead, basis.elements, rng)
        b = reduce_monomial(f.tail, basis.elements, rng)
        return orient(a, b, basis.spec)
    return reduce_monomial(tuple(f), basis.elements, rng)


@dataclass(frozen=True)
class Witness:
    """A pair whose S-polynomial does not reduce to zero."""

    i: int
    j: int
    spoly: Binomial
    remainder: Binomial


def _pairs(n: int):
    for j in range(n):
        for i in range(j):
            yield i, j


def groebner_witnesses(basis: BasisSet, first_only: bool = False) -> list[Witness]:
    """Every failing pair, in the order ``(0,1), (0,2), (1,2), (0,3), ...``."""
    elems, spec = basis.elements, basis.spec
    out = []
    for i, j in _pairs(len(elems)):
        f, g = elems[i], elems[j]
        if coprime(f.lead, g.lead):
            continue
        s = s_polynomial(f, g, spec)
        if s is None:
            continue
        rem = normal_form(s, basis)
        if rem is not None:
            out.append(Witness(i, j, s, rem))
            if first_only:
                break
    return out


def groebner_witness(basis: BasisSet) -> Optional[Witness]:
    found = groebner_witnesses(basis, first_only=True)
    return found[0] if found else None


def is_groebner(basis: BasisSet) -> bool:
    return groebner_witness(basis) is None


def buchberger_close(basis: BasisSet, max_size: Optional[int] = None,
                     max_degree: Optional[int] = None) -> BasisSet:
    """Complete ``basis`` to a Groebner basis.

    Pairs are taken by increasing weighted degree of the lcm of their
    leads, ties by index.  Pairs with coprime leads are skipped.
    """
    max_size = DEFAULT_MAX_BASIS if max_size is None else max_size
    spec = basis.spec
    elems = list(basis.elements)
    labels = list(basis.labels) if basis.labels else None
    if len(elems) > max_size:
        raise ResourceLimit(f"basis size {len(elems)} exceeds cap {max_size}")
    present = set(elems)
    heap: list = []

    def push(i, j):
        f, g = elems[i], elems[j]
        if coprime(f.lead, g.lead):
            return
        heapq.heappush(heap, (spec.degree(lcm(f.lead, g.lead)), i, j))

    for i, j in _pairs(len(elems)):
        push(i, j)
    while heap:
        deg, i, j = heapq.heappop(heap)
        if max_degree is not None and deg > max_degree:
            raise ResourceLimit(f"pair degree {deg} exceeds cap {max_degree}")
        s = s_polynomial(elems[i], elems[j], spec)
        if s is None:
            continue
        a = reduce_monomial(s.lead, elems)
        b = reduce_monomial(s.tail, elems)
        h = orient(a, b, spec)
        if h is None or h in present:
            continue
        if len(elems) >= max_size:
            raise ResourceLimit(f"basis size exceeds cap {max_size}")
        elems.append(h)
        present.add(h)
        if labels is not None:
            labels.append(f"s{len(elems) - 1}")
        k = len(elems) - 1
        for i2 in range(k):
            push(i2, k)
    return BasisSet(tuple(elems), spec, tuple(labels) if labels else None)


def reduced_basis(basis: BasisSet, check: bool = True) -> BasisSet:
    """The reduced Groebner basis of the ideal of ``basis``.

    Drops every element whose lead is a multiple of another lead, then
    replaces each tail by its normal form modulo the survivors.  Output
    is sorted by descending lead, so equal ideals give equal tuples.
    """
    if check and not is_groebner(basis):
        raise NotAGroebnerBasis("reduced_basis needs a Groebner basis")
    spec = basis.spec
    elems = sorted(set(basis.elements), key=lambda f: (spec.key(f.lead), spec.key(f.tail)))
    keep: list[Binomial] = []
    for f in elems:
        # ascending lead order: a divisor of f.lead is already in keep
        if not any(divides(g.lead, f.lead) for g in keep):
            keep.append(f)
    out = []
    for k, f in enumerate(keep):
        others = keep[:k] + keep[k + 1:]
        tail = reduce_monomial(f.tail, others)
        if spec.key(tail) >= spec.key(f.lead):
            raise ContractViolation("tail reduction did not stay below the lead")
        out.append(Binomial(f.lead, tail))
    out.sort(key=lambda f: spec.key(f.lead), reverse=True)
    return BasisSet(tuple(out), spec)


@dataclass(frozen=True)
class Violation:
    """Element ``divisor``'s lead divides element ``multiple``'s lead."""

    divisor: int
    multiple: int


def minimality_violation(basis: BasisSet, check: bool = True) -> Optional[Violation]:
    if check and not is_groebner(basis):
        raise NotAGroebnerBasis("minimality is only defined for Groebner bases")
    leads = basis.leads()
    for i, a in enumerate(leads):
        for j, b in enumerate(leads):
            if i != j and divides(a, b):
                return Violation(i, j)
    return None


def is_minimal_gb(basis: BasisSet, check: bool = True) -> bool:
    return minimality_violation(basis, check) is None


# ---------------------------------------------------------------------------
# serialization

def sort_key(f: Binomial, spec: OrderSpec):
    return (spec.key(f.lead), spec.key(f.tail))


def to_lines(basis: BasisSet) -> list[str]:
    """Rendered ``lead - tail`` strings, sorted by descending lead."""
    t_slot = basis.spec.elimination
    elems = sorted(basis.elements, key=lambda f: sort_key(f, basis.spec), reverse=True)
    return [f.render(t_slot) for f in elems]


def to_json(basis: BasisSet) -> str:
    return json.dumps(to_lines(basis))


def parse_binomial(text: str, nvars: int) -> tuple[Monomial, Monomial]:
    left, sep, right = text.partition(" - ")
    if not sep:
        raise ParseError(f"expected 'lead - tail', got {text!r}")
    return parse(left, nvars), parse(right, nvars)


def from_lines(lines: Iterable[str], spec: OrderSpec) -> BasisSet:
    """Inverse of :func:`to_lines`; each pair is re-oriented under ``spec``."""
    pairs = [parse_binomial(s, spec.nvars) for s in lines if s.strip()]
    return BasisSet.from_pairs(pairs, spec)


def load_basis(text: str, spec: OrderSpec) -> BasisSet:
    """Read a JSON list of rendered binomials, or one binomial per line."""
    stripped = text.lstrip()
    if stripped.startswith("["):
        try:
            items = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON basis: {exc}") from None
        if not all(isinstance(s, str) for s in items):
            raise ParseError("JSON basis must be a list of strings")
        return from_lines(items, spec)
    return from_lines(text.splitlines(), spec)
