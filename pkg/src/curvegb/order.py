"""Weighted grevlex orders on exponent vectors.

A monomial is a plain tuple of nonnegative exponents, index ``i`` holding
the exponent of ``x_i``.  Under an elimination spec the tuple carries one
extra trailing entry for the auxiliary variable ``t`` (weight 1).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from operator import le
from typing import Sequence

from .errors import DimensionMismatch, ParseError

Monomial = tuple


class Direction(str, Enum):
    ASCENDING = "asc"    # x_0 < x_1 < ... < x_n
    DESCENDING = "desc"  # x_0 > x_1 > ... > x_n


@dataclass(frozen=True)
class OrderSpec:
    weights: tuple[int, ...]
    direction: Direction = Direction.ASCENDING
    elimination: bool = False

    def __post_init__(self):
        if not self.weights or any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")
        object.__setattr__(self, "direction", Direction(self.direction))

    @property
    def nvars(self) -> int:
        """Length of a monomial tuple under this spec."""
        return len(self.weights) + (1 if self.elimination else 0)

    def degree(self, m: Monomial) -> int:
        """Weighted degree, counting ``t`` with weight 1."""
        if len(m) != self.nvars:
            raise DimensionMismatch(f"monomial of length {len(m)}, expected {self.nvars}")
        d = sum(e * w for e, w in zip(m, self.weights))
        if self.elimination:
            d += m[-1]
        return d

    def key(self, m: Monomial) -> tuple:
        """Sort key: ``a > b`` in the order iff ``key(a) > key(b)``."""
        if len(m) != self.nvars:
            raise DimensionMismatch(f"monomial of length {len(m)}, expected {self.nvars}")
        k = len(self.weights)
        x = m[:k]
        deg = sum(e * w for e, w in zip(x, self.weights))
        if self.direction is Direction.ASCENDING:
            # first differing exponent from x_0 upward: smaller exponent wins
            tail = tuple(-e for e in x)
        else:
            tail = tuple(-e for e in reversed(x))
        if self.elimination:
            return (m[-1], deg) + tail
        return (deg,) + tail

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)

    def plain(self) -> "OrderSpec":
        return OrderSpec(self.weights, self.direction, False)


def ascending(weights: Sequence[int]) -> OrderSpec:
    return OrderSpec(tuple(weights), Direction.ASCENDING)


def descending(weights: Sequence[int]) -> OrderSpec:
    return OrderSpec(tuple(weights), Direction.DESCENDING)


def weighted_degree(m: Monomial, spec: OrderSpec) -> int:
    return spec.degree(m)


def compare(a: Monomial, b: Monomial, spec: OrderSpec) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    return spec.compare(a, b)


# monomial arithmetic

def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    """True when ``a`` divides ``b``."""
    return all(map(le, a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def one(nvars: int) -> Monomial:
    return (0,) * nvars


def var(i: int, nvars: int, e: int = 1) -> Monomial:
    m = [0] * nvars
    m[i] = e
    return tuple(m)


# text form: x0^2*x2^3, exponent 1 elided, "1" for the empty monomial

_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?\Z")


def render(m: Monomial, t_slot: bool = False) -> str:
    """Render a monomial; with ``t_slot`` the last entry is written as ``t``."""
    parts = []
    nx = len(m) - 1 if t_slot else len(m)
    for i, e in enumerate(m):
        if e:
            name = "t" if i >= nx else f"x{i}"
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def parse(text: str, nvars: int) -> Monomial:
    text = text.strip()
    exps = [0] * nvars
    if text == "1":
        return tuple(exps)
    if not text:
        raise ParseError("empty monomial")
    for factor in text.split("*"):
        match = _FACTOR.match(factor.strip())
        if not match:
            raise ParseError(f"bad factor {factor!r} in {text!r}")
        i = int(match.group(1))
        if i >= nvars:
            raise ParseError(f"variable x{i} out of range for {nvars} variables")
        exps[i] += int(match.group(2) or 1)
    return tuple(exps)
