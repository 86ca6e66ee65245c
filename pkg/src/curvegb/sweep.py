"""Instance families and the per-instance verification battery."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .binalg import (
    buchberger_close,
    is_groebner,
    minimality_violation,
    reduce_monomial,
    reduced_basis,
)
from .closedform import Kind, assemble, build_family, labels
from .errors import CurveGBError, InputError
from .ladder import grid_point, normal_form_ladder, state_monomial
from .order import Monomial, ascending, descending
from .semigroup import CurveInput, CurveParameters, compute_parameters, representation_counts, \
    validate_input
from .toric import defining_ideal_gb, ideal_contains


def almost_arithmetic_instances(max_m0: int, max_p: int, max_mn: int, max_step: int = 1,
                                min_m0: int = 2) -> Iterator[CurveInput]:
    """Every valid input with ``m_0 <= max_m0``, ``p <= max_p``, ``m_n <= max_mn``
    and common difference at most ``max_step``, ordered by
    ``(m_0, p, step, m_n)``."""
    for m0 in range(min_m0, max_m0 + 1):
        for p in range(1, max_p + 1):
            for step in range(1, max_step + 1):
                m = tuple(m0 + i * step for i in range(p + 1))
                for mn in range(1, max_mn + 1):
                    try:
                        yield validate_input(m, mn)
                    except InputError:
                        continue


def odd_shift_instances(lo: int, hi: int) -> Iterator[CurveInput]:
    """Inputs ``(m0, m0 + 1; m0 - 1)`` for odd ``m0 >= 5`` in ``[lo, hi]``."""
    for m0 in range(max(lo, 5), hi + 1):
        if m0 % 2:
            yield validate_input((m0, m0 + 1), m0 - 1)


# ---------------------------------------------------------------------------
# monomial generators

def mid_support(m: Monomial) -> int:
    return sum(m[1:-1])


def random_monomials(curve: CurveInput, count: int, max_exp: int,
                     rng: random.Random) -> list[Monomial]:
    """Uniform exponent vectors in ``[0, max_exp]`` with a nonzero middle part."""
    out = []
    k = curve.n + 1
    while len(out) < count:
        m = tuple(rng.randint(0, max_exp) for _ in range(k))
        if mid_support(m):
            out.append(m)
    return out


class WeightCounter:
    """Counts of monomials by weighted degree, for enumeration and uniform sampling."""

    def __init__(self, weights, max_weight: int):
        self.weights = tuple(weights)
        self.max_weight = max_weight
        k = len(self.weights)
        # table[i][W]: number of monomials in x_i..x_{k-1} of weight W
        table = [[0] * (max_weight + 1) for _ in range(k + 1)]
        table[k][0] = 1
        for i in range(k - 1, -1, -1):
            w = self.weights[i]
            row, nxt = table[i], table[i + 1]
            for W in range(max_weight + 1):
                row[W] = nxt[W] + (row[W - w] if W >= w else 0)
        self.table = table

    def count(self, W: int) -> int:
        return self.table[0][W]

    def enumerate(self, W: int, i: int = 0) -> Iterator[tuple[int, ...]]:
        if i == len(self.weights):
            if W == 0:
                yield ()
            return
        w = self.weights[i]
        for e in range(W // w + 1):
            if self.table[i + 1][W - e * w]:
                for rest in self.enumerate(W - e * w, i + 1):
                    yield (e,) + rest

    def sample(self, W: int, rng: random.Random) -> tuple[int, ...]:
        out = []
        for i, w in enumerate(self.weights):
            total = self.table[i][W]
            pick = rng.randrange(total)
            e = 0
            while True:
                c = self.table[i + 1][W - e * w]
                if pick < c:
                    break
                pick -= c
                e += 1
            out.append(e)
            W -= e * w
        return tuple(out)


def equal_weight_pairs(curve: CurveInput, count: int, rng: random.Random,
                       max_weight: Optional[int] = None) -> list[tuple[Monomial, Monomial]]:
    """Distinct equal-weight monomial pairs, both with a nonzero middle part.

    Half come from exhaustive enumeration of the lowest weight classes,
    half from uniform sampling of classes up to ``max_weight``.
    """
    weights = curve.weights
    max_weight = max_weight or 6 * max(weights) + 2 * curve.gamma.max_apery
    wc = WeightCounter(weights, max_weight)
    pairs: list[tuple[Monomial, Monomial]] = []
    half = count // 2
    for W in range(1, max_weight + 1):
        if len(pairs) >= half:
            break
        if wc.count(W) < 2:
            continue
        mons = [m for m in wc.enumerate(W) if mid_support(m)]
        pairs.extend(zip(mons, mons[1:]))
    pairs = pairs[:half]
    tries = 0
    while len(pairs) < count:
        tries += 1
        if tries > 100 * count:
            break
        W = rng.randint(1, max_weight)
        if wc.count(W) < 3:
            continue
        a, b = wc.sample(W, rng), wc.sample(W, rng)
        if a != b and mid_support(a) and mid_support(b):
            pairs.append((a, b))
    return pairs


# ---------------------------------------------------------------------------
# per-instance verification

def expected_leads(params: CurveParameters, label, direction: str) -> Optional[Monomial]:
    """Lead monomial predicted for a family member, or ``None`` when no prediction applies."""
    p, n = params.p, params.p + 1
    k = n + 1

    def mono(*factors):
        e = [0] * k
        for i, x in factors:
            e[i] += x
        return tuple(e)

    f = label.family
    if direction == "asc":
        if f == "xi":
            return mono((label.i, 1), (label.j, 1))
        if f == "phi":
            return mono((params.r + label.i, 1), (p, params.q))
        if f == "psi":
            return mono((params.r_prime + label.i, 1), (p, params.q_prime), (n, params.v - params.w))
        return mono((n, params.v))
    if f == "xi":
        return mono((label.i, 1), (label.j, 1))
    if f == "phi":
        return mono((label.i + params.r, 1), (p, params.q)) if params.w > 0 else None
    if f == "psi":
        return mono((0, params.lam + params.mu - params.eps), (label.i, 1))
    return mono((0, params.mu), (params.r_z, 1), (p, params.q_z))


def check_leads(params: CurveParameters) -> list[str]:
    """Mismatches between the order's leads and the predicted ones, for all family members."""
    bad = []
    weights = params.curve.weights
    for direction, spec in (("asc", ascending(weights)), ("desc", descending(weights))):
        for lab in labels(params, Kind.PATIL_SINGH):
            want = expected_leads(params, lab, direction)
            if want is None:
                continue
            got = build_family(params, lab, spec).lead
            if got != want:
                bad.append(f"{direction} {lab}: lead {got}, expected {want}")
    return bad


def check_min_prop(params: CurveParameters) -> list[str]:
    """The two descriptions of ``J`` agree, and ``z <= p`` iff ``q_z == 0`` for ``z > 0``."""
    bad = []
    p, z = params.p, params.z
    if z > 0:
        if (z <= p) != (params.q_z == 0):
            bad.append("z <= p does not match q_z == 0")
        lhs = min(z - 1, p - params.r_prime)
        rhs_is_p_minus_r = params.r <= params.r_z or z > p
        if (lhs == p - params.r_prime) != rhs_is_p_minus_r and (z - 1) != (p - params.r_prime):
            bad.append("min{z-1, p-r'} case split fails")
    if not params.w_empty:
        original = (0, min(z - 1, p - params.r_prime))
        if list(range(original[0], original[1] + 1)) != list(params.J_range()):
            bad.append(f"J {params.J} differs from [0, min(z-1, p-r')]")
    return bad


@dataclass
class InstanceReport:
    curve: CurveInput
    parameters: dict
    checks: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, name: str, passed: bool, detail: str = ""):
        self.checks[name] = bool(passed) and self.checks.get(name, True)
        if not passed:
            self.failures.append(f"{name}: {detail}" if detail else name)

    def as_dict(self) -> dict:
        return {
            "input": {"arith": list(self.curve.m), "mn": self.curve.mn},
            "parameters": self.parameters,
            "checks": self.checks,
            "failures": self.failures,
            "counts": self.counts,
        }


def verify_instance(curve: CurveInput, ladder_samples: int = 500, pair_samples: int = 200,
                    max_exp: int = 6, seed: int = 0, max_size: Optional[int] = None) -> InstanceReport:
    """Run the whole battery on one input.  Never raises for check failures."""
    rng = random.Random(f"{seed}:{curve}")
    clock = time.perf_counter
    params = compute_parameters(curve)
    report = InstanceReport(curve, params.as_dict())
    weights = curve.weights

    t0 = clock()
    oracle = defining_ideal_gb(curve, max_size=max_size)
    phi = assemble(params, Kind.PHI).basis
    omega = assemble(params, Kind.OMEGA).basis
    ps = assemble(params, Kind.PATIL_SINGH).basis
    report.record("phi_groebner", is_groebner(phi))
    report.record("phi_minimal", minimality_violation(phi, check=False) is None)
    report.record("phi_reduced_equals_oracle",
                  reduced_basis(phi, check=False).elements == oracle.elements)
    report.record("omega_closure_equals_oracle",
                  reduced_basis(buchberger_close(omega, max_size), check=False).elements == oracle.elements)
    report.record("patil_singh_groebner_asc", is_groebner(ps))
    report.record("families_in_ideal", all(ideal_contains(oracle, f) for f in ps))
    report.timings["bases_ms"] = 1000 * (clock() - t0)

    # Known counterexample conditions.
    if params.r_prime >= params.r and params.mu == 0 and not params.w_empty:
        report.record("omega_not_groebner_when_predicted", not is_groebner(omega))
    if params.r < params.r_z < params.p and params.lam > 1 and params.w > 0:
        ps_desc = assemble(params, Kind.PATIL_SINGH, descending(weights)).basis
        report.record("patil_singh_desc_not_groebner_when_predicted", not is_groebner(ps_desc))

    t0 = clock()
    bad = check_leads(params)
    report.record("leading_monomials", not bad, "; ".join(bad[:3]))
    bad = check_min_prop(params)
    report.record("j_description", not bad, "; ".join(bad))
    report.timings["leads_ms"] = 1000 * (clock() - t0)

    t0 = clock()
    upto = curve.gamma.max_apery + curve.m[0]
    counts = representation_counts(params, upto)
    wrong = [g for g, c in counts.items() if c != (1 if g in curve.gamma else 0)]
    report.counts["representations"] = len(counts)
    report.record("unique_representation", not wrong, f"gammas {wrong[:5]}")
    report.timings["representation_ms"] = 1000 * (clock() - t0)

    t0 = clock()
    wrong = []
    for alpha in random_monomials(curve, ladder_samples, max_exp, rng):
        try:
            st = normal_form_ladder(params, alpha)
        except CurveGBError as exc:
            wrong.append(f"{alpha}: {type(exc).__name__} {exc}")
            continue
        mono = state_monomial(params, st)
        weight = sum(e * w for e, w in zip(mono, weights))
        if weight != sum(e * w for e, w in zip(alpha, weights)):
            wrong.append(f"{alpha}: weight changed")
        elif not params.in_v_minus_w(*grid_point(params, st)):
            wrong.append(f"{alpha}: outside window")
        elif mono != reduce_monomial(alpha, phi.elements):
            wrong.append(f"{alpha}: ladder {mono} differs from generic normal form")
    report.counts["ladder_samples"] = ladder_samples
    report.record("ladder_agrees", not wrong, "; ".join(wrong[:3]))
    report.timings["ladder_ms"] = 1000 * (clock() - t0)

    t0 = clock()
    pairs = equal_weight_pairs(curve, pair_samples, rng)
    wrong = [(a, b) for a, b in pairs
             if reduce_monomial(a, phi.elements) != reduce_monomial(b, phi.elements)]
    report.counts["pairs"] = len(pairs)
    report.record("second_main", not wrong and len(pairs) >= pair_samples,
                  f"{len(wrong)} failing of {len(pairs)}")
    report.timings["pairs_ms"] = 1000 * (clock() - t0)
    return report


def odd_shift_report(curve: CurveInput) -> InstanceReport:
    """Parameter closed forms plus the Omega / Phi verdicts for ``(m0, m0+1; m0-1)``."""
    params = compute_parameters(curve)
    report = InstanceReport(curve, params.as_dict())
    m0 = curve.m[0]
    want = {"upsilon": (m0 + 1) // 2, "u": (m0 + 1) // 2, "lambda": 2, "mu": 0,
            "w": (m0 - 1) // 2, "z": (m0 - 1) // 2}
    got = {k: report.parameters[k] for k in want}
    report.record("closed_form_parameters", got == want, f"{got} != {want}")
    omega = assemble(params, Kind.OMEGA).basis
    phi = assemble(params, Kind.PHI).basis
    report.record("omega_not_groebner", not is_groebner(omega))
    report.record("phi_groebner", is_groebner(phi))
    report.record("phi_minimal", minimality_violation(phi, check=False) is None)
    oracle = defining_ideal_gb(curve)
    report.record("phi_reduced_equals_oracle",
                  reduced_basis(phi, check=False).elements == oracle.elements)
    return report
