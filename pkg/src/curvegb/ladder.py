"""Structured reduction of monomials to window normal form.

These routines reduce ``x_0^e0 ... x_p^ep x_n^d`` (with some ``e_i > 0``,
``1 <= i <= p``) to ``x_0^h x_s x_p^l x_n^d`` with ``(l*p + s, d)`` in the
grid window, following fixed recipes instead of generic division.  Every
step is a genuine lead -> tail rewrite by a named member of the Phi basis,
so the result can be checked against :func:`binalg.normal_form`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .binalg import BasisSet, reduce_monomial
from .closedform import FamilyLabel, Kind, Phi, Psi, Theta, Xi, assemble, build_family, labels
from .errors import (
    ContractViolation,
    IterationCapExceeded,
    PreconditionViolation,
    UnequalWeights,
    UnsupportedInput,
)
from .order import Monomial, divides
from .semigroup import CurveParameters, in_v_minus_w


@dataclass(frozen=True)
class LadderState:
    """``x_0^h x_s x_p^l x_n^d``; ``s == 0`` means no middle variable."""

    h: int
    s: int
    l: int
    d: int
    trace: tuple[str, ...] = ()


class _Run:
    """Mutable scratch state for one reduction: an exponent vector plus a trace."""

    def __init__(self, params: CurveParameters, vec, trace=()):
        self.params = params
        self.p = params.p
        self.n = params.p + 1
        self.weights = params.curve.weights
        self.vec = list(vec)
        self.trace = list(trace)
        self.weight = self._weight()
        self._table = _phi_table(params)

    def _weight(self) -> int:
        return sum(e * w for e, w in zip(self.vec, self.weights))

    def apply(self, label: FamilyLabel, times: int = 1):
        if times <= 0:
            return
        f = self._table.get(label)
        if f is None:
            raise ContractViolation(f"{label} is not a member of Phi")
        h = self.vec[0]
        for _ in range(times):
            if not divides(f.lead, self.vec):
                raise ContractViolation(f"lead of {label} does not divide {self.vec}")
            self.vec = [x - y + z for x, y, z in zip(self.vec, f.lead, f.tail)]
        if self.vec[0] < h:
            raise ContractViolation(f"{label} lowered the x_0 exponent")
        self.trace.extend([str(label)] * times)
        if self._weight() != self.weight:
            raise ContractViolation("weight changed during reduction")

    def apply_xi(self, i: int, j: int, times: int = 1):
        """``xi`` on an unordered pair; a no-op when either index is not a middle variable."""
        i, j = sorted((i, j))
        if 1 <= i and j <= self.p - 1:
            self.apply(Xi(i, j), times)

    def merge(self):
        """Combine middle variables pairwise until at most one of ``x_1..x_{p-1}`` remains.

        Always merges the two highest indices present.
        """
        p = self.p
        while True:
            mids = [i for i in range(p - 1, 0, -1) for _ in range(self.vec[i])][:2]
            if len(mids) < 2:
                return
            self.apply(Xi(mids[1], mids[0]))

    def state(self) -> LadderState:
        p, n, vec = self.p, self.n, self.vec
        mids = [i for i in range(1, p) if vec[i]]
        if len(mids) > 1 or (mids and vec[mids[0]] > 1):
            raise ContractViolation(f"state read before merging: {vec}")
        if mids:
            s, l = mids[0], vec[p]
        elif vec[p]:
            s, l = p, vec[p] - 1
        else:
            s, l = 0, 0
        return LadderState(vec[0], s, l, vec[n], tuple(self.trace))


@lru_cache(maxsize=64)
def _phi_table(params: CurveParameters) -> dict:
    return {lab: build_family(params, lab) for lab in labels(params, Kind.PHI)}


def _vector(params: CurveParameters, state: LadderState) -> list[int]:
    p = params.p
    vec = [0] * (p + 2)
    vec[0] = state.h
    if state.s:
        vec[state.s] += 1
    vec[p] += state.l
    vec[p + 1] = state.d
    return vec


def _cap(params: CurveParameters) -> int:
    return 10 * (params.u + params.v + params.q + 1)


def state_monomial(params: CurveParameters, state: LadderState) -> Monomial:
    return tuple(_vector(params, state))


def grid_point(params: CurveParameters, state: LadderState) -> tuple[int, int]:
    return state.l * params.p + state.s, state.d


def _check_alpha(params: CurveParameters, alpha) -> list[int]:
    p = params.p
    if len(alpha) != p + 2:
        raise UnsupportedInput(f"monomial needs {p + 2} exponents")
    if any(e < 0 for e in alpha):
        raise UnsupportedInput("negative exponent")
    if not any(alpha[1:p + 1]):
        raise UnsupportedInput("monomial has no x_1..x_p factor")
    return list(alpha)


def _lemma1(run: _Run):
    params = run.params
    p, n = run.p, run.n
    q, v, w = params.q, params.v, params.w
    run.apply(Theta, run.vec[n] // v)
    run.merge()
    st = run.state()
    cap = _cap(params)
    rounds = 0
    while st.l > q:
        rounds += 1
        if rounds > cap:
            raise IterationCapExceeded("x_p reduction loop did not terminate")
        a, _ = divmod(st.l, q + 1)
        run.apply(Phi(p - params.r), a)
        c, _ = divmod(a * w + st.d, v)
        run.apply(Theta, c)
        run.apply_xi(params.r_z, p - params.r, c)
        run.merge()
        nxt = run.state()
        if nxt.l > st.l or nxt.h < st.h or (nxt.l == st.l and nxt.d >= st.d):
            raise ContractViolation(f"x_p reduction made no progress: {st} -> {nxt}")
        st = nxt
    return st


def reduce_lemma1(params: CurveParameters, alpha) -> LadderState:
    """Reduce to ``l <= q`` and ``d < v`` with ``s`` in ``[1, p]``."""
    run = _Run(params, _check_alpha(params, alpha))
    return _lemma1(run)


def _lemma2(run: _Run):
    params = run.params
    p = run.p
    qp, vw = params.q_prime, params.v - params.w
    st = run.state()
    cap = _cap(params)
    rounds = 0
    while st.l > qp and st.d >= vw:
        rounds += 1
        if rounds > cap:
            raise IterationCapExceeded("psi reduction loop did not terminate")
        k = min(st.d // vw, st.l // (qp + 1))
        run.apply(Psi(p - params.r_prime), k)
        run.merge()
        nxt = run.state()
        if nxt.d >= st.d or nxt.l > st.l or nxt.h < st.h:
            raise ContractViolation(f"psi reduction made no progress: {st} -> {nxt}")
        st = nxt
    return st


def reduce_lemma2(params: CurveParameters, state: LadderState) -> LadderState:
    """Reduce further until ``l <= q'`` or ``d < v - w``."""
    if params.w_empty:
        raise PreconditionViolation("needs a nonempty W")
    if not (state.l <= params.q and state.d < params.v and 1 <= state.s <= params.p):
        raise PreconditionViolation(f"input must satisfy l <= q, d < v, s in [1, p]: {state}")
    run = _Run(params, _vector(params, state), state.trace)
    return _lemma2(run)


def _reduce_xs(run: _Run):
    params = run.params
    rp, vw = params.r_prime, params.v - params.w
    st = run.state()
    if st.s < rp or st.d < vw:
        return st
    a = next(t for t in range(1, st.s + 2) if st.s - t * rp < rp)
    b = next(t for t in range(1, st.d + 2) if st.d - t * vw < vw)
    for i in range(1, min(a, b) + 1):
        run.apply(Psi(st.s - i * rp))
    return run.state()


def reduce_xs(params: CurveParameters, state: LadderState) -> LadderState:
    """With ``q' == 0``, move ``x_0^h x_s x_n^d`` into the window by ``psi`` steps."""
    if params.w_empty or params.q_prime != 0:
        raise PreconditionViolation("needs a nonempty W and q' == 0")
    if not (state.l == 0 and state.d < params.v and 1 <= state.s <= params.p):
        raise PreconditionViolation(f"input must have l == 0, d < v, s in [1, p]: {state}")
    run = _Run(params, _vector(params, state), state.trace)
    return _reduce_xs(run)


def normal_form_ladder(params: CurveParameters, alpha) -> LadderState:
    """Full reduction to a state whose grid point lies in the window."""
    run = _Run(params, _check_alpha(params, alpha))
    p = params.p
    u, v, w, z, r = params.u, params.v, params.w, params.z, params.r
    st = _lemma1(run)

    if params.w_empty:
        if st.l * p + st.s >= u:
            run.apply(Phi(st.s - r))
            if run.vec[p + 1] >= v:
                run.apply(Theta)
        return _finish(run)

    st = _lemma2(run)
    t = st.l * p + st.s
    if t < u - z:
        pass                                             # left of the W columns
    elif st.d < v - w and t < u:
        pass                                             # below the W rows
    elif st.d < v - w:                                   # right of the window: one phi step
        run.apply(Phi(st.s - r))
        st = run.state()
        if not in_v_minus_w(params, st.l * p + st.s, st.d):
            if params.q_prime != 0:
                raise ContractViolation("phi step left the window with q' > 0")
            _reduce_xs(run)
    else:                                                # W rows, at or past the W columns
        if st.l > params.q_prime:
            raise ContractViolation("W block reached with l > q'")
        if params.q_z == 0 and params.eps == 0:
            if st.s >= r:
                run.apply(Phi(st.s - r))
                run.apply(Theta)
                run.merge()
            else:
                run.apply(Psi(st.s - params.r_prime))
        elif params.q_prime == 0:
            _reduce_xs(run)
        else:
            run.apply(Psi(st.s - params.r_prime))
    return _finish(run)


def _finish(run: _Run) -> LadderState:
    st = run.state()
    if not in_v_minus_w(run.params, st.l * run.p + st.s, st.d):
        raise ContractViolation(f"ladder output {st} is outside the window")
    return st


def phi_basis(params: CurveParameters) -> BasisSet:
    return assemble(params, Kind.PHI).basis


def check_second_main(params: CurveParameters, alpha, beta,
                      basis: Optional[BasisSet] = None) -> bool:
    """Whether ``alpha - beta`` reduces to zero modulo Phi."""
    _check_alpha(params, alpha)
    _check_alpha(params, beta)
    weights = params.curve.weights
    wa = sum(e * w for e, w in zip(alpha, weights))
    wb = sum(e * w for e, w in zip(beta, weights))
    if wa != wb:
        raise UnequalWeights(f"weights {wa} and {wb} differ")
    basis = basis or phi_basis(params)
    return reduce_monomial(tuple(alpha), basis.elements) == reduce_monomial(tuple(beta), basis.elements)
