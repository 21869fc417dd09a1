"""Class polynomials and the symmetrizing trace.

Working modulo the span of all commutators [a, b] = ab - ba, every even
element of the algebra is congruent to a unique combination of the elements
T_{w_nu} over odd partitions nu, and odd elements contribute nothing to any
trace.  This module computes that combination — the class polynomial vector —
by the staircase reduction, and builds the trace functions f_nu and the
symmetrizing form gimel on top of it.

Internally the reduction works with terms written as T_sigma C_I (Clifford
part on the right), because its moves rotate a leading T_j or conjugate by a
single c_k, and both are cheap in that orientation.  Public elements store
C_I T_sigma instead, so inputs are converted once on entry; outputs need no
conversion since the surviving terms T_{w_nu} carry no Clifford part.

Conjugation invariance is free for ordinary commutators: for invertible u,
x - u^{-1} x u = [u, u^{-1} x], so every rotation and conjugation below
preserves the class vector.
"""

from __future__ import annotations

import json
import sys
import threading
from dataclasses import dataclass

from .combinatorics import (
    enumerate_partitions,
    left_descents,
    left_mul_s,
    perm_identity,
    right_mul_s,
    w_gamma,
    w_gamma_form,
)
from .hecke_clifford import AlgebraElement, _acc
from .scalars import HALF, ONE, Scalar, V_MINUS_1, ZERO, half, sc_int

sys.setrecursionlimit(max(sys.getrecursionlimit(), 30000))

_MINUS_VM1 = -V_MINUS_1
_V = Scalar.v_power(1)
_GIMEL_BASE = V_MINUS_1 * HALF  # (v-1)/2


@dataclass(frozen=True)
class ClassVector:
    """Coefficients of an element modulo commutators, one per odd partition."""

    n: int
    coeffs: dict

    def __getitem__(self, nu) -> Scalar:
        return self.coeffs[tuple(nu)]

    def is_zero(self) -> bool:
        return all(val.is_zero() for val in self.coeffs.values())

    def add(self, other: "ClassVector") -> "ClassVector":
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")
        return ClassVector(
            self.n,
            {nu: val + other.coeffs[nu] for nu, val in self.coeffs.items()},
        )

    def scale(self, s: Scalar) -> "ClassVector":
        return ClassVector(self.n, {nu: val * s for nu, val in self.coeffs.items()})

    def to_json(self) -> str:
        return json.dumps(
            {",".join(map(str, nu)): val.render() for nu, val in self.coeffs.items()}
        )


def odd_partitions(n: int) -> list:
    return enumerate_partitions(n, "odd")


def zero_vector(n: int) -> ClassVector:
    return ClassVector(n, {nu: ZERO for nu in odd_partitions(n)})


def unit_vector(n: int, nu) -> ClassVector:
    nu = tuple(nu)
    vec = {rho: ZERO for rho in odd_partitions(n)}
    if nu not in vec:
        raise KeyError(f"{nu} is not an odd partition of {n}")
    vec[nu] = ONE
    return ClassVector(n, vec)


# ---------------------------------------------------------------------------
# internal orientation: terms are T_sigma C_I


def _tl_right_hecke(acc, sigma, cliff, coeff, j):
    if sigma[j - 1] < sigma[j]:
        _acc(acc, (right_mul_s(sigma, j), cliff), coeff)
    else:
        _acc(acc, (sigma, cliff), coeff * V_MINUS_1)
        _acc(acc, (right_mul_s(sigma, j), cliff), coeff * _V)


def _tl_rmul_T(terms: dict, j: int) -> dict:
    # move T_j left through C_I, then a Hecke step on sigma
    acc: dict = {}
    pair = frozenset((j, j + 1))
    for (sigma, cliff), coeff in terms.items():
        inter = cliff & pair
        if not inter:
            _tl_right_hecke(acc, sigma, cliff, coeff, j)
        elif inter == frozenset((j + 1,)):
            _tl_right_hecke(acc, sigma, cliff ^ pair, coeff, j)
        elif inter == frozenset((j,)):
            swapped = cliff ^ pair
            _tl_right_hecke(acc, sigma, swapped, coeff, j)
            _acc(acc, (sigma, swapped), coeff * _MINUS_VM1)
            _acc(acc, (sigma, cliff), coeff * V_MINUS_1)
        else:
            _tl_right_hecke(acc, sigma, cliff, -coeff, j)
            _acc(acc, (sigma, cliff), coeff * V_MINUS_1)
            _acc(acc, (sigma, cliff - pair), coeff * V_MINUS_1)
    return acc


def _tl_rmul_c(terms: dict, k: int) -> dict:
    acc: dict = {}
    for (sigma, cliff), coeff in terms.items():
        if sum(1 for e in cliff if e > k) % 2:
            coeff = -coeff
        _acc(acc, (sigma, cliff ^ {k}), coeff)
    return acc


_CPUSH_MEMO: dict = {}


def _cpush(sigma, k: int) -> dict:
    """c_k * T_sigma as {(tau, m): coeff} meaning coeff * T_tau * c_m."""
    key = (sigma, k)
    cached = _CPUSH_MEMO.get(key)
    if cached is not None:
        return cached
    j = next(left_descents(sigma), None)
    if j is None:
        result = {(sigma, k): ONE}
    else:
        tau = left_mul_s(j, sigma)
        if k == j:
            # c_j T_j = T_j c_{j+1} - (v-1) c_{j+1} + (v-1) c_j
            result = dict(_cpush_lmul_T(_cpush(tau, j + 1), j))
            for mkey, s in _cpush(tau, j + 1).items():
                _acc(result, mkey, s * _MINUS_VM1)
            for mkey, s in _cpush(tau, j).items():
                _acc(result, mkey, s * V_MINUS_1)
        elif k == j + 1:
            result = _cpush_lmul_T(_cpush(tau, j), j)
        else:
            result = _cpush_lmul_T(_cpush(tau, k), j)
    _CPUSH_MEMO[key] = result
    return result


def _cpush_lmul_T(push: dict, j: int) -> dict:
    acc: dict = {}
    for (rho, m), coeff in push.items():
        inv_pos_j = rho.index(j)
        inv_pos_j1 = rho.index(j + 1)
        if inv_pos_j < inv_pos_j1:
            _acc(acc, (left_mul_s(j, rho), m), coeff)
        else:
            _acc(acc, (rho, m), coeff * V_MINUS_1)
            _acc(acc, (left_mul_s(j, rho), m), coeff * _V)
    return acc


def _tl_lmul_c(terms: dict, k: int) -> dict:
    acc: dict = {}
    for (sigma, cliff), coeff in terms.items():
        for (tau, m), s in _cpush(sigma, k).items():
            val = coeff * s
            if sum(1 for e in cliff if e < m) % 2:
                val = -val
            _acc(acc, (tau, cliff ^ {m}), val)
    return acc


def _to_internal(h: AlgebraElement) -> dict:
    """Rewrite public C_I T_sigma terms as combinations of T_tau C_J."""
    out: dict = {}
    for (sigma, cliff), coeff in h.terms.items():
        cur = {(sigma, frozenset()): coeff}
        for k in sorted(cliff, reverse=True):
            cur = _tl_lmul_c(cur, k)
        for key, val in cur.items():
            _acc(out, key, val)
    return out


# ---------------------------------------------------------------------------
# the reduction


class ReductionError(RuntimeError):
    """Internal invariant failure; must never fire on valid input."""


_MEMO: dict = {}
_MEMO_LOCK = threading.Lock()
_LOCAL = threading.local()
_DEFAULT_FUEL = 5_000_000


def clear_caches() -> None:
    with _MEMO_LOCK:
        _MEMO.clear()
        _CPUSH_MEMO.clear()


class _Fuel:
    __slots__ = ("left",)

    def __init__(self, amount: int):
        self.left = amount

    def burn(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise ReductionError(
                "reduction fuel exhausted; the rewriting invariants are broken"
            )


def _blocks(gamma):
    offset = 0
    for part in gamma:
        yield range(offset + 1, offset + part + 1)
        offset += part


def _combine(acc: dict, vec: dict, coeff: Scalar) -> None:
    for nu, val in vec.items():
        _acc(acc, nu, coeff * val)


def _reduce_terms(terms: dict, fuel: _Fuel) -> dict:
    acc: dict = {}
    for (sigma, cliff), coeff in terms.items():
        _combine(acc, _reduce_term(sigma, cliff, fuel), coeff)
    return acc


def _reduce_term(sigma, cliff, fuel: _Fuel) -> dict:
    key = (sigma, cliff)
    with _MEMO_LOCK:
        cached = _MEMO.get(key)
    if cached is not None:
        return cached
    stack = getattr(_LOCAL, "stack", None)
    if stack is None:
        stack = _LOCAL.stack = set()
    if key in stack:
        raise ReductionError(f"reduction cycle at term {key}")
    stack.add(key)
    try:
        result = _reduce_term_inner(sigma, cliff, fuel)
    finally:
        stack.discard(key)
    with _MEMO_LOCK:
        _MEMO[key] = result
    return result


def _reduce_term_inner(sigma, cliff, fuel: _Fuel) -> dict:
    fuel.burn()
    n = len(sigma)

    # (1) odd terms carry no trace
    if len(cliff) % 2:
        return {}

    # (2) rotate a leading T_j away until sigma is a staircase
    for i in range(1, n + 1):
        if sigma[i - 1] > i + 1:
            j = sigma[i - 1] - 1
            # minimality of i puts the value j after position i, so s_j sigma
            # is shorter and T_sigma C_I = T_j (T_{s_j sigma} C_I) rotates to
            # (T_{s_j sigma} C_I) T_j modulo commutators
            moved = _tl_rmul_T({(left_mul_s(j, sigma), cliff): ONE}, j)
            return _reduce_terms(moved, fuel)

    gamma = w_gamma_form(sigma)
    if gamma is None:
        raise ReductionError(f"non-staircase survived rotation: {sigma}")

    # (3) a block holding an odd number of Clifford letters kills the term
    block_list = list(_blocks(gamma))
    for block in block_list:
        if sum(1 for e in cliff if e in block) % 2:
            return {}

    # (4) strip Clifford letters pairwise by conjugating with c_{min+1}
    if cliff:
        i = min(cliff)
        conj = _tl_lmul_c({(sigma, cliff): ONE}, i + 1)
        conj = _tl_rmul_c(conj, i + 1)
        return _reduce_terms(conj, fuel)

    # (5) sort the staircase blocks
    mu = tuple(sorted(gamma, reverse=True))
    if mu != gamma:
        return _reduce_term(w_gamma(mu)[0], cliff, fuel)

    if all(part % 2 for part in mu):
        return {mu: ONE}

    # (6) halve away the first even block via its Clifford volume element
    a = next(idx for idx, part in enumerate(mu) if part % 2 == 0)
    block = block_list[a]
    size = len(block)
    sign = sc_int(-1 if (size * (size - 1) // 2) % 2 else 1)
    cur = {(sigma, frozenset()): sign}
    for k in block:
        cur = _tl_rmul_c(cur, k)
    for k in reversed(block):
        cur = _tl_lmul_c(cur, k)
    _acc(cur, (sigma, frozenset()), ONE)
    if (sigma, frozenset()) in cur:
        raise ReductionError(f"even-block halving left T_w_mu alive for mu={mu}")
    halved = {term: half(val) for term, val in cur.items()}
    return _reduce_terms(halved, fuel)


# ---------------------------------------------------------------------------
# public API


def reduce(h: AlgebraElement) -> ClassVector:
    """Class polynomials: the coefficients of h on the T_{w_nu} basis
    modulo commutators (odd terms contribute nothing)."""
    fuel = _Fuel(_DEFAULT_FUEL)
    raw = _reduce_terms(_to_internal(h), fuel)
    vec = {nu: ZERO for nu in odd_partitions(h.n)}
    for nu, val in raw.items():
        if nu not in vec:
            raise ReductionError(f"reduction produced non-odd partition {nu}")
        vec[nu] = val
    return ClassVector(h.n, vec)


def f_nu(h: AlgebraElement, nu) -> Scalar:
    """The trace function dual to T_{w_nu}: f_nu(T_{w_rho}) = delta."""
    return reduce(h)[tuple(nu)]


def gimel_weight(n: int, nu) -> Scalar:
    return _GIMEL_BASE ** (n - len(nu))


def gimel(h: AlgebraElement) -> Scalar:
    """The symmetrizing trace: sum of f_nu(h) * ((v-1)/2)^(n - len(nu))."""
    vec = reduce(h)
    total = ZERO
    for nu, val in vec.coeffs.items():
        if not val.is_zero():
            total = total + val * gimel_weight(h.n, nu)
    return total
