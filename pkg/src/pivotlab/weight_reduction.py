"""Exact lattice reduction and Frank-Tardos style weight reduction.

``frank_tardos_reduce(w, N)`` returns a small integer vector whose inner
product with every integer vector b of l1 norm at most N-1 has the same sign
as that of w.  It peels w into a sequence of integer vectors p_1, p_2, ...
via simultaneous Diophantine approximation; the sign of w.b is the sign of
the first nonzero p_i.b, and a nested weighting of the p_i reproduces that
ordering in a single integer vector.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

LLL_DELTA = Fraction(3, 4)
DEFAULT_SIGN_BUDGET = 1 << 22


class LinearDependenceError(ValueError):
    """The input basis does not have full row rank."""


class SignBudgetExceeded(RuntimeError):
    def __init__(self, count: int, budget: int):
        self.count = count
        self.budget = budget
        super().__init__(f"{count} sign vectors exceed the enumeration budget {budget}")


def _frac(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("pass exact numbers (int, Fraction or 'p/q' strings), not floats")
    return Fraction(x)


def _dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def _gram_schmidt(basis: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[list[Fraction]], list[Fraction]]:
    n = len(basis)
    star: list[list[Fraction]] = []
    mu = [[Fraction(0)] * n for _ in range(n)]
    norms: list[Fraction] = []
    for i in range(n):
        v = list(basis[i])
        for j in range(i):
            mu[i][j] = _dot(basis[i], star[j]) / norms[j]
            v = [a - mu[i][j] * b for a, b in zip(v, star[j])]
        nv = _dot(v, v)
        if nv == 0:
            raise LinearDependenceError(f"basis vector {i} lies in the span of the earlier ones")
        star.append(v)
        norms.append(nv)
    return star, mu, norms


def lll_reduce_with_transform(basis: Sequence[Sequence], delta: Fraction = LLL_DELTA
                              ) -> tuple[list[list[Fraction]], list[list[int]]]:
    """LLL reduction in exact arithmetic.

    Returns the reduced basis and the unimodular integer matrix U with
    U * basis = reduced (rows are vectors).
    """
    b = [[_frac(x) for x in row] for row in basis]
    n = len(b)
    if n == 0:
        return [], []
    if len({len(row) for row in b}) != 1:
        raise ValueError("basis vectors must have equal length")
    if n > len(b[0]):
        raise LinearDependenceError("more vectors than dimensions")
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    star, mu, norms = _gram_schmidt(b)
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                U[k] = [x - q * y for x, y in zip(U[k], U[j])]
                for i in range(j + 1):
                    mu[k][i] -= q * (mu[j][i] if i < j else 1)
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            U[k], U[k - 1] = U[k - 1], U[k]
            star, mu, norms = _gram_schmidt(b)
            k = max(k - 1, 1)
    return b, U


def lll_reduce(basis: Sequence[Sequence], delta: Fraction = LLL_DELTA) -> list[list[Fraction]]:
    return lll_reduce_with_transform(basis, delta)[0]


def is_lll_reduced(basis: Sequence[Sequence], delta: Fraction = LLL_DELTA) -> bool:
    """Size condition |mu_ij| <= 1/2 and the Lovasz condition."""
    b = [[_frac(x) for x in row] for row in basis]
    _, mu, norms = _gram_schmidt(b)
    for i in range(len(b)):
        for j in range(i):
            if abs(mu[i][j]) > Fraction(1, 2):
                return False
    return all(norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1] for k in range(1, len(b)))


def determinant(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    m = [[_frac(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


# -- simultaneous Diophantine approximation ----------------------------------

def simultaneous_approximation(v: Sequence[Fraction], eps: Fraction) -> tuple[int, list[int]]:
    """q >= 1 and integers p with |q*v_i - p_i| <= eps for every i, and
    q <= 2^ceil(k(k+1)/4) * eps^-k (the LLL guarantee)."""
    k = len(v)
    v = [_frac(x) for x in v]
    # 2^(-k(k+1)/4) rounded down to a power of two keeps the LLL bound valid
    scale = Fraction(1, 2 ** -(-k * (k + 1) // 4))
    d0 = eps ** (k + 1) * scale
    basis = [[d0] + v] + [[Fraction(0)] * (i + 1) + [Fraction(-1)] + [Fraction(0)] * (k - i - 1) for i in range(k)]
    reduced = lll_reduce(basis)
    first = reduced[0]
    q = first[0] / d0
    assert q.denominator == 1 and q != 0, "the shortest vector must use the approximated direction"
    q = int(q)
    if q < 0:
        q = -q
    p = [round(q * x) for x in v]
    assert all(abs(q * x - pi) <= eps for x, pi in zip(v, p))
    return q, p


# -- Frank-Tardos -------------------------------------------------------------

@dataclass(frozen=True)
class ReducedWeights:
    entries: tuple[int, ...]
    certified_N: int
    pieces: tuple[tuple[int, ...], ...] = ()

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]


def ft_norm_bound(k: int, N: int) -> int:
    return 2 ** (4 * k ** 3) * N ** (k * (k + 2))


def frank_tardos_reduce(w: Sequence, N: int) -> ReducedWeights:
    if N < 2:
        raise ValueError("N must be at least 2")
    w = [_frac(x) for x in w]
    k = len(w)
    if k < 1:
        raise ValueError("the weight vector must be nonempty")
    eps = Fraction(1, 2 * N)
    pieces: list[list[int]] = []
    cur = list(w)
    while any(cur):
        top = max(abs(x) for x in cur)
        v = [x / top for x in cur]
        q, p = simultaneous_approximation(v, eps)
        pieces.append(p)
        cur = [q * x - pi for x, pi in zip(v, p)]
        assert len(pieces) <= k, "each round zeroes at least one more coordinate"
    if not pieces:
        out = tuple(0 for _ in w)
    else:
        P = max(max(abs(x) for x in p) for p in pieces)
        base = 2 * (N - 1) * P + 1
        t = len(pieces)
        vec = [0] * k
        for i, p in enumerate(pieces):
            f = base ** (t - 1 - i)
            vec = [a + f * b for a, b in zip(vec, p)]
        g = math.gcd(*vec)
        out = tuple(x // g for x in vec) if g > 1 else tuple(vec)
    assert max(abs(x) for x in out) <= ft_norm_bound(k, N), "infinity norm above 2^(4k^3) N^(k(k+2))"
    return ReducedWeights(out, N, tuple(tuple(p) for p in pieces))


# -- sign preservation ----------------------------------------------------------

def _value_order(r: int) -> list[int]:
    out = [0]
    for m in range(1, r + 1):
        out += [m, -m]
    return out


def sign_vectors(k: int, radius: int) -> Iterator[tuple[int, ...]]:
    """Integer vectors of l1 norm at most ``radius``: by norm, then
    lexicographically with coordinate values ordered 0, 1, -1, 2, -2, ..."""
    order = _value_order(radius)

    def rec(i: int, left: int, exact: bool) -> Iterator[tuple[int, ...]]:
        if i == k:
            if not exact or left == 0:
                yield ()
            return
        for x in order:
            if abs(x) > left:
                continue
            for rest in rec(i + 1, left - abs(x), exact):
                yield (x,) + rest

    for r in range(radius + 1):
        yield from rec(0, r, True)


def count_sign_vectors(k: int, radius: int) -> int:
    # number of integer points in the l1 ball
    return sum(math.comb(k, i) * math.comb(radius, i) * 2 ** i for i in range(min(k, radius) + 1))


@dataclass(frozen=True)
class SignCheck:
    ok: bool
    counterexample: tuple[int, ...] | None
    checked: int

    def __bool__(self) -> bool:
        return self.ok


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def verify_sign_preservation(w: Sequence, wbar: Sequence, N: int, budget: int = DEFAULT_SIGN_BUDGET) -> SignCheck:
    w = [_frac(x) for x in w]
    wbar = [_frac(x) for x in wbar]
    if len(w) != len(wbar):
        raise ValueError("dimension mismatch")
    total = count_sign_vectors(len(w), N - 1)
    if total > budget:
        raise SignBudgetExceeded(total, budget)
    checked = 0
    for b in sign_vectors(len(w), N - 1):
        checked += 1
        if _sign(_dot(w, b)) != _sign(_dot(wbar, b)):
            return SignCheck(False, b, checked)
    return SignCheck(True, None, checked)


def min_norm_sign_equivalent(w: Sequence, N: int, max_norm: int = 64) -> tuple[int, ...]:
    """Smallest infinity-norm integer vector with the same signs on every b
    of l1 norm at most N-1, by iterative deepening (a cross-check oracle)."""
    w = [_frac(x) for x in w]
    k = len(w)
    constraints = [(b, _sign(_dot(w, b))) for b in sign_vectors(k, N - 1) if any(b)]
    for M in range(max_norm + 1):
        for cand in itertools.product(range(-M, M + 1), repeat=k):
            if max((abs(x) for x in cand), default=0) != M:
                continue
            if all(_sign(_dot(cand, b)) == s for b, s in constraints):
                return tuple(cand)
    raise ValueError(f"no sign-equivalent vector with infinity norm <= {max_norm}")
