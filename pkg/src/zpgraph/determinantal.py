"""Rank-deficient tuples: exact membership tests and finite-field point counts.

The locus of n-tuples of vectors in a g-dimensional space spanning less than
n dimensions is identified with the n x g matrices of rank < n.  Counting its
points over F_q for enough values of q and interpolating gives a polynomial
whose degree is the dimension of the locus, hence its codimension.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .exact import determinant, exact_rank

MAX_Q = 2**16


def prime_power_base(q: int) -> int | None:
    """Return p if ``q = p**k`` with p prime and k >= 1, else None."""
    if q < 2:
        return None
    p = next((d for d in range(2, int(q**0.5) + 1) if q % d == 0), q)
    while q % p == 0:
        q //= p
    return p if q == 1 else None


def prime_powers(count: int) -> list[int]:
    out = []
    q = 2
    while len(out) < count:
        if prime_power_base(q):
            out.append(q)
        q += 1
    return out


def _check_q(q: int):
    if not (2 <= q <= MAX_Q) or prime_power_base(q) is None:
        raise ValueError(f"q = {q} is not a prime power in [2, {MAX_Q}]")


def rank_count_exact(a: int, b: int, r: int, q: int) -> int:
    """Number of a x b matrices over F_q of rank exactly r."""
    _check_q(q)
    if a < 0 or b < 0 or not 0 <= r <= min(a, b):
        raise ValueError(f"rank {r} impossible for a {a}x{b} matrix")
    num, den = 1, 1
    for i in range(r):
        num *= (q**a - q**i) * (q**b - q**i)
        den *= q**r - q**i
    return num // den


@dataclass(frozen=True)
class RankCountTable:
    a: int
    b: int
    q: int
    counts: tuple[int, ...]

    def __post_init__(self):
        assert sum(self.counts) == self.q ** (self.a * self.b)
        assert self.counts[0] == 1

    def below(self, n: int) -> int:
        """Number of matrices of rank < n."""
        return sum(self.counts[:n])


def rank_count_table(a: int, b: int, q: int) -> RankCountTable:
    return RankCountTable(a, b, q, tuple(rank_count_exact(a, b, r, q) for r in range(min(a, b) + 1)))


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    A = [[x % p for x in row] for row in rows]
    if not A:
        return 0
    ncols = len(A[0])
    rank = 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(A)) if A[i][c]), None)
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        inv = pow(A[rank][c], -1, p)
        A[rank] = [x * inv % p for x in A[rank]]
        for i in range(len(A)):
            if i != rank and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[rank])]
        rank += 1
    return rank


def enumerate_rank_counts(a: int, b: int, p: int) -> tuple[int, ...]:
    """Rank histogram by exhaustive enumeration of all matrices over F_p (p prime)."""
    if prime_power_base(p) != p:
        raise ValueError("exhaustive counts need a prime field")
    counts = [0] * (min(a, b) + 1)
    for entries in product(range(p), repeat=a * b):
        rows = [entries[i * b:(i + 1) * b] for i in range(a)]
        counts[rank_mod_p(rows, p)] += 1
    return tuple(counts)


def _check_tuple(vectors):
    if not vectors:
        raise ValueError("empty tuple")
    g = len(vectors[0])
    if any(len(v) != g for v in vectors):
        raise ValueError("ragged tuple: all vectors must have the same length")
    if len(vectors) > g:
        raise ValueError("tuple longer than the ambient dimension")
    return g


def _deficient_by_minors(vectors) -> bool:
    n, g = len(vectors), len(vectors[0])
    for cols in combinations(range(g), n):
        if determinant([[v[c] for c in cols] for v in vectors]) != 0:
            return False
    return True


def tuple_rank_deficient(vectors: Sequence[Sequence], method: str = "rank") -> bool:
    """True iff the vectors span fewer than ``len(vectors)`` dimensions.

    ``method="rank"`` uses exact elimination, ``"minors"`` checks that every
    maximal minor vanishes, ``"both"`` runs both and insists they agree.
    """
    vectors = [list(v) for v in vectors]
    _check_tuple(vectors)
    n = len(vectors)
    if method == "rank":
        return exact_rank(vectors) < n
    if method == "minors":
        return _deficient_by_minors(vectors)
    if method == "both":
        by_rank = exact_rank(vectors) < n
        if by_rank != _deficient_by_minors(vectors):
            raise ArithmeticError("rank and minors tests disagree")
        return by_rank
    raise ValueError(f"unknown method {method!r}")


def interpolate(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Monomial coefficients (constant first) of the interpolating polynomial."""
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        shifted = [Fraction(0)] + poly[:-1]
        poly = [s - xs[i] * p for s, p in zip(shifted, poly)]
        poly[0] += coef[i]
    return poly


@dataclass(frozen=True)
class CodimEstimate:
    n: int
    g: int
    degree: int
    codim: int
    coefficients: tuple[Fraction, ...]
    q_values: tuple[int, ...]
    stated: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        coeffs = [int(c) if c.denominator == 1 else str(c) for c in self.coefficients]
        return {
            "n": self.n,
            "g": self.g,
            "degree": self.degree,
            "codim": self.codim,
            "ambient_dim": self.n * self.g,
            "coefficients": coeffs,
            "q_values": list(self.q_values),
            "stated": self.stated,
        }


def rank_lt_count(n: int, g: int, q: int) -> int:
    return sum(rank_count_exact(n, g, r, q) for r in range(n))


def empirical_codim(n: int, g: int, q_values: Sequence[int] | None = None) -> CodimEstimate:
    """Codimension of the rank < n locus in n x g matrices, measured by point counts."""
    if not 1 <= n <= g:
        raise ValueError("need 1 <= n <= g")
    need = n * g + 1
    qs = list(q_values) if q_values is not None else prime_powers(need)
    if len(set(qs)) < need:
        raise ValueError(f"need at least {need} distinct q values, got {len(set(qs))}")
    qs = sorted(set(qs))
    for q in qs:
        _check_q(q)
    coeffs = interpolate(qs, [rank_lt_count(n, g, q) for q in qs])
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    degree = len(coeffs) - 1
    codim = n * g - degree
    stated = {
        "codimension dim V": g,
        "matches codimension dim V": codim == g,
        "codimension exceeds n": codim > n,
        "standard determinantal codimension": g - n + 1,
    }
    return CodimEstimate(n, g, degree, codim, tuple(coeffs), tuple(qs), stated)
