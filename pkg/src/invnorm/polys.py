"""Exact integer polynomials P_n and the odd-derivative coefficients C_n.

P_n is defined by ``P_0 = 1`` and ``P_n = P_{n-1}' + n x P_{n-1}``; the n-th
derivative of the probit function is ``P_{n-1}(S) * (S')**n``.  Three
independent constructions are provided (direct recurrence, products of the
sparse transfer matrices, and the triple-sum recurrence) together with two
routes to ``C_n = P_{n-1}(0)``.  Everything here is plain Python ``int``.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

__all__ = [
    "IntPolynomial",
    "CoeffTable",
    "poly_next",
    "poly_sequence",
    "transfer_matrix",
    "coeffs_via_matrices",
    "poly_next_triple_sum",
    "series_coeff_c",
    "c_via_derivative_recurrence",
    "poly_eval",
]


def _strip(coeffs: Sequence[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c) if c else (0,)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense polynomial with arbitrary-precision integer coefficients.

    ``coeffs[k]`` is the coefficient of ``x**k``.  Trailing zeros are removed
    on construction, so the zero polynomial is ``(0,)``.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int]):
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficients required, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", _strip(coeffs))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        if self.coeffs == (0,):
            return -1
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self), len(other))
        return IntPolynomial([self[k] + other[k] for k in range(n)])

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial([other * c for c in self.coeffs])
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> IntPolynomial:
        return IntPolynomial([k * c for k, c in enumerate(self.coeffs)][1:] or [0])

    def __call__(self, x):
        """Horner evaluation in the type of ``x``; exact for int or Fraction."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0 and self.degree >= 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


_X = IntPolynomial([0, 1])


def poly_next(p: IntPolynomial, n: int) -> IntPolynomial:
    """Return ``P_n = p' + n*x*p`` given ``p = P_{n-1}``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if p.degree != n - 1:
        raise ValueError(f"expected a polynomial of degree {n - 1}, got degree {p.degree}")
    return p.derivative() + _X * p * n


@lru_cache(maxsize=None)
def _sequence(n_max: int) -> tuple[IntPolynomial, ...]:
    if n_max == 0:
        return (IntPolynomial([1]),)
    prev = _sequence(n_max - 1)
    return prev + (poly_next(prev[-1], n_max),)


def poly_sequence(n_max: int) -> list[IntPolynomial]:
    """``[P_0, P_1, ..., P_{n_max}]`` by the direct recurrence."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    # build bottom-up so the cache never recurses deeply
    for k in range(0, n_max + 1, 64):
        _sequence(k)
    return list(_sequence(n_max))


def transfer_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """The (n+1) x n matrix mapping the coefficients of P_{n-1} to those of P_n.

    With 1-based indices, entry (i, j) is ``i`` on the superdiagonal
    (j = i+1), ``n`` on the subdiagonal (j = i-1) and zero elsewhere.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rows = []
    for i in range(1, n + 2):
        row = []
        for j in range(1, n + 1):
            if j == i + 1:
                row.append(i)
            elif j == i - 1:
                row.append(n)
            else:
                row.append(0)
        rows.append(tuple(row))
    return tuple(rows)


def _matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    inner = len(b)
    cols = len(b[0])
    return [[sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)] for row in a]


def coeffs_via_matrices(n: int) -> list[int]:
    """Coefficients of P_n as the column ``A^(n) A^(n-1) ... A^(1)``."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    prod: list[list[int]] = [[1]]
    for k in range(1, n + 1):
        prod = _matmul(transfer_matrix(k), prod)
    return [row[0] for row in prod]


def poly_next_triple_sum(prefix: Sequence[IntPolynomial]) -> IntPolynomial:
    """P_{n+1} from ``prefix = [P_0, ..., P_n]`` via the triple-product recurrence.

    The term with index ``n - i - 1 = -1`` uses ``P_{-1}(x) = x``.
    """
    n = len(prefix) - 1
    if n < 0:
        raise ValueError("prefix must contain at least P_0")
    if prefix[0].coeffs != (1,):
        raise ValueError("prefix must start at P_0 = 1")
    for k, p in enumerate(prefix):
        if p.degree != k:
            raise ValueError(f"prefix element {k} has degree {p.degree}")

    def P(k: int) -> IntPolynomial:
        return _X if k == -1 else prefix[k]

    total = IntPolynomial([0])
    for i in range(n + 1):
        outer = comb(n, i)
        for j in range(i + 1):
            total = total + P(n - i - 1) * P(i - j) * P(j) * (outer * comb(i, j))
    return total


class CoeffTable(Mapping):
    """Read-only map ``n -> C_n`` for ``1 <= n <= n_max``.

    Only odd indices are stored; even indices inside the range read as 0.
    """

    def __init__(self, odd_entries: Mapping[int, int], n_max: int):
        for n in odd_entries:
            if n % 2 == 0:
                raise ValueError(f"even index {n} stored in CoeffTable")
        self._entries = dict(sorted(odd_entries.items()))
        self.n_max = n_max

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.n_max:
            raise KeyError(n)
        return self._entries.get(n, 0)

    def __iter__(self) -> Iterator[int]:
        return iter(range(1, self.n_max + 1))

    def __len__(self) -> int:
        return self.n_max

    def odd_items(self) -> list[tuple[int, int]]:
        return list(self._entries.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CoeffTable):
            return self.n_max == other.n_max and self._entries == other._entries
        return super().__eq__(other)

    def __repr__(self) -> str:
        return f"CoeffTable(n_max={self.n_max}, {self._entries})"


def series_coeff_c(n_max: int) -> CoeffTable:
    """``C_n = P_{n-1}(0)`` for ``n = 1..n_max``."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    polys = poly_sequence(n_max - 1)
    entries = {n: polys[n - 1][0] for n in range(1, n_max + 1, 2)}
    for n in range(2, n_max + 1, 2):
        if polys[n - 1][0] != 0:
            raise ArithmeticError(f"P_{n - 1}(0) is nonzero")
    return CoeffTable(entries, n_max)


def c_via_derivative_recurrence(n_max: int) -> CoeffTable:
    """C_n from the third-order derivative recurrence evaluated at x = 1/2.

    With ``D_n = (2 pi)^{n/2} C_n`` the powers of 2 pi balance on both sides,
    leaving ``C_{n+2} = sum_i sum_j binom(n,i) binom(i,j) C_{n-i} C_{i-j+1} C_{j+1}``
    seeded by ``C_0 = 0`` and ``C_1 = 1``.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    c = [0, 1]
    for n in range(0, n_max - 1):
        total = 0
        for i in range(n + 1):
            ci = comb(n, i) * c[n - i]
            if ci == 0:
                continue
            for j in range(i + 1):
                total += ci * comb(i, j) * c[i - j + 1] * c[j + 1]
        c.append(total)
    odd = {}
    for n in range(1, n_max + 1):
        if n % 2:
            odd[n] = c[n]
        elif c[n] != 0:
            raise ArithmeticError(f"derivative recurrence produced nonzero C_{n}")
    return CoeffTable(odd, n_max)


def poly_eval(p: IntPolynomial, x: float) -> float:
    """Horner evaluation in floating point; coefficients are rounded on use."""
    acc = 0.0
    for c in reversed(p.coeffs):
        acc = acc * x + float(c)
    return acc
