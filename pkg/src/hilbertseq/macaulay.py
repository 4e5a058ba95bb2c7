"""Macaulay expansions, growth bounds and the O-sequence predicate.

All arithmetic is exact on Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Optional, Sequence

__all__ = [
    "MacaulayExpansion",
    "binom",
    "expand",
    "bound",
    "defect",
    "is_max_growth",
    "is_o_sequence",
    "first_o_failure",
    "poly_dim",
    "min_b",
    "min_b_closed_form",
]


def binom(n: int, k: int) -> int:
    """n choose k, zero when k > n."""
    return comb(n, k)


@dataclass(frozen=True)
class MacaulayExpansion:
    """Greedy binomial decomposition of ``value`` at ``degree``.

    ``terms`` holds ``(top, bottom)`` pairs; bottoms run degree, degree-1, ...
    and zero binomials are dropped.
    """

    value: int
    degree: int
    terms: tuple[tuple[int, int], ...]

    def evaluate(self) -> int:
        return sum(comb(top, bottom) for top, bottom in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"C({t},{b})" for t, b in self.terms)


def _largest_top(rem: int, bottom: int, upper: Optional[int]) -> int:
    # largest n with comb(n, bottom) <= rem, given rem >= 1
    lo = bottom
    if upper is None:
        hi = bottom + 1
        while comb(hi, bottom) <= rem:
            lo = hi
            hi = 2 * hi
    else:
        hi = upper + 1
    # invariant: comb(lo, bottom) <= rem < comb(hi, bottom)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if comb(mid, bottom) <= rem:
            lo = mid
        else:
            hi = mid
    return lo


@lru_cache(maxsize=1 << 16)
def _expand_terms(h: int, a: int) -> tuple[tuple[int, int], ...]:
    terms = []
    rem = h
    upper = None
    for bottom in range(a, 0, -1):
        if rem == 0:
            break
        top = _largest_top(rem, bottom, upper)
        terms.append((top, bottom))
        rem -= comb(top, bottom)
        upper = top - 1
    assert rem == 0
    return tuple(terms)


def expand(h: int, a: int) -> MacaulayExpansion:
    """Return the Macaulay expansion of ``h`` in degree ``a``.

    >>> expand(57, 18).terms
    ((19, 18), (18, 17), (17, 16), (15, 15), (14, 14), (13, 13))
    """
    if a < 1:
        raise ValueError(f"degree must be >= 1, got {a}")
    if h < 0:
        raise ValueError(f"value must be non-negative, got {h}")
    return MacaulayExpansion(h, a, _expand_terms(h, a))


@lru_cache(maxsize=1 << 16)
def _bound(h: int, a: int) -> int:
    return sum(comb(top + 1, bottom + 1) for top, bottom in _expand_terms(h, a))


def bound(h: int, a: int) -> int:
    """Largest value allowed in degree ``a + 1`` after ``h`` in degree ``a``."""
    if a < 1:
        raise ValueError(f"degree must be >= 1, got {a}")
    if h < 0:
        raise ValueError(f"value must be non-negative, got {h}")
    return _bound(h, a)


def defect(h: int, a: int) -> int:
    """How far maximal growth from ``h`` in degree ``a`` exceeds ``h``."""
    return bound(h, a) - h


def is_max_growth(h_a: int, h_next: int, a: int) -> bool:
    return h_next == bound(h_a, a)


def first_o_failure(H: Sequence[int]) -> Optional[int]:
    """Smallest degree at which ``H`` stops being an O-sequence, or None.

    Degree 0 is reported when ``H[0] != 1``; a negative entry is reported at
    its own degree; otherwise the reported degree is the ``a + 1`` where
    ``H[a + 1] > bound(H[a], a)``.
    """
    if len(H) == 0:
        raise ValueError("empty sequence")
    if H[0] != 1:
        return 0
    for i in range(1, len(H)):
        if H[i] < 0:
            return i
        if i >= 2 and H[i] > _bound(H[i - 1], i - 1):
            return i
    return None


def is_o_sequence(H: Sequence[int]) -> bool:
    return first_o_failure(H) is None


def poly_dim(numvars: int, degree: int) -> int:
    """Dimension of the degree piece of a polynomial ring in ``numvars`` variables."""
    if numvars < 1:
        raise ValueError(f"numvars must be >= 1, got {numvars}")
    return comb(numvars - 1 + degree, degree)


def min_b(delta: int, a: int) -> int:
    """Smallest b with ``defect(b, a) >= delta``, found by scanning b upward.

    Only values below ``poly_dim(3, a)`` are searched.
    """
    if delta < 1:
        raise ValueError(f"delta must be >= 1, got {delta}")
    if a < delta:
        raise ValueError(f"need a >= delta, got a={a}, delta={delta}")
    for b in range(1, poly_dim(3, a)):
        if _bound(b, a) - b >= delta:
            return b
    raise ValueError(f"no b < {poly_dim(3, a)} has defect >= {delta} in degree {a}")


def min_b_closed_form(delta: int, a: int) -> int:
    """Closed-form lower bound for b; agrees with :func:`min_b` when a >= delta."""
    return delta * a - delta * (delta - 3) // 2
