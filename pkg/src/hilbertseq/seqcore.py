"""Finite integer sequences indexed by degree and their shape analyses."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

__all__ = [
    "HilbertSeq",
    "LogConcavityReport",
    "parse_sequence",
    "format_sequence",
    "canonical",
    "socle_degree",
    "first_difference",
    "sum_function",
    "is_symmetric",
    "is_unimodal",
    "log_concavity_report",
    "is_log_concave",
    "f_vector",
    "seq_length",
    "symmetric_from_half",
]

HilbertSeq = tuple[int, ...]

_SPLIT = re.compile(r"[,\s]+")


def parse_sequence(text: str) -> HilbertSeq:
    """Parse comma- or whitespace-separated decimal integers.

    Raises ValueError naming the first token that is not an integer.
    """
    tokens = [t for t in _SPLIT.split(text.strip()) if t]
    if not tokens:
        raise ValueError("empty sequence")
    out = []
    for tok in tokens:
        try:
            out.append(int(tok, 10))
        except ValueError:
            raise ValueError(f"not an integer: {tok!r}") from None
    return tuple(out)


def format_sequence(H: Iterable[int]) -> str:
    return ",".join(str(h) for h in H)


def canonical(H: Iterable[int]) -> HilbertSeq:
    """Strip trailing zeros, keeping at least one entry."""
    out = list(H)
    if not out:
        raise ValueError("empty sequence")
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def socle_degree(H: Sequence[int]) -> int:
    """Largest degree with a non-zero entry (-1 for the zero sequence)."""
    for i in range(len(H) - 1, -1, -1):
        if H[i] != 0:
            return i
    return -1


def first_difference(H: Sequence[int]) -> list[int]:
    prev = 0
    out = []
    for h in H:
        out.append(h - prev)
        prev = h
    return out


def sum_function(D: Iterable[int]) -> HilbertSeq:
    total = 0
    out = []
    for d in D:
        total += d
        out.append(total)
    return tuple(out)


def symmetric_from_half(half: Sequence[int], socle: int) -> HilbertSeq:
    """Mirror ``half`` (degrees ``0..socle // 2``) into a sequence of socle degree ``socle``."""
    if len(half) != socle // 2 + 1:
        raise ValueError(f"need {socle // 2 + 1} entries for socle degree {socle}, got {len(half)}")
    return tuple(half[min(i, socle - i)] for i in range(socle + 1))


def is_symmetric(H: Sequence[int]) -> bool:
    H = canonical(H)
    return all(H[i] == H[-1 - i] for i in range(len(H) // 2))


def is_unimodal(H: Sequence[int]) -> bool:
    H = canonical(H)
    falling = False
    for prev, cur in zip(H, H[1:]):
        if cur < prev:
            falling = True
        elif cur > prev and falling:
            return False
    return True


@dataclass
class LogConcavityReport:
    """Interior defects ``h[i-1] * h[i+1] - h[i]**2``; positive means violated."""

    defects: dict[int, int] = field(default_factory=dict)
    violations: list[int] = field(default_factory=list)
    equalities: list[int] = field(default_factory=list)

    @property
    def is_log_concave(self) -> bool:
        return not self.violations


def log_concavity_report(H: Sequence[int]) -> LogConcavityReport:
    H = canonical(H)
    report = LogConcavityReport()
    for i in range(1, len(H) - 1):
        d = H[i - 1] * H[i + 1] - H[i] * H[i]
        report.defects[i] = d
        if d > 0:
            report.violations.append(i)
        elif d == 0:
            report.equalities.append(i)
    return report


def is_log_concave(H: Sequence[int]) -> bool:
    H = canonical(H)
    return all(H[i - 1] * H[i + 1] <= H[i] * H[i] for i in range(1, len(H) - 1))


def f_vector(H: Sequence[int]) -> list[int]:
    """Coefficients of ``sum_j H[j] * (1 + t)**j``."""
    n = len(H)
    return [sum(H[j] * comb(j, i) for j in range(i, n)) for i in range(n)]


def seq_length(H: Iterable[int]) -> int:
    """Total dimension: the sum of the entries."""
    return sum(H)
