"""Parametric codimension-four SI sequences that fail log-concavity.

A triple ``(delta, k, b)`` fixes the half first difference
``(1, 3, 6, ..., r_k, b, b + delta)``: full growth in three variables up to
degree ``k``, a drop to ``b`` in degree ``k + 1`` and growth by ``delta`` in
degree ``k + 2``. When ``delta * s_k > b**2`` the mirrored sequence has a
positive log-concavity defect in degree ``k + 1``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from math import isqrt, sqrt
from typing import Iterable, Optional, Sequence

from .macaulay import bound, defect, first_o_failure, min_b, poly_dim
from .seqcore import (
    HilbertSeq,
    canonical,
    first_difference,
    sum_function,
    symmetric_from_half,
)
from .gorenstein import si_failure

__all__ = [
    "FamilyParams",
    "ParamCheck",
    "ScanRow",
    "InfeasibleParams",
    "MacaulayViolation",
    "validate_params",
    "build",
    "build_extended",
    "predicted_defect",
    "max_extension",
    "lengthen_with_tail",
    "max_violating_b",
    "violating_bs",
    "scan_params",
    "scan_csv",
]


class InfeasibleParams(ValueError):
    pass


class MacaulayViolation(ValueError):
    """A first-difference entry exceeds the Macaulay bound at ``degree``."""

    def __init__(self, degree: int, value: int, limit: int):
        super().__init__(f"degree {degree}: {value} exceeds Macaulay bound {limit}")
        self.degree = degree
        self.value = value
        self.limit = limit


@dataclass(frozen=True)
class FamilyParams:
    delta: int
    k: int
    b: int
    ell: int = 0

    @property
    def s_k(self) -> int:
        return poly_dim(4, self.k)

    @property
    def socle(self) -> int:
        return 2 * self.k + 4 + 2 * self.ell


@dataclass(frozen=True)
class ParamCheck:
    params: FamilyParams
    growth_defect: int  # defect(b, k + 1)
    b_allowed: bool  # b <= r_{k+1}, the bound after r_k
    feasible: bool
    violating: bool  # delta * s_k > b**2
    defect_at_k_plus_1: int  # delta * s_k - b**2
    advisory_window: tuple[int, float]

    def reason(self) -> str:
        p = self.params
        if not self.b_allowed:
            return f"b = {p.b} exceeds r_{p.k + 1} = {poly_dim(3, p.k + 1)}"
        if not self.feasible:
            return (
                f"defect({p.b}, {p.k + 1}) = {self.growth_defect} < delta = {p.delta}"
            )
        return "ok"


def validate_params(delta: int, k: int, b: int, ell: int = 0) -> ParamCheck:
    if delta < 1 or k < 1 or b < 1 or ell < 0:
        raise ValueError(f"need delta, k, b >= 1 and ell >= 0, got {(delta, k, b, ell)}")
    p = FamilyParams(delta, k, b, ell)
    b_allowed = b <= poly_dim(3, k + 1)
    gd = defect(b, k + 1)
    value = delta * p.s_k - b * b
    return ParamCheck(
        params=p,
        growth_defect=gd,
        b_allowed=b_allowed,
        feasible=b_allowed and gd >= delta,
        violating=value > 0,
        defect_at_k_plus_1=value,
        advisory_window=(delta * k, sqrt(delta * k**3 / 6)),
    )


def _ramp(k: int) -> list[int]:
    return [poly_dim(3, i) for i in range(k + 1)]


def _checked_half_difference(delta_half: Sequence[int], start: int) -> None:
    # Macaulay check for entries from degree ``start`` on
    for deg in range(max(start, 2), len(delta_half)):
        limit = bound(delta_half[deg - 1], deg - 1)
        if delta_half[deg] > limit:
            raise MacaulayViolation(deg, delta_half[deg], limit)


def build_extended(delta: int, k: int, b: int, ell: int) -> HilbertSeq:
    """Sequence of socle degree ``2k + 4 + 2 ell`` whose half first difference
    is ``(1, 3, ..., r_k, b, b + delta, ..., b + (ell + 1) delta)``.
    """
    check = validate_params(delta, k, b, ell)
    if not check.feasible:
        raise InfeasibleParams(check.reason())
    dh = _ramp(k) + [b + u * delta for u in range(ell + 2)]
    _checked_half_difference(dh, k + 2)
    return symmetric_from_half(sum_function(dh), 2 * k + 4 + 2 * ell)


def build(delta: int, k: int, b: int) -> HilbertSeq:
    """Base sequence; degrees ``k..k+4`` read ``s_k, s_k+b, s_k+2b+delta, s_k+b, s_k``."""
    return build_extended(delta, k, b, 0)


def predicted_defect(k: int, b: int, u: int) -> int:
    """Defect in degree ``k + u + 1`` of ``build_extended(1, k, b, ell)``, ``ell >= u``."""
    return poly_dim(4, k) - b * b - sum(b + v for v in range(1, u + 1))


def max_extension(k: int, b: int) -> int:
    """Largest ell with ``b*ell + ell*(ell+1)/2 < s_k - b**2``; 0 if ``s_k <= b**2``."""
    room = poly_dim(4, k) - b * b
    if room <= 0:
        return 0
    ell = 0
    while b * (ell + 1) + (ell + 1) * (ell + 2) // 2 < room:
        ell += 1
    return ell


def lengthen_with_tail(H: Sequence[int], tail: Iterable[int]) -> HilbertSeq:
    """Append ``tail`` to the half first difference of the SI sequence ``H``."""
    H = canonical(H)
    reason = si_failure(H)
    if reason is not None:
        raise ValueError(f"not an SI sequence: {reason}")
    tail = list(tail)
    if not tail:
        return H
    if any(t < 0 for t in tail):
        raise ValueError("tail entries must be non-negative")
    j = len(H) - 1
    dh = first_difference(H)[: j // 2 + 1] + tail
    _checked_half_difference(dh, j // 2 + 1)
    assert first_o_failure(dh) is None
    return symmetric_from_half(sum_function(dh), j + 2 * len(tail))


# -- parameter sweeps ---------------------------------------------------------


def max_violating_b(delta: int, k: int) -> int:
    """Largest b with ``delta * s_k > b**2``."""
    return isqrt(delta * poly_dim(4, k) - 1)


def violating_bs(delta: int, k: int) -> list[int]:
    """Every b for which ``(delta, k, b)`` is feasible and violating."""
    return [
        b
        for b in range(1, max_violating_b(delta, k) + 1)
        if validate_params(delta, k, b).feasible
    ]


@dataclass(frozen=True)
class ScanRow:
    delta: int
    k: int
    b_min: Optional[int]
    b_max: int
    violating: bool
    defect_at_k_plus_1: Optional[int]


def scan_params(delta_range: Iterable[int], k_range: Iterable[int]) -> list[ScanRow]:
    """One row per ``(delta, k)``: the smallest b allowing growth by delta
    in degree ``k + 1`` and the largest b keeping ``delta * s_k > b**2``.
    """
    rows = []
    k_values = list(k_range)
    for delta in delta_range:
        for k in k_values:
            b_max = max_violating_b(delta, k)
            try:
                b_lo: Optional[int] = min_b(delta, k + 1)
            except ValueError:
                b_lo = None
            if b_lo is None:
                rows.append(ScanRow(delta, k, None, b_max, False, None))
                continue
            value = delta * poly_dim(4, k) - b_lo * b_lo
            rows.append(ScanRow(delta, k, b_lo, b_max, b_lo <= b_max, value))
    return rows


SCAN_HEADER = ("delta", "k", "b_min", "b_max", "violating", "defect_at_k_plus_1")


def scan_csv(rows: Iterable[ScanRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SCAN_HEADER)
    for r in rows:
        writer.writerow([
            r.delta,
            r.k,
            "" if r.b_min is None else r.b_min,
            r.b_max,
            str(r.violating).lower(),
            "" if r.defect_at_k_plus_1 is None else r.defect_at_k_plus_1,
        ])
    return buf.getvalue()
