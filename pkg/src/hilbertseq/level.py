"""Level sequences: the codimension-two characterization, compressed level
Hilbert functions and sequences admissible of decreasing type.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .macaulay import poly_dim
from .seqcore import HilbertSeq, canonical

__all__ = [
    "LevelProfile",
    "level_profile",
    "is_cod2_level",
    "enumerate_cod2_level",
    "compressed_level",
    "is_admissible_decreasing_type",
]


@dataclass(frozen=True)
class LevelProfile:
    """Drops ``e[i] = h[i-1] - h[i]`` for ``d <= i <= j`` plus ``e[j+1] = h[j]``.

    ``d`` is the first degree with ``h[d] <= d``; the socle type is ``h[j]``.
    """

    d: int
    t: int
    e: dict[int, int] = field(default_factory=dict)

    def chain(self) -> list[int]:
        """The drops in degree order ``d, d+1, ..., j+1``."""
        return [self.e[i] for i in sorted(self.e)]


def level_profile(H: Sequence[int]) -> Optional[LevelProfile]:
    """Profile of ``H`` or None when ``H`` does not start 1, 2, ..., d."""
    H = canonical(H)
    j = len(H) - 1
    d = j + 1
    for i, h in enumerate(H):
        if h <= i:
            d = i
            break
    if any(H[i] != i + 1 for i in range(d)):
        return None
    e = {i: H[i - 1] - H[i] for i in range(max(d, 1), j + 1)}
    e[j + 1] = H[j]
    return LevelProfile(d=d, t=H[j], e=e)


def is_cod2_level(H: Sequence[int]) -> bool:
    """Numeric level criterion in two variables: the drops never decrease
    from degree d through j + 1.
    """
    H = canonical(H)
    if H[0] != 1 or (len(H) > 1 and H[1] > 2):
        return False
    prof = level_profile(H)
    if prof is None:
        return False
    chain = prof.chain()
    if any(x < 0 for x in chain):
        return False
    return all(a <= b for a, b in zip(chain, chain[1:]))


def enumerate_cod2_level(max_socle: int, max_entry: int) -> Iterator[HilbertSeq]:
    """Generate codimension-two level sequences from non-decreasing drop chains.

    Yields every sequence with socle degree at most ``max_socle`` and all
    entries at most ``max_entry``.
    """
    for d in range(1, min(max_socle + 1, max_entry) + 1):
        ramp = [i + 1 for i in range(d)]
        # d = j + 1: the ramp alone, the socle type is d
        if d - 1 <= max_socle:
            yield tuple(ramp)
        yield from _grow(ramp, 0, max_socle)


def _grow(seq: list[int], e_prev: int, max_socle: int) -> Iterator[HilbertSeq]:
    if len(seq) - 1 >= max_socle:
        return
    h_prev = seq[-1]
    # the next entry must stay positive
    for e in range(e_prev, h_prev):
        h = h_prev - e
        seq.append(h)
        if h >= e:
            yield tuple(seq)
        yield from _grow(seq, e, max_socle)
        seq.pop()


def compressed_level(r: int, t: int, j: int) -> HilbertSeq:
    """Entries ``min(r_i, t * r_{j-i})`` for ``0 <= i <= j``."""
    if r < 1 or t < 1 or j < 1:
        raise ValueError(f"r, t, j must be >= 1, got {(r, t, j)}")
    return tuple(min(poly_dim(r, i), t * poly_dim(r, j - i)) for i in range(j + 1))


def is_admissible_decreasing_type(H: Sequence[int]) -> bool:
    """Ramp 1, 2, ..., d, then a plateau at d, then strictly decreasing."""
    H = canonical(H)
    if H[0] != 1:
        return False
    d = len(H)
    for i, h in enumerate(H):
        if h != i + 1:
            d = i
            break
    if d == len(H):
        return True
    # H[d-1] == d here
    i = d
    while i < len(H) and H[i] == d:
        i += 1
    rest = H[i - 1:]
    if any(h < 1 for h in rest):
        return False
    return all(a > b for a, b in zip(rest, rest[1:]))
