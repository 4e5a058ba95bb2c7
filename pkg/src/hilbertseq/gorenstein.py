"""SI and Gorenstein predicates, the SI-sequence enumerator and the
log-concavity verification harness.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .macaulay import _bound, first_o_failure
from .seqcore import (
    HilbertSeq,
    canonical,
    first_difference,
    is_symmetric,
    log_concavity_report,
    sum_function,
    symmetric_from_half,
)

__all__ = [
    "DEFAULT_MAX_NODES",
    "EnumerationAbandoned",
    "VerificationReport",
    "si_failure",
    "is_si_sequence",
    "is_cod3_gorenstein",
    "is_cod2_artin_hf",
    "enumerate_si_sequences",
    "count_si_sequences",
    "verify_logconcavity_class",
]

log = logging.getLogger(__name__)

DEFAULT_MAX_NODES = 10**8


class EnumerationAbandoned(RuntimeError):
    """The recursion node cap was hit before the enumeration finished."""

    def __init__(self, max_nodes: int, partial_count: int):
        super().__init__(
            f"enumeration abandoned after {max_nodes} nodes "
            f"({partial_count} sequences emitted so far)"
        )
        self.max_nodes = max_nodes
        self.partial_count = partial_count


def si_failure(H: Sequence[int]) -> Optional[str]:
    """Why ``H`` is not an SI sequence, or None if it is."""
    H = canonical(H)
    if H[0] != 1:
        return f"h_0 = {H[0]}, expected 1"
    if not is_symmetric(H):
        return "not symmetric"
    # degrees 0..floor(j/2)
    delta = first_difference(H)[: (len(H) - 1) // 2 + 1]
    deg = first_o_failure(delta)
    if deg is not None:
        return f"first difference fails the Macaulay bound in degree {deg} ({delta[deg]})"
    return None


def is_si_sequence(H: Sequence[int]) -> bool:
    return si_failure(H) is None


def is_cod3_gorenstein(H: Sequence[int]) -> bool:
    H = canonical(H)
    h1 = H[1] if len(H) > 1 else 0
    return H[0] == 1 and h1 <= 3 and is_si_sequence(H)


def is_cod2_artin_hf(H: Sequence[int]) -> bool:
    """Hilbert function of a graded Artinian quotient of k[x, y].

    The shape is 1, 2, ..., d followed by a non-increasing tail of positive
    entries, where d is the first degree with ``H[d] < d + 1``.
    """
    H = canonical(H)
    d = len(H)
    for i, h in enumerate(H):
        if h < i + 1:
            d = i
            break
        if h > i + 1:
            return False
    tail = H[d:]
    if any(h < 1 for h in tail):
        return False
    return all(a >= b for a, b in zip(tail, tail[1:]))


# -- enumeration ------------------------------------------------------------


class _Counter:
    __slots__ = ("nodes", "max_nodes", "emitted")

    def __init__(self, max_nodes: int):
        self.nodes = 0
        self.max_nodes = max_nodes
        self.emitted = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise EnumerationAbandoned(self.max_nodes, self.emitted)


def _delta_root(codim: int, socle: int) -> list[int]:
    # forced entries of the half first difference
    if socle // 2 == 0:
        return [1]
    return [1, codim - 1]


def _extend(prefix: list[int], size: int, counter: _Counter) -> Iterator[list[int]]:
    # prefix is a valid O-sequence; grow it to ``size`` entries in lex order
    counter.tick()
    if len(prefix) == size:
        yield prefix
        return
    a = len(prefix) - 1
    top = _bound(prefix[a], a)
    for v in range(top + 1):
        prefix.append(v)
        yield from _extend(prefix, size, counter)
        prefix.pop()


def _subtree(codim: int, socle: int, prefix: Sequence[int], counter: _Counter) -> Iterator[HilbertSeq]:
    size = socle // 2 + 1
    for delta in _extend(list(prefix), size, counter):
        counter.emitted += 1
        yield symmetric_from_half(sum_function(delta), socle)


def enumerate_si_sequences(
    codim: int, socle: int, max_nodes: int = DEFAULT_MAX_NODES
) -> Iterator[HilbertSeq]:
    """Yield every SI sequence with ``h_1 = codim`` and socle degree ``socle``.

    Sequences come out in lexicographic order of their half first
    difference. Raises :class:`EnumerationAbandoned` once more than
    ``max_nodes`` recursion nodes have been visited.
    """
    if codim < 1 or socle < 1:
        raise ValueError(f"codim and socle must be >= 1, got {codim}, {socle}")
    if socle == 1 and codim != 1:
        return
    counter = _Counter(max_nodes)
    yield from _subtree(codim, socle, _delta_root(codim, socle), counter)


def count_si_sequences(codim: int, socle: int, max_nodes: int = DEFAULT_MAX_NODES) -> int:
    return sum(1 for _ in enumerate_si_sequences(codim, socle, max_nodes))


# -- verification -----------------------------------------------------------


@dataclass
class VerificationReport:
    codim: int
    socle_cap: int
    sequences_checked: int = 0
    counts_by_socle: dict[int, int] = field(default_factory=dict)
    violations_found: list[tuple[HilbertSeq, list[int]]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations_found

    def to_dict(self, include_elapsed: bool = False) -> dict:
        out = {
            "codim": self.codim,
            "socle_cap": self.socle_cap,
            "sequences_checked": self.sequences_checked,
            "counts_by_socle": {str(j): n for j, n in sorted(self.counts_by_socle.items())},
            "violations_found": [
                {"sequence": list(seq), "degrees": list(degs)}
                for seq, degs in self.violations_found
            ],
        }
        if include_elapsed:
            out["elapsed"] = round(self.elapsed, 3)
        return out


def _violated_half(H: HilbertSeq) -> bool:
    # symmetric input: checking degrees 1..floor(j/2) is enough
    for i in range(1, (len(H) - 1) // 2 + 1):
        if H[i - 1] * H[i + 1] > H[i] * H[i]:
            return True
    return False


@dataclass(frozen=True)
class _Task:
    codim: int
    socle: int
    prefix: tuple[int, ...]
    max_nodes: int


def _run_task(task: _Task) -> tuple[int, int, int, list[tuple[HilbertSeq, list[int]]]]:
    counter = _Counter(task.max_nodes)
    found = []
    for H in _subtree(task.codim, task.socle, task.prefix, counter):
        if _violated_half(H):
            found.append((H, log_concavity_report(H).violations))
    return task.socle, counter.emitted, counter.nodes, found


def _split_tasks(codim: int, socle_cap: int, max_nodes: int, depth: int) -> list[_Task]:
    tasks = []
    for socle in range(1, socle_cap + 1):
        if socle == 1 and codim != 1:
            continue
        root = _delta_root(codim, socle)
        size = socle // 2 + 1
        cut = min(size, len(root) + depth)
        counter = _Counter(max_nodes)
        for prefix in _extend(list(root), cut, counter):
            tasks.append(_Task(codim, socle, tuple(prefix), max_nodes))
    return tasks


def verify_logconcavity_class(
    codim: int,
    socle_cap: int,
    jobs: int = 1,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> VerificationReport:
    """Check log-concavity of every SI sequence with ``h_1 = codim`` and
    socle degree at most ``socle_cap``.

    The report does not depend on ``jobs``; violators are sorted by
    (socle degree, sequence).
    """
    if codim < 1 or socle_cap < 1:
        raise ValueError(f"codim and socle_cap must be >= 1, got {codim}, {socle_cap}")
    start = time.perf_counter()
    report = VerificationReport(codim, socle_cap)
    report.counts_by_socle = {j: 0 for j in range(1, socle_cap + 1) if codim == 1 or j >= 2}

    if jobs <= 1:
        tasks = _split_tasks(codim, socle_cap, max_nodes, depth=0)
        results = map(_run_task, tasks)
        total_nodes = _collect(report, results, max_nodes)
    else:
        tasks = _split_tasks(codim, socle_cap, max_nodes, depth=2)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (8 * jobs)))
            total_nodes = _collect(report, results, max_nodes)

    report.violations_found.sort(key=lambda item: (len(item[0]), item[0]))
    report.elapsed = time.perf_counter() - start
    log.info(
        "codim %d socle<=%d: %d sequences, %d nodes, %d violators in %.2fs",
        codim, socle_cap, report.sequences_checked, total_nodes,
        len(report.violations_found), report.elapsed,
    )
    return report


def _collect(report: VerificationReport, results, max_nodes: int) -> int:
    total_nodes = 0
    try:
        for socle, emitted, nodes, found in results:
            report.counts_by_socle[socle] += emitted
            report.sequences_checked += emitted
            report.violations_found.extend(found)
            total_nodes += nodes
            if total_nodes > max_nodes:
                raise EnumerationAbandoned(max_nodes, report.sequences_checked)
    except EnumerationAbandoned as exc:
        raise EnumerationAbandoned(max_nodes, report.sequences_checked) from exc
    return total_nodes
