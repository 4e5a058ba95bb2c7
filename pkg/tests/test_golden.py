"""Golden files for generator output. Regenerate with ``pytest --update-golden``."""

import json

from hilbertseq.family import build_extended, lengthen_with_tail, build, scan_csv, scan_params
from hilbertseq.gorenstein import enumerate_si_sequences
from hilbertseq.seqcore import format_sequence, is_symmetric, log_concavity_report, sum_function
from hilbertseq.gorenstein import is_si_sequence

from oracles import all_symmetric_candidates, oracle_is_si

# codimension-five examples: a log-concave family and two non-log-concave ones
CODIM5 = {
    "delta_1_4_10_20_5_6_j10": (1, 5, 15, 35, 40, 46, 40, 35, 15, 5, 1),
    "delta_1_4_10_20_5_6_7_j12": (1, 5, 15, 35, 40, 46, 53, 46, 40, 35, 15, 5, 1),
    "delta_1_4_10_20_35_6_j18": (
        1, 5, 15, 35, 70, 76, 83, 91, 100, 110, 100, 91, 83, 76, 70, 35, 15, 5, 1,
    ),
    "delta_1_4_10_20_35_6_j20": (
        1, 5, 15, 35, 70, 76, 83, 91, 100, 110, 121, 110, 100, 91, 83, 76, 70, 35, 15, 5, 1,
    ),
}


def _codim5_log_concave_family(j):
    # Delta_k = C(k+2, k) + C(k, k-1) + C(k-2, k-2) for 3 <= k <= j/2
    half = [1, 4, 10] + [(k + 2) * (k + 1) // 2 + k + 1 for k in range(3, j // 2 + 1)]
    H = sum_function(half)
    return tuple(H[min(i, j - i)] for i in range(j + 1))


def test_si_enumeration_golden(golden):
    lines = []
    for codim in (2, 3):
        for socle in range(1, 9):
            seqs = list(enumerate_si_sequences(codim, socle))
            slow = sorted(H for H in all_symmetric_candidates(codim, socle) if oracle_is_si(H))
            assert sorted(seqs) == slow
            for H in seqs:
                lines.append(f"{codim} {socle} {format_sequence(H)}")
    golden("si_codim2_3_socle_le8.txt", "\n".join(lines) + "\n")


def test_codim5_golden(golden):
    out = {}
    for name, H in CODIM5.items():
        assert is_si_sequence(H)
        r = log_concavity_report(H)
        out[name] = {
            "sequence": list(H),
            "violations": r.violations,
            "equalities": r.equalities,
        }
    for j in (6, 8, 10, 12, 14):
        H = _codim5_log_concave_family(j)
        assert is_si_sequence(H) and is_symmetric(H)
        r = log_concavity_report(H)
        assert r.is_log_concave
        out[f"log_concave_family_j{j}"] = {
            "sequence": list(H), "violations": r.violations, "equalities": r.equalities,
        }
    golden("codim5_examples.json", json.dumps(out, indent=1) + "\n")


def test_family_golden(golden):
    lines = [
        "base 1 5 7: " + format_sequence(build(1, 5, 7)),
        "base 2 10 23: " + format_sequence(build(2, 10, 23)),
        "extended 1 8 10 4: " + format_sequence(build_extended(1, 8, 10, 4)),
        "extended 1 8 10 5: " + format_sequence(build_extended(1, 8, 10, 5)),
        "lengthen 2 10 23 +16,17,8,7: "
        + format_sequence(lengthen_with_tail(build(2, 10, 23), (16, 17, 8, 7))),
    ]
    golden("family_sequences.txt", "\n".join(lines) + "\n")


def test_scan_golden(golden):
    golden("scan_delta1-3_k1-14.csv", scan_csv(scan_params(range(1, 4), range(1, 15))))
