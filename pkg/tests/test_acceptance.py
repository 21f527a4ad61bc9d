"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion.

Run directly (``python tests/test_acceptance.py``) for just the summary
lines, or through pytest where the same lines appear in the output.
"""
from __future__ import annotations

import sys
from functools import cache
from pathlib import Path

import pytest

from cylpart import bijection as bj
from cylpart import identities as ids
from cylpart.partitions import validate_cylindric

DOCS_TABLE = Path(__file__).resolve().parent.parent / "docs" / "odd_parts_comparison.md"


@pytest.fixture
def emit(capsys):
    def _emit(number: int, title: str, ok: bool, detail: str = "") -> None:
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}" + (f" ({detail})" if detail else "")
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
    return _emit


def failing(reports) -> list[str]:
    return [f"{r.identity} first_diff={r.first_diff} values={r.values}" for r in reports if not r.passed]


def summary(reports) -> str:
    return ", ".join(f"{r.identity}@{r.order}" for r in reports)


@cache
def roundtrips():
    return {r.identity: r for r in ids.check_roundtrips(20)}


def criterion_1():
    lam = validate_cylindric([(7, 4, 4, 3), (6, 5, 4)], bj.P11)
    pair, _ = bj.forward_11(lam)
    ok = pair.mu == (5, 5, 4, 3, 3, 3, 2) and pair.beta == (7, 1)
    return ok, f"mu={pair.mu} beta={pair.beta}"


def criterion_2():
    lam = bj.inverse_11(bj.PartitionPair((6, 5, 5, 3, 1), (9, 7, 3)))
    ok = lam.rows == ((8, 8, 2, 2, 1), (9, 5, 3, 1))
    return ok, f"rows={lam.rows}"


def criterion_3():
    reports = [roundtrips()["roundtrip-11"], roundtrips()["roundtrip-20"]]
    bad = failing(reports)
    return not bad, "; ".join(bad) or "both directions, all weights <= 20"


def criterion_4():
    reports = ids.check_borodin_closed(200) + ids.check_borodin_enumeration(25, 15) + ids.check_closed_enumeration(25)
    spot = ids.borodin_series(ids.P11, 4).coeffs
    bad = failing(reports)
    if spot != [1, 2, 3, 6, 10]:
        bad.append(f"spot values {spot}")
    return not bad, "; ".join(bad) or summary(reports)


def criterion_5():
    report = ids.check_euler_q2(500)
    return report.passed, summary([report]) if report.passed else failing([report])[0]


def criterion_6():
    reports = [ids.check_f11_bivariate(18), ids.check_bijection_statistic(18)]
    bad = failing(reports)
    return not bad, "; ".join(bad) or summary(reports)


def criterion_7():
    reports = ids.check_distinct(22) + ids.check_distinct_bivariate(16)
    bad = failing(reports)
    return not bad, "; ".join(bad) or summary(reports)


def criterion_8():
    # any inexact division by 2 or sqrt2 raises instead of returning a report
    reports = ids.check_sqrt2_products(200)
    names = {r.identity for r in reports}
    bad = failing(reports)
    if not {"thm33-d11", "thm33-d20", "thm33-sum", "thm33-dissection"} <= names:
        bad.append(f"missing reports: {sorted(names)}")
    return not bad, "; ".join(bad) or summary(reports)


def criterion_9():
    reports = [ids.check_odd_forms(200), roundtrips()["roundtrip-odd"]]
    bad = failing(reports)
    return not bad, "; ".join(bad) or "two forms to 200; doubled-odd round trip to 20, all outputs odd"


def criterion_10():
    table = ids.odd_vs_enumeration(25)
    markdown = table.to_markdown()
    committed = DOCS_TABLE.read_text(encoding="utf-8") if DOCS_TABLE.exists() else ""
    ok = markdown in committed
    detail = f"first differing weight {table.first_difference}; exploratory, documented in docs/"
    if not ok:
        detail = "docs table missing or stale; regenerate with `cylpart odd-table --format markdown`"
    return ok, detail


def criterion_11():
    factors = ids.borodin_factors(ids.P11)
    mutated = [factors[0] + 1] + factors[1:]
    reports = ids.check_borodin_enumeration(12, 6, factors={ids.P11: mutated})
    mutated_report = next(r for r in reports if r.identity == "borodin-enum-1,1")
    caught = mutated_report.first_diff is not None and not mutated_report.passed
    try:
        bj.inverse_11(bj.PartitionPair((2, 1), (3, 3)))
        rejected = False
    except bj.BetaNotDistinctOdd:
        rejected = True
    detail = f"mutated exponent: first_diff={mutated_report.first_diff} values={mutated_report.values}; " \
             f"repeated beta part: {'BetaNotDistinctOdd' if rejected else 'accepted'}"
    return caught and rejected, detail


CRITERIA = [
    (1, "golden forward example", criterion_1),
    (2, "golden inverse example", criterion_2),
    (3, "round trips for both profiles to weight 20", criterion_3),
    (4, "product formula, closed forms and enumeration agree", criterion_4),
    (5, "1/(q^2;q^4) = (-q^2;q^2) to order 500", criterion_5),
    (6, "largest-part refinement to weight 18", criterion_6),
    (7, "distinct-part series against enumeration", criterion_7),
    (8, "Z[sqrt2] identities and the dissection route", criterion_8),
    (9, "all-odd series forms and doubled round trip", criterion_9),
    (10, "all-odd series against naive enumeration (exploratory)", criterion_10),
    (11, "negative controls", criterion_11),
]


@pytest.mark.parametrize("number,title,fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn, emit):
    ok, detail = fn()
    emit(number, title, ok, detail)


if __name__ == "__main__":
    failures = 0
    for number, title, fn in CRITERIA:
        ok, detail = fn()
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({detail})")
    sys.exit(1 if failures else 0)
