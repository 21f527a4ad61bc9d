"""Generating functions for small-profile cylindric partitions and their checks.

Every builder returns a ``TruncatedSeries``; every ``check_*`` function
returns a ``VerificationReport`` comparing two independently built series,
or a series against brute-force enumeration.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from math import comb
from typing import Any, Callable, Sequence

from . import bijection as bj
from .partitions import Profile, count_sequence, enumerate_cylindric, refined_counts
from .qseries import (
    INTEGERS,
    SQRT2,
    ZSQRT2,
    FactorSpec,
    QuadElem,
    TrackedRing,
    TruncatedSeries,
    euler_sum,
    poch_finite,
    poch_finite_inverse,
    poch_infinite,
    poch_infinite_inverse,
)

P11 = Profile((1, 1))
P20 = Profile((2, 0))
P120 = Profile((1, 2, 0))
P21 = Profile((2, 1))

DEFAULT_ORDER = 200
# brute-force enumeration caps
ENUM_ORDER_2ROW = 25
ENUM_ORDER_3ROW = 15
ENUM_ORDER_REFINED = 18
ENUM_ORDER_DISTINCT = 22
ENUM_ORDER_DISTINCT_REFINED = 16
ROUNDTRIP_WEIGHT = 20


@dataclass
class VerificationReport:
    identity: str
    order: int
    passed: bool
    first_diff: int | None = None
    values: tuple[Any, Any] | None = None
    ms: float = 0.0
    note: str = ""

    def to_json(self) -> dict:
        out = {"identity": self.identity, "order": self.order, "pass": self.passed,
               "first_diff": self.first_diff, "ms": round(self.ms, 3)}
        if self.values is not None:
            out["values"] = [str(v) for v in self.values]
        if self.note:
            out["note"] = self.note
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


class IndexOutOfRange(IndexError):
    pass


def compare(name: str, lhs: Sequence, rhs: Sequence, order: int, started: float | None = None,
            note: str = "") -> VerificationReport:
    """Coefficientwise comparison of two sequences up to ``order``."""
    lhs = list(lhs)[: order + 1]
    rhs = list(rhs)[: order + 1]
    diff = None
    for n in range(order + 1):
        x = lhs[n] if n < len(lhs) else None
        y = rhs[n] if n < len(rhs) else None
        if x != y:
            diff = n
            break
    ms = (time.perf_counter() - started) * 1000 if started is not None else 0.0
    values = None if diff is None else (lhs[diff] if diff < len(lhs) else None,
                                        rhs[diff] if diff < len(rhs) else None)
    return VerificationReport(name, order, diff is None, diff, values, ms, note)


# ---------------------------------------------------------------------------
# Borodin's product


def s_range(c: Profile, i: int, j: int) -> int:
    """c_i + ... + c_j (1-based), zero for an empty range."""
    if j < i:
        return 0
    if not (1 <= i <= c.k and 1 <= j <= c.k):
        raise IndexOutOfRange(f"s({i},{j}) outside 1..{c.k}")
    return sum(c.c[i - 1 : j])


def borodin_factors(c: Profile) -> list[int]:
    """Exponents e of the denominator factors (q^e; q^t)_oo, with multiplicity."""
    k, t = c.k, c.t
    exps = [t]
    for i in range(1, k + 1):
        for j in range(i, k + 1):
            for m in range(1, c.shift(i) + 1):
                exps.append(m + j - i + s_range(c, i + 1, j))
    for i in range(2, k + 1):
        for j in range(2, i + 1):
            for m in range(1, c.shift(i) + 1):
                exps.append(t - m + j - i - s_range(c, j, i - 1))
    return exps


def borodin_series(c: Profile, order: int, factors: Sequence[int] | None = None) -> TruncatedSeries:
    """F_c(1, q) as the product of 1/(q^e; q^t)_oo over ``borodin_factors``."""
    t = c.t
    out = TruncatedSeries.one(order)
    for e in borodin_factors(c) if factors is None else factors:
        if e <= 0:
            raise ValueError(f"nonpositive Borodin exponent {e} for profile {c}")
        out = _div_poch(out, e, t)
    return out


def _div_poch(f: TruncatedSeries, e: int, step: int) -> TruncatedSeries:
    for d in range(e, f.order + 1, step):
        f = f.div_binomial(f.ring.one, d)
    return f


# ---------------------------------------------------------------------------
# profile (1,1) and (2,0), unrestricted parts


def f11_closed(order: int) -> TruncatedSeries:
    """(-q; q^2)_oo / (q; q)_oo"""
    num = poch_infinite(FactorSpec(-1, 1, 0, 2), order)
    return num * poch_infinite(FactorSpec(1, 1), order).invert()


def f20_closed(order: int) -> TruncatedSeries:
    """(-q^2; q^2)_oo / (q; q)_oo"""
    num = poch_infinite(FactorSpec(-1, 2, 0, 2), order)
    return num * poch_infinite(FactorSpec(1, 1), order).invert()


def f11_bivariate(order: int) -> TruncatedSeries:
    """(-zq; q^2)_oo / (zq; q)_oo, z marking the largest part."""
    ring = TrackedRing("z")
    num = poch_infinite(FactorSpec(-1, 1, 1, 2), order, ring)
    return num * poch_infinite_inverse(FactorSpec(1, 1, 1, 1), order, ring)


def euler_q2_sides(order: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """1/(q^2; q^4)_oo and (-q^2; q^2)_oo."""
    lhs = poch_infinite(FactorSpec(1, 2, 0, 4), order).invert()
    rhs = poch_infinite(FactorSpec(-1, 2, 0, 2), order)
    return lhs, rhs


# ---------------------------------------------------------------------------
# distinct parts


def _distinct_sum(order: int, odd_rows: bool, ring) -> TruncatedSeries:
    """sum_n q^C(m,2) t^(m-1) 2^n / (tq; q)_m with m = 2n (or 2n+1 when odd_rows).

    For m = 2n the n = 0 summand would carry t^-1; it is replaced by 1.
    """
    tracked = isinstance(ring, TrackedRing)
    out = TruncatedSeries.zero(order, ring)
    n = 0
    while True:
        m = 2 * n + 1 if odd_rows else 2 * n
        lead = comb(m, 2)
        if lead > order:
            break
        if m == 0:
            out = out + TruncatedSeries.one(order, ring)
        else:
            denom = poch_finite_inverse(FactorSpec(1, 1, 1 if tracked else 0, 1), m, order, ring)
            coeff = ring.monomial(2**n, m - 1) if tracked else 2**n
            out = out + denom.shift(lead).scale(coeff)
        n += 1
    return out


def d11_series(order: int) -> TruncatedSeries:
    return _distinct_sum(order, False, INTEGERS)


def d20_series(order: int) -> TruncatedSeries:
    return _distinct_sum(order, True, INTEGERS)


def d11_bivariate(order: int) -> TruncatedSeries:
    return _distinct_sum(order, False, TrackedRing("t"))


def d20_bivariate(order: int) -> TruncatedSeries:
    return _distinct_sum(order, True, TrackedRing("t"))


def sqrt2_products(order: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """(-sqrt2; q)_oo and (sqrt2; q)_oo over Z[sqrt2]."""
    plus = poch_infinite(FactorSpec(-SQRT2, 0), order)
    minus = poch_infinite(FactorSpec(SQRT2, 0), order)
    return plus, minus


def _lift(f: TruncatedSeries) -> TruncatedSeries:
    return f.map(QuadElem.coerce, ZSQRT2)


def sqrt2_product_checks(order: int) -> list[VerificationReport]:
    started = time.perf_counter()
    plus, minus = sqrt2_products(order)
    d11 = _lift(d11_series(order))
    d20 = _lift(d20_series(order))
    even = (plus + minus).div_int(2)
    odd = (plus - minus).div_int(2).map(lambda x: x.div_sqrt2())
    return [
        compare("thm33-d11", d11, even, order, started),
        compare("thm33-d20", d20, odd, order, started),
        compare("thm33-sum", d11 + d20.scale(SQRT2), plus, order, started),
    ]


def check_dissection_route(order: int) -> VerificationReport:
    """Even half of Euler's sum at a = sqrt2 against the distinct-parts sum lifted to Z[sqrt2]."""
    started = time.perf_counter()
    via_euler = euler_sum(FactorSpec(SQRT2, 0), order, parity=0)
    return compare("thm33-dissection", via_euler, _lift(d11_series(order)), order, started)


# ---------------------------------------------------------------------------
# all parts odd


def odd_two_sum(order: int) -> TruncatedSeries:
    """sum_k q^2k/(q^2;q^2)_2k (-q^2;q^4)_k + sum_k q^(2k+1)/(q^2;q^2)_(2k+1) (-q^2;q^4)_(k+1)"""
    out = TruncatedSeries.zero(order)
    q2 = FactorSpec(1, 2, 0, 2)
    beta = FactorSpec(-1, 2, 0, 4)
    k = 0
    while 2 * k <= order:
        first = poch_finite_inverse(q2, 2 * k, order) * poch_finite(beta, k, order)
        out = out + first.shift(2 * k)
        if 2 * k + 1 <= order:
            second = poch_finite_inverse(q2, 2 * k + 1, order) * poch_finite(beta, k + 1, order)
            out = out + second.shift(2 * k + 1)
        k += 1
    return out


def odd_closed(order: int) -> TruncatedSeries:
    """sum_k q^2k (-q^2;q^4)_k (1 + q - q^(4k+2) + q^(4k+3)) / (q^2;q^2)_(2k+1)"""
    out = TruncatedSeries.zero(order)
    k = 0
    while 2 * k <= order:
        poly = TruncatedSeries.zero(order)
        for e, c in ((0, 1), (1, 1), (4 * k + 2, -1), (4 * k + 3, 1)):
            if e <= order:
                poly.coeffs[e] += c
        term = poly * poch_finite(FactorSpec(-1, 2, 0, 4), k, order)
        term = term * poch_finite(FactorSpec(1, 2, 0, 2), 2 * k + 1, order).invert()
        out = out + term.shift(2 * k)
        k += 1
    return out


@dataclass
class OddRow:
    n: int
    series: int
    enumeration: int
    image: int
    image_strict: int
    not_in_image: int

    @property
    def delta(self) -> int:
        return self.enumeration - self.series

    def to_json(self) -> dict:
        return {"n": self.n, "series": self.series, "enumeration": self.enumeration,
                "image": self.image, "image_strict": self.image_strict,
                "not_in_image": self.not_in_image, "delta": self.delta}


@dataclass
class OddComparison:
    rows: list[OddRow] = field(default_factory=list)

    @property
    def first_difference(self) -> int | None:
        return next((r.n for r in self.rows if r.delta), None)

    def to_markdown(self) -> str:
        lines = ["| n | series | all-odd enumeration | image of doubled inverse | image (strict reading) | not in image | enumeration - series |",
                 "|---|---|---|---|---|---|---|"]
        for r in self.rows:
            lines.append(f"| {r.n} | {r.series} | {r.enumeration} | {r.image} | {r.image_strict} | {r.not_in_image} | {r.delta} |")
        return "\n".join(lines)


def odd_vs_enumeration(order: int) -> OddComparison:
    """Per-weight comparison of the all-odd series with the naive all-odd class."""
    series = odd_two_sum(order)
    table = OddComparison()
    for n in range(order + 1):
        objs = enumerate_cylindric(P11, n, "odd")
        failures = 0
        for lam in objs:
            try:
                bj.forward_odd_11(lam, check=False)
            except bj.NotInImage:
                failures += 1
        image = sum(1 for _ in bj.iter_pairs(bj.DOUBLED_ODD, n))
        strict = sum(1 for _ in bj.iter_pairs(bj.DOUBLED_ODD, n, strict=True))
        table.rows.append(OddRow(n, series[n], len(objs), image, strict, failures))
    return table


# ---------------------------------------------------------------------------
# checks


def _tracked_table(f: TruncatedSeries) -> dict[tuple[int, int], int]:
    return {(m, n): c for n, p in enumerate(f.coeffs) for m, c in enumerate(p.c) if c}


def _refined_table(profile: Profile, order: int, filter: str) -> dict[tuple[int, int], int]:
    return {key: c for key, c in refined_counts(profile, order, filter).table.items() if c}


def _report_tables(name: str, series_tab: dict, enum_tab: dict, order: int, started: float) -> VerificationReport:
    keys = sorted(set(series_tab) | set(enum_tab), key=lambda mn: (mn[1], mn[0]))
    for key in keys:
        if series_tab.get(key, 0) != enum_tab.get(key, 0):
            return VerificationReport(name, order, False, key[1], (series_tab.get(key, 0), enum_tab.get(key, 0)),
                                      (time.perf_counter() - started) * 1000, f"(m, n) = {key}")
    return VerificationReport(name, order, True, ms=(time.perf_counter() - started) * 1000)


def check_borodin_closed(order: int = DEFAULT_ORDER) -> list[VerificationReport]:
    t0 = time.perf_counter()
    r1 = compare("borodin-f11", borodin_series(P11, order), f11_closed(order), order, t0)
    t0 = time.perf_counter()
    r2 = compare("borodin-f20", borodin_series(P20, order), f20_closed(order), order, t0)
    t0 = time.perf_counter()
    alt = poch_infinite(FactorSpec(1, 1), order) * poch_infinite(FactorSpec(1, 2, 0, 4), order)
    r3 = compare("borodin-f20-display", borodin_series(P20, order), alt.invert(), order, t0)
    return [r1, r2, r3]


def check_borodin_enumeration(order: int = ENUM_ORDER_2ROW, order3: int = ENUM_ORDER_3ROW,
                              factors: dict[Profile, Sequence[int]] | None = None) -> list[VerificationReport]:
    out = []
    for prof, n in ((P11, order), (P20, order), (P120, order3), (P21, order3)):
        t0 = time.perf_counter()
        fac = (factors or {}).get(prof)
        out.append(compare(f"borodin-enum-{prof}", borodin_series(prof, n, fac),
                           count_sequence(prof, n), n, t0))
    return out


def check_closed_enumeration(order: int = ENUM_ORDER_2ROW) -> list[VerificationReport]:
    t0 = time.perf_counter()
    r1 = compare("f11-enum", f11_closed(order), count_sequence(P11, order), order, t0)
    t0 = time.perf_counter()
    r2 = compare("f20-enum", f20_closed(order), count_sequence(P20, order), order, t0)
    return [r1, r2]


def check_euler_q2(order: int = 500) -> VerificationReport:
    t0 = time.perf_counter()
    lhs, rhs = euler_q2_sides(order)
    return compare("eq23", lhs, rhs, order, t0)


def check_f11_bivariate(order: int = ENUM_ORDER_REFINED) -> VerificationReport:
    t0 = time.perf_counter()
    return _report_tables("f11z-refined", _tracked_table(f11_bivariate(order)),
                          _refined_table(P11, order, "none"), order, t0)


def check_bijection_statistic(order: int = ENUM_ORDER_REFINED) -> VerificationReport:
    """max part of inverse_11(mu, beta) equals max(mu) + len(beta) for every pair."""
    t0 = time.perf_counter()
    for n in range(order + 1):
        for pair in bj.iter_pairs(bj.DISTINCT_ODD, n):
            lam = bj.inverse_11(pair, check=False)
            if lam.max_part != bj.largest_part_statistic(pair):
                return VerificationReport("f11z-statistic", order, False, n,
                                          (lam.max_part, bj.largest_part_statistic(pair)),
                                          (time.perf_counter() - t0) * 1000, str(pair.to_json()))
    return VerificationReport("f11z-statistic", order, True, ms=(time.perf_counter() - t0) * 1000)


def check_distinct(order: int = ENUM_ORDER_DISTINCT) -> list[VerificationReport]:
    t0 = time.perf_counter()
    r1 = compare("d11-enum", d11_series(order), count_sequence(P11, order, "distinct"), order, t0)
    t0 = time.perf_counter()
    r2 = compare("d20-enum", d20_series(order), count_sequence(P20, order, "distinct"), order, t0)
    return [r1, r2]


def check_distinct_bivariate(order: int = ENUM_ORDER_DISTINCT_REFINED) -> list[VerificationReport]:
    out = []
    for name, build, prof in (("d11t-refined", d11_bivariate, P11), ("d20t-refined", d20_bivariate, P20)):
        t0 = time.perf_counter()
        out.append(_report_tables(name, _tracked_table(build(order)), _refined_table(prof, order, "distinct"),
                                  order, t0))
    for name, build, flat in (("d11t-at-1", d11_bivariate, d11_series), ("d20t-at-1", d20_bivariate, d20_series)):
        t0 = time.perf_counter()
        out.append(compare(name, build(order).at_one(), flat(order), order, t0))
    return out


def check_sqrt2_products(order: int = DEFAULT_ORDER) -> list[VerificationReport]:
    return sqrt2_product_checks(order) + [check_dissection_route(order)]


def check_odd_forms(order: int = DEFAULT_ORDER) -> VerificationReport:
    t0 = time.perf_counter()
    return compare("oc-forms", odd_two_sum(order), odd_closed(order), order, t0)


def check_odd_pairs(order: int = ROUNDTRIP_WEIGHT) -> VerificationReport:
    """Doubled-odd pairs of each weight are counted by the all-odd series."""
    t0 = time.perf_counter()
    counts = [sum(1 for _ in bj.iter_pairs(bj.DOUBLED_ODD, n)) for n in range(order + 1)]
    return compare("oc-pairs", odd_two_sum(order), counts, order, t0)


def check_roundtrips(weight: int = ROUNDTRIP_WEIGHT) -> list[VerificationReport]:
    out = []
    for name, prof, fwd, inv, flavor in (
        ("roundtrip-11", P11, bj.forward_11, bj.inverse_11, bj.DISTINCT_ODD),
        ("roundtrip-20", P20, bj.forward_20, bj.inverse_20, bj.DISTINCT_EVEN),
    ):
        t0 = time.perf_counter()
        bad = None
        for n in range(weight + 1):
            for lam in enumerate_cylindric(prof, n):
                pair, _ = fwd(lam)
                if pair.weight != n or inv(pair) != lam:
                    bad = n
                    break
            for pair in bj.iter_pairs(flavor, n):
                if fwd(inv(pair))[0] != pair:
                    bad = n
                    break
            if bad is not None:
                break
        out.append(VerificationReport(name, weight, bad is None, bad, ms=(time.perf_counter() - t0) * 1000))
    t0 = time.perf_counter()
    bad = None
    for n in range(weight + 1):
        for pair in bj.iter_pairs(bj.DOUBLED_ODD, n):
            lam = bj.inverse_odd_11(pair)
            odd = all(x % 2 for x in lam.parts())
            if not odd or lam.weight != n or bj.forward_odd_11(lam)[0] != pair:
                bad = n
                break
        if bad is not None:
            break
    out.append(VerificationReport("roundtrip-odd", weight, bad is None, bad, ms=(time.perf_counter() - t0) * 1000))
    return out


# name -> (runner, default order, kind); kind "series" checks take the
# user's order, "enum" checks never go beyond their default
CHECKS: dict[str, tuple[Callable, int, str]] = {
    "borodin": (check_borodin_closed, DEFAULT_ORDER, "series"),
    "borodin-enum": (check_borodin_enumeration, ENUM_ORDER_2ROW, "enum"),
    "closed-enum": (check_closed_enumeration, ENUM_ORDER_2ROW, "enum"),
    "eq23": (check_euler_q2, 500, "series"),
    "f11z": (check_f11_bivariate, ENUM_ORDER_REFINED, "enum"),
    "f11z-statistic": (check_bijection_statistic, ENUM_ORDER_REFINED, "enum"),
    "distinct": (check_distinct, ENUM_ORDER_DISTINCT, "enum"),
    "distinct-refined": (check_distinct_bivariate, ENUM_ORDER_DISTINCT_REFINED, "enum"),
    "thm33": (check_sqrt2_products, DEFAULT_ORDER, "series"),
    "oc-forms": (check_odd_forms, DEFAULT_ORDER, "series"),
    "oc-pairs": (check_odd_pairs, ROUNDTRIP_WEIGHT, "enum"),
    "roundtrip": (check_roundtrips, ROUNDTRIP_WEIGHT, "enum"),
}


def verify_all(orders: dict[str, int] | None = None, names: Sequence[str] | None = None,
               order: int | None = None) -> list[VerificationReport]:
    """Run the named checks (all by default).

    ``orders`` maps check names to orders; ``order`` overrides series checks
    and caps enumeration checks at their defaults.
    """
    reports: list[VerificationReport] = []
    for name in names or CHECKS:
        fn, default, kind = CHECKS[name]
        n = (orders or {}).get(name, default)
        if order is not None:
            n = order if kind == "series" else min(order, default)
        result = fn(n)
        reports.extend(result if isinstance(result, list) else [result])
    return reports
