"""Partitions, profiles and cylindric partitions.

A cylindric partition with profile ``c = (c_1, ..., c_k)`` is a tuple of k
ordinary partitions ``(lam1, ..., lamk)`` such that for every j

    lam_i[j] >= lam_{i+1}[j + c_{i+1}]     (1 <= i < k)
    lam_k[j] >= lam_1[j + c_1]            (wrap-around)

where out-of-range entries read as 0.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]

FILTERS = ("none", "distinct", "odd")


class CylindricError(ValueError):
    """Base class for rejected cylindric partition input."""


class WrongRowCount(CylindricError):
    pass


class NegativePart(CylindricError):
    pass


class RowNotWeaklyDecreasing(CylindricError):
    def __init__(self, row: int, j: int):
        self.row, self.j = row, j
        super().__init__(f"row {row} increases at position {j}")


class CyclicInequalityViolated(CylindricError):
    """Raised with 1-based (i, j); i == k denotes the wrap-around inequality."""

    def __init__(self, i: int, j: int, left: int, right: int, nxt: int, shift: int):
        self.i, self.j = i, j
        self.left, self.right = left, right
        super().__init__(
            f"lambda^({i})_{j} = {left} < lambda^({nxt})_{j + shift} = {right}"
        )


def part(p: Sequence[int], j: int) -> int:
    """1-based entry of a partition, 0 past its end."""
    return p[j - 1] if 1 <= j <= len(p) else 0


def strip_zeros(parts: Iterable[int]) -> Partition:
    out = list(parts)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate a weakly decreasing list of nonnegative integers and drop zeros."""
    p = tuple(int(x) for x in parts)
    for j, x in enumerate(p, start=1):
        if x < 0:
            raise NegativePart(f"negative part {x} at position {j}")
        if j > 1 and x > p[j - 2]:
            raise RowNotWeaklyDecreasing(0, j)
    return strip_zeros(p)


@dataclass(frozen=True, order=True)
class Profile:
    c: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))
        if not self.c:
            raise ValueError("profile needs at least one entry")
        if any(x < 0 for x in self.c):
            raise ValueError(f"profile entries must be nonnegative: {self.c}")

    @classmethod
    def parse(cls, text: str) -> Profile:
        try:
            return cls(tuple(int(x) for x in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad profile {text!r}: {exc}") from None

    @property
    def k(self) -> int:
        return len(self.c)

    @property
    def ell(self) -> int:
        return sum(self.c)

    @property
    def t(self) -> int:
        return self.k + self.ell

    def shift(self, i: int) -> int:
        """1-based c_i."""
        return self.c[i - 1]

    def __str__(self) -> str:
        return ",".join(map(str, self.c))


@dataclass(frozen=True, order=True)
class CylindricPartition:
    profile: Profile
    rows: tuple[Partition, ...]

    @property
    def weight(self) -> int:
        return sum(sum(r) for r in self.rows)

    @property
    def max_part(self) -> int:
        return max((r[0] for r in self.rows if r), default=0)

    def parts(self) -> list[int]:
        return [x for r in self.rows for x in r]

    def to_json(self) -> dict:
        return {"profile": list(self.profile.c), "rows": [list(r) for r in self.rows]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj: dict, profile: Profile | None = None) -> CylindricPartition:
        prof = Profile(tuple(obj["profile"])) if "profile" in obj else profile
        if prof is None:
            raise CylindricError("no profile given")
        return validate_cylindric(obj["rows"], prof)


def weight(lam: CylindricPartition) -> int:
    return lam.weight


def max_part(lam: CylindricPartition) -> int:
    return lam.max_part


def _dominates(upper: Sequence[int], lower: Sequence[int], shift: int) -> int:
    """First 1-based j with upper[j] < lower[j + shift], or 0 if none."""
    for j in range(1, len(lower) - shift + 1):
        if part(upper, j) < lower[j + shift - 1]:
            return j
    return 0


def first_violation(rows: Sequence[Sequence[int]], profile: Profile) -> tuple[int, int] | None:
    """(i, j) of the first violated cyclic inequality, scanning i = 1..k."""
    k = profile.k
    for i in range(1, k + 1):
        nxt = i % k + 1
        j = _dominates(rows[i - 1], rows[nxt - 1], profile.shift(nxt))
        if j:
            return i, j
    return None


def validate_cylindric(rows: Sequence[Sequence[int]], profile: Profile) -> CylindricPartition:
    """Return the canonical cylindric partition or raise a ``CylindricError``.

    Trailing zeros in the input are accepted and stripped.
    """
    if len(rows) != profile.k:
        raise WrongRowCount(f"expected {profile.k} rows, got {len(rows)}")
    canon = []
    for i, row in enumerate(rows, start=1):
        try:
            canon.append(make_partition(row))
        except RowNotWeaklyDecreasing as exc:
            raise RowNotWeaklyDecreasing(i, exc.j) from None
    bad = first_violation(canon, profile)
    if bad is not None:
        i, j = bad
        nxt = i % profile.k + 1
        s = profile.shift(nxt)
        raise CyclicInequalityViolated(
            i, j, part(canon[i - 1], j), part(canon[nxt - 1], j + s), nxt, s
        )
    return CylindricPartition(profile, tuple(canon))


def is_cylindric(rows: Sequence[Sequence[int]], profile: Profile) -> bool:
    try:
        validate_cylindric(rows, profile)
    except CylindricError:
        return False
    return True


# ---------------------------------------------------------------------------
# ordinary partitions


def iter_partitions(
    n: int, max_part: int | None = None, distinct: bool = False, parity: int | None = None
) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order.

    ``parity`` restricts every part to ``part % 2 == parity``.
    """
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        if parity is not None and first % 2 != parity:
            continue
        nxt = first - 1 if distinct else first
        for rest in iter_partitions(n - first, nxt, distinct, parity):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _row_pool(n: int, kind: str) -> tuple[Partition, ...]:
    if kind == "distinct":
        return tuple(iter_partitions(n, distinct=True))
    if kind == "odd":
        return tuple(iter_partitions(n, parity=1))
    return tuple(iter_partitions(n))


def _compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def _check_filter(filter: str) -> None:
    if filter not in FILTERS:
        raise ValueError(f"unknown filter {filter!r}; expected one of {FILTERS}")


def _search(profile: Profile, n: int, filter: str) -> Iterator[tuple[Partition, ...]]:
    k = profile.k
    for weights in _compositions(n, k):
        pools = [_row_pool(w, filter) for w in weights]
        rows: list[Partition] = []

        def extend(i: int) -> Iterator[tuple[Partition, ...]]:
            if i == k:
                if _dominates(rows[-1], rows[0], profile.shift(1)) == 0:
                    yield tuple(rows)
                return
            for cand in pools[i]:
                if i and _dominates(rows[-1], cand, profile.shift(i + 1)):
                    continue
                if filter == "distinct" and any(x in r for r in rows for x in cand):
                    continue
                rows.append(cand)
                yield from extend(i + 1)
                rows.pop()

        yield from extend(0)


def enumerate_cylindric(profile: Profile, n: int, filter: str = "none") -> list[CylindricPartition]:
    """All cylindric partitions of weight n, sorted lexicographically by rows.

    Brute force over k-tuples of partitions, pruned row by row on the
    adjacent inequality; used as the oracle for every series identity.
    """
    _check_filter(filter)
    if n < 0:
        raise ValueError("weight must be nonnegative")
    found = sorted(_search(profile, n, filter))
    return [CylindricPartition(profile, rows) for rows in found]


def count_sequence(profile: Profile, order: int, filter: str = "none") -> list[int]:
    _check_filter(filter)
    return [sum(1 for _ in _search(profile, n, filter)) for n in range(order + 1)]


@dataclass
class RefinedCounts:
    """Counts keyed by (largest part, weight) for weights up to ``max_weight``."""

    max_weight: int
    table: dict[tuple[int, int], int] = field(default_factory=dict)

    def count(self, m: int, n: int) -> int:
        return self.table.get((m, n), 0)

    def marginal(self) -> list[int]:
        out = [0] * (self.max_weight + 1)
        for (_, n), c in self.table.items():
            out[n] += c
        return out

    def to_json(self) -> list[dict]:
        return [{"m": m, "n": n, "count": c} for (m, n), c in sorted(self.table.items(), key=lambda kv: (kv[0][1], kv[0][0]))]


def refined_counts(profile: Profile, order: int, filter: str = "none") -> RefinedCounts:
    _check_filter(filter)
    rc = RefinedCounts(order)
    for n in range(order + 1):
        for rows in _search(profile, n, filter):
            m = max((r[0] for r in rows if r), default=0)
            rc.table[m, n] = rc.table.get((m, n), 0) + 1
    return rc
