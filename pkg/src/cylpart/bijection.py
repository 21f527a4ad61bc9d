"""Move-based correspondences between two-row cylindric partitions and pairs.

Profile (1,1):  Lambda <-> (mu, beta), mu unrestricted, beta distinct odd.
Profile (2,0):  Lambda <-> (mu, beta), mu unrestricted, beta distinct even.
Doubled-odd:    all-odd profile-(1,1) Lambda <-> (mu odd, beta distinct odd),
                with every move shifting parts by 2 and beta weighted twice.

Both rows are read as pairs [b_j, a_j] with a the first row and b the
second.  For profile (2,0) the first row carries an extra unpaired leading
part a_0.  A forward move at pair j (when a_j > b_j) swaps a_j and b_j and
then takes ``amount`` from every part above and to the left of the new
bottom entry; the backward move undoes it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .partitions import (
    CylindricPartition,
    Partition,
    Profile,
    iter_partitions,
    strip_zeros,
    validate_cylindric,
)

P11 = Profile((1, 1))
P20 = Profile((2, 0))

DISTINCT_ODD = "distinct-odd"
DISTINCT_EVEN = "distinct-even"
DOUBLED_ODD = "doubled-odd"
FLAVORS = (DISTINCT_ODD, DISTINCT_EVEN, DOUBLED_ODD)


class BijectionError(ValueError):
    pass


class BetaNotDistinctOdd(BijectionError):
    pass


class BetaNotDistinctEven(BijectionError):
    pass


class MuNotOdd(BijectionError):
    pass


class DependencyViolated(BijectionError):
    pass


class NotInImage(BijectionError):
    """The doubled move would push a part below zero."""


class RowLengthGap(BijectionError):
    pass


class InvariantBroken(AssertionError):
    """An intermediate state failed a check that the construction guarantees."""


@dataclass(frozen=True)
class PartitionPair:
    mu: Partition
    beta: Partition
    flavor: str = DISTINCT_ODD

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")
        object.__setattr__(self, "mu", tuple(self.mu))
        object.__setattr__(self, "beta", tuple(self.beta))

    @property
    def weight(self) -> int:
        factor = 2 if self.flavor == DOUBLED_ODD else 1
        return sum(self.mu) + factor * sum(self.beta)

    def validate(self, strict: bool = False) -> None:
        if any(x <= 0 for x in self.mu) or list(self.mu) != sorted(self.mu, reverse=True):
            raise BijectionError(f"mu is not a partition: {self.mu}")
        if any(x <= 0 for x in self.beta) or list(self.beta) != sorted(self.beta, reverse=True):
            raise BijectionError(f"beta is not a partition: {self.beta}")
        distinct = len(set(self.beta)) == len(self.beta)
        if self.flavor == DISTINCT_EVEN:
            if not distinct or any(x % 2 for x in self.beta):
                raise BetaNotDistinctEven(f"beta must have distinct even parts: {self.beta}")
            return
        if not distinct or any(x % 2 == 0 for x in self.beta):
            raise BetaNotDistinctOdd(f"beta must have distinct odd parts: {self.beta}")
        if self.flavor == DOUBLED_ODD:
            if any(x % 2 == 0 for x in self.mu):
                raise MuNotOdd(f"mu must have odd parts: {self.mu}")
            if not dependency_holds(self.mu, self.beta, strict):
                raise DependencyViolated(
                    f"len(mu) = {len(self.mu)} does not allow largest beta part {max(self.beta, default=0)}"
                )

    def to_json(self) -> dict:
        return {"mu": list(self.mu), "beta": list(self.beta), "flavor": self.flavor}

    @classmethod
    def from_json(cls, obj: dict, flavor: str | None = None) -> PartitionPair:
        return cls(tuple(obj.get("mu", ())), tuple(obj.get("beta", ())), obj.get("flavor", flavor or DISTINCT_ODD))


def dependency_holds(mu: Partition, beta: Partition, strict: bool = False) -> bool:
    """Link between the number of parts of mu and the largest part of beta.

    len(mu) = 2k   -> largest beta part at most 2k - 1
    len(mu) = 2k+1 -> largest beta part at most 2k + 1
    With ``strict`` the largest part must equal the bound (beta empty when
    the bound is -1).
    """
    length = len(mu)
    bound = length - 1 if length % 2 == 0 else length
    if strict:
        return max(beta, default=-1) == bound
    return not beta or max(beta) <= bound


@dataclass(frozen=True)
class MoveStep:
    direction: str  # "forward" or "backward"
    j: int
    amount: int
    part: int
    touched: int

    def to_json(self) -> dict:
        return {"direction": self.direction, "j": self.j, "amount": self.amount,
                "part": self.part, "touched": self.touched}


@dataclass
class MoveTrace:
    steps: list[MoveStep] = field(default_factory=list)

    def __iter__(self):
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)

    def reversed(self) -> MoveTrace:
        """The same moves in the opposite direction and order."""
        flip = {"forward": "backward", "backward": "forward"}
        return MoveTrace([MoveStep(flip[s.direction], s.j, s.amount, s.part, s.touched)
                          for s in reversed(self.steps)])

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.steps]


# ---------------------------------------------------------------------------
# paired forms


@dataclass
class PairedForm11:
    """Rows a_1..a_r over b_1..b_r, zero padded to equal length."""

    a: list[int]
    b: list[int]

    @property
    def r(self) -> int:
        return len(self.a)

    def rows(self) -> tuple[list[int], list[int]]:
        return self.a, self.b


@dataclass
class PairedForm20:
    """Unpaired a_0 followed by pairs [b_j, a_j], j = 1..r."""

    a0: int
    a: list[int]
    b: list[int]

    @property
    def r(self) -> int:
        return len(self.a)

    def rows(self) -> tuple[list[int], list[int]]:
        return [self.a0] + self.a, self.b


def pad_11(lam: CylindricPartition) -> PairedForm11:
    if lam.profile != P11:
        raise ValueError(f"profile (1,1) expected, got {lam.profile}")
    top, bottom = lam.rows
    if abs(len(top) - len(bottom)) > 1:
        raise RowLengthGap(f"row lengths {len(top)} and {len(bottom)}")
    r = max(len(top), len(bottom))
    return PairedForm11(list(top) + [0] * (r - len(top)), list(bottom) + [0] * (r - len(bottom)))


def pad_20(lam: CylindricPartition) -> PairedForm20:
    if lam.profile != P20:
        raise ValueError(f"profile (2,0) expected, got {lam.profile}")
    top, bottom = lam.rows
    if not top:
        return PairedForm20(0, [], [])
    r = max(len(top) - 1, len(bottom))
    rest = list(top[1:])
    return PairedForm20(top[0], rest + [0] * (r - len(rest)), list(bottom) + [0] * (r - len(bottom)))


# ---------------------------------------------------------------------------
# the moves on raw rows
#
# ``top`` holds the first row and ``bottom`` the second; the pair j sits at
# top[j - 1 + lead] and bottom[j - 1] where lead is 1 when the first row has
# an unpaired a_0.


def _check_state(top: list[int], bottom: list[int], profile: Profile, ledger: int, beta_weight: int) -> None:
    if any(x < 0 for x in top) or any(x < 0 for x in bottom):
        raise InvariantBroken(f"negative entry in {top} / {bottom}")
    try:
        validate_cylindric([top, bottom], profile)
    except ValueError as exc:
        raise InvariantBroken(f"intermediate state {top} / {bottom} invalid: {exc}") from None
    if sum(top) + sum(bottom) + beta_weight != ledger:
        raise InvariantBroken("weight ledger drifted")


def _forward(top: list[int], bottom: list[int], lead: int, amount: int, profile: Profile,
             check: bool) -> tuple[list[int], MoveTrace]:
    ledger = sum(top) + sum(bottom)
    beta: list[int] = []
    trace = MoveTrace()
    for j in range(len(bottom), 0, -1):
        ai = j - 1 + lead
        if top[ai] <= bottom[j - 1]:
            continue
        top[ai], bottom[j - 1] = bottom[j - 1], top[ai]
        for i in range(ai):
            top[i] -= amount
        for i in range(j):
            bottom[i] -= amount
        if min(top[:ai], default=0) < 0 or min(bottom[:j]) < 0:
            raise NotInImage(f"move at pair {j} drives a part below zero")
        touched = ai + j
        part = touched if amount == 1 else 2 * j - 1
        beta.append(part)
        trace.steps.append(MoveStep("forward", j, amount, part, touched))
        if check:
            _check_state(top, bottom, profile, ledger, amount * sum(beta))
    return beta, trace


def _backward(top: list[int], bottom: list[int], lead: int, amount: int, beta: Partition,
              profile: Profile, check: bool, trace: MoveTrace | None) -> None:
    """Undo moves for the parts of beta, smallest first, growing rows as needed."""
    remaining = sorted(beta)
    ledger = sum(top) + sum(bottom) + amount * sum(beta)
    while remaining:
        part = remaining.pop(0)
        if amount == 1:
            j = (part - lead + 1) // 2
        else:
            j = (part + 1) // 2
        while len(bottom) < j:
            bottom.append(0)
            top.append(0)
        ai = j - 1 + lead
        for i in range(ai):
            top[i] += amount
        for i in range(j):
            bottom[i] += amount
        top[ai], bottom[j - 1] = bottom[j - 1], top[ai]
        if trace is not None:
            trace.steps.append(MoveStep("backward", j, amount, part, ai + j))
        if check:
            _check_state(top, bottom, profile, ledger, amount * sum(remaining))


def _mu_from(top: list[int], bottom: list[int], lead: int) -> Partition:
    seq = list(top[:lead])
    for j in range(len(bottom)):
        seq += [bottom[j], top[j + lead]]
    mu = strip_zeros(seq)
    if list(mu) != sorted(mu, reverse=True) or 0 in mu:
        raise InvariantBroken(f"relabelled sequence {seq} is not a partition")
    return mu


def _rows_from_mu(mu: Partition, lead: int) -> tuple[list[int], list[int]]:
    seq = list(mu)
    if lead:
        if not seq:
            return [], []
        head, seq = [seq[0]], seq[1:]
    else:
        head = []
    if len(seq) % 2:
        seq.append(0)
    bottom = seq[0::2]
    top = head + seq[1::2]
    return top, bottom


# ---------------------------------------------------------------------------
# public maps


def forward_11(lam: CylindricPartition, check: bool = True) -> tuple[PartitionPair, MoveTrace]:
    form = pad_11(lam)
    top, bottom = list(form.a), list(form.b)
    beta, trace = _forward(top, bottom, 0, 1, P11, check)
    return PartitionPair(_mu_from(top, bottom, 0), tuple(beta), DISTINCT_ODD), trace


def inverse_11(pair: PartitionPair, check: bool = True, trace: MoveTrace | None = None) -> CylindricPartition:
    pair = PartitionPair(pair.mu, pair.beta, DISTINCT_ODD) if pair.flavor != DISTINCT_ODD else pair
    pair.validate()
    top, bottom = _rows_from_mu(pair.mu, 0)
    _backward(top, bottom, 0, 1, pair.beta, P11, check, trace)
    return validate_cylindric([top, bottom], P11)


def forward_20(lam: CylindricPartition, check: bool = True) -> tuple[PartitionPair, MoveTrace]:
    form = pad_20(lam)
    top, bottom = form.rows()
    if not top:
        return PartitionPair((), (), DISTINCT_EVEN), MoveTrace()
    beta, trace = _forward(top, bottom, 1, 1, P20, check)
    return PartitionPair(_mu_from(top, bottom, 1), tuple(beta), DISTINCT_EVEN), trace


def inverse_20(pair: PartitionPair, check: bool = True, trace: MoveTrace | None = None) -> CylindricPartition:
    pair = PartitionPair(pair.mu, pair.beta, DISTINCT_EVEN) if pair.flavor != DISTINCT_EVEN else pair
    pair.validate()
    top, bottom = _rows_from_mu(pair.mu, 1)
    if not top:
        top = [0]
    _backward(top, bottom, 1, 1, pair.beta, P20, check, trace)
    return validate_cylindric([top, bottom], P20)


def forward_odd_11(lam: CylindricPartition, check: bool = True) -> tuple[PartitionPair, MoveTrace]:
    """Doubled moves on an all-odd profile-(1,1) Lambda; raises NotInImage when partial."""
    if any(x % 2 == 0 for x in lam.parts()):
        raise BijectionError("all parts must be odd")
    form = pad_11(lam)
    top, bottom = list(form.a), list(form.b)
    beta, trace = _forward(top, bottom, 0, 2, P11, check)
    pair = PartitionPair(_mu_from(top, bottom, 0), tuple(beta), DOUBLED_ODD)
    try:
        pair.validate()
    except BijectionError as exc:
        raise NotInImage(str(exc)) from None
    return pair, trace


def inverse_odd_11(pair: PartitionPair, check: bool = True, trace: MoveTrace | None = None,
                   strict: bool = False) -> CylindricPartition:
    pair = PartitionPair(pair.mu, pair.beta, DOUBLED_ODD) if pair.flavor != DOUBLED_ODD else pair
    pair.validate(strict=strict)
    top, bottom = _rows_from_mu(pair.mu, 0)
    _backward(top, bottom, 0, 2, pair.beta, P11, check, trace)
    lam = validate_cylindric([top, bottom], P11)
    if any(x % 2 == 0 for x in lam.parts()):
        raise InvariantBroken(f"doubled inverse produced an even part: {lam.rows}")
    return lam


def largest_part_statistic(pair: PartitionPair) -> int:
    """Largest part of the Lambda the pair maps to: max(mu) + len(beta)."""
    return max(pair.mu, default=0) + len(pair.beta)


def forward(lam: CylindricPartition, flavor: str | None = None, check: bool = True) -> tuple[PartitionPair, MoveTrace]:
    if flavor == DOUBLED_ODD:
        return forward_odd_11(lam, check)
    if lam.profile == P11:
        return forward_11(lam, check)
    if lam.profile == P20:
        return forward_20(lam, check)
    raise ValueError(f"no bijection for profile {lam.profile}")


def inverse(pair: PartitionPair, check: bool = True, trace: MoveTrace | None = None) -> CylindricPartition:
    return {DISTINCT_ODD: inverse_11, DISTINCT_EVEN: inverse_20, DOUBLED_ODD: inverse_odd_11}[pair.flavor](
        pair, check=check, trace=trace)


# ---------------------------------------------------------------------------
# enumeration of pairs


def iter_pairs(flavor: str, total: int, strict: bool = False) -> Iterator[PartitionPair]:
    """All valid pairs of the flavor whose weight (beta doubled when applicable) is ``total``."""
    if flavor == DOUBLED_ODD:
        for b in range(total // 2 + 1):
            for beta in iter_partitions(b, distinct=True, parity=1):
                for mu in iter_partitions(total - 2 * b, parity=1):
                    if dependency_holds(mu, beta, strict):
                        yield PartitionPair(mu, beta, flavor)
        return
    parity = 1 if flavor == DISTINCT_ODD else 0
    for b in range(total + 1):
        for beta in iter_partitions(b, distinct=True, parity=parity):
            for mu in iter_partitions(total - b):
                yield PartitionPair(mu, beta, flavor)
