"""Realizability checks for finite integer-sequence prefixes.

A non-negative sequence is realizable when it counts periodic points of some
map: a_n = #{x : T^n x = x}.  Over a finite prefix this is decidable via the
orbit counts o_n = sum_{d|n} mu(n/d) a_d, which must be divisible by n (the
Dold congruence) and non-negative (the sign condition).  Verdicts here never
claim more than the prefix shows: a passing check is PASS-UP-TO(N), a failing
one carries its least witness index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .arith import divisors, is_prime, mobius, p_adic
from .errors import ZeroEntryError

PASS = "pass-up-to"
FAIL = "fail-at"


@dataclass(frozen=True)
class Sequence1:
    """Finite prefix of a non-negative integer sequence, indexed from 1."""

    values: tuple[int, ...]
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if len(self.values) == 0:
            raise ValueError("Sequence1 needs at least one term")
        for i, v in enumerate(self.values, start=1):
            if v < 0:
                raise ValueError(f"Sequence1 values must be >= 0; a_{i} = {v}")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        """1-based term access: seq[n] is a_n."""
        if not 1 <= n <= len(self.values):
            raise IndexError(f"index {n} outside 1..{len(self.values)}")
        return self.values[n - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def relabel(self, label: str) -> "Sequence1":
        return Sequence1(self.values, label)


@dataclass(frozen=True)
class OrbitCounts:
    """Mobius inversion of a sequence prefix; entries may be negative."""

    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= len(self.values):
            raise IndexError(f"index {n} outside 1..{len(self.values)}")
        return self.values[n - 1]


@dataclass(frozen=True)
class Verdict:
    """Outcome of one check over a prefix: pass up to N, or fail at a witness.

    ``value`` is the quantity that exhibits the failure (the offending orbit
    count, residue difference, or sequence entry); ``detail`` carries any
    extra witness coordinates (e.g. the divisor of a monotonicity violation).
    """

    status: str
    checked_upto: int
    n: int | None = None
    value: int | None = None
    detail: dict = field(default_factory=dict)

    @classmethod
    def pass_up_to(cls, checked_upto: int) -> "Verdict":
        return cls(PASS, checked_upto)

    @classmethod
    def fail_at(cls, n: int, value: int, checked_upto: int, **detail) -> "Verdict":
        return cls(FAIL, checked_upto, n, value, dict(detail))

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def describe(self) -> str:
        if self.passed:
            return f"{PASS}({self.checked_upto})"
        extra = "".join(f", {k}={v}" for k, v in self.detail.items())
        return f"{FAIL}(n={self.n}, value={self.value}{extra})"


@dataclass(frozen=True)
class RealizabilityReport:
    """Dold, sign, and divisor-monotonicity verdicts for one prefix."""

    checked_upto: int
    dold: Verdict
    sign: Verdict
    monotone: Verdict

    @property
    def realizable_consistent(self) -> bool:
        """True when the prefix is consistent with realizability (Dold + sign)."""
        return self.dold.passed and self.sign.passed

    def first_failure(self) -> tuple[str, Verdict] | None:
        for name in ("dold", "sign", "monotone"):
            v: Verdict = getattr(self, name)
            if not v.passed:
                return name, v
        return None


def orbit_counts(a: Sequence1) -> OrbitCounts:
    """o_n = sum_{d|n} mu(n/d) a_d for 1 <= n <= len(a).

    When a is realizable, o_n/n counts the closed orbits of length n of any
    realizing map; inverting back always recovers a (sum_{d|n} o_d = a_n).
    """
    out = []
    for n in range(1, len(a) + 1):
        out.append(sum(mobius(n // d) * a[d] for d in divisors(n)))
    return OrbitCounts(tuple(out))


def check_realizable(a: Sequence1) -> RealizabilityReport:
    """Dold congruence, sign condition, and divisor-monotonicity over the prefix.

    Each verdict carries the least failing index.  Monotonicity (a_d <= a_n
    whenever d | n) is a separate necessary condition: fixed-point sets nest
    under divisibility, and it often witnesses local failures more cheaply
    than full inversion.
    """
    N = len(a)
    o = orbit_counts(a)
    dold = Verdict.pass_up_to(N)
    for n in range(1, N + 1):
        if o[n] % n != 0:
            dold = Verdict.fail_at(n, o[n], N)
            break
    sign = Verdict.pass_up_to(N)
    for n in range(1, N + 1):
        if o[n] < 0:
            sign = Verdict.fail_at(n, o[n], N)
            break
    monotone = Verdict.pass_up_to(N)
    for n in range(1, N + 1):
        bad = [d for d in divisors(n) if d < n and a[d] > a[n]]
        if bad:
            d = bad[0]
            monotone = Verdict.fail_at(n, a[n], N, divisor=d, divisor_value=a[d])
            break
    return RealizabilityReport(N, dold, sign, monotone)


def arias_criterion(a: Sequence1) -> Verdict:
    """Congruence criterion equivalent to the Dold congruence.

    Checks a_{n p^m} = a_{n p^{m-1}} (mod p^m) for every prime p and every
    n coprime to p with n p^m <= len(a).  Fails at the same least index as
    the Dold check; the verdict's ``n`` is the composite index n*p^m and the
    value is the nonzero residue difference mod p^m.
    """
    N = len(a)
    for c in range(2, N + 1):
        for p, m in _prime_power_splits(c):
            lhs = a[c]
            rhs = a[c // p]
            mod = p**m
            if (lhs - rhs) % mod != 0:
                return Verdict.fail_at(
                    c, (lhs - rhs) % mod, N, base=c // p**m, p=p, m=m
                )
    return Verdict.pass_up_to(N)


def _prime_power_splits(c: int) -> Iterable[tuple[int, int]]:
    # (p, ord_p(c)) for each prime p | c, ascending in p
    rest = c
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            m = 0
            while rest % p == 0:
                rest //= p
                m += 1
            yield p, m
        p += 1
    if rest > 1:
        yield rest, p_adic(c, rest).ord


def p_part_sequence(a: Sequence1, q: int) -> Sequence1:
    """Entrywise q-part of a strictly positive prefix (localization at q)."""
    if not is_prime(q):
        raise ValueError(f"localization prime expected, got {q}")
    parts = []
    for n in range(1, len(a) + 1):
        if a[n] == 0:
            raise ZeroEntryError(n)
        parts.append(p_adic(a[n], q).part)
    label = f"{a.label}@{q}" if a.label else f"@{q}"
    return Sequence1(tuple(parts), label)


def local_report(a: Sequence1, q: int) -> RealizabilityReport:
    """Realizability report of the q-part sequence ("realizable at q")."""
    return check_realizable(p_part_sequence(a, q))


def shift(a: Sequence1, k: int) -> Sequence1:
    """Drop the first k terms: (a_{1+k}, ..., a_N)."""
    if k < 0:
        raise ValueError("shift must be >= 0")
    if k >= len(a):
        raise ValueError(f"shift {k} leaves no terms (length {len(a)})")
    label = f"{a.label}>>{k}" if k and a.label else a.label
    return Sequence1(a.values[k:], label)


@dataclass(frozen=True)
class MagicalReport:
    """Realizability reports for every shift 0..max_shift of one prefix."""

    entries: tuple[tuple[int, RealizabilityReport], ...]

    @property
    def all_pass(self) -> bool:
        return all(r.realizable_consistent for _, r in self.entries)

    def first_failure(self) -> tuple[int, str, Verdict] | None:
        """(shift, check name, verdict) of the first failing shift, if any."""
        for k, report in self.entries:
            if not report.realizable_consistent:
                name, v = report.first_failure()
                return k, name, v
        return None


def magical_report(a: Sequence1, max_shift: int) -> MagicalReport:
    """Check realizability of each shifted prefix (a_{n+k}) for k <= max_shift."""
    if max_shift >= len(a):
        raise ValueError(f"max_shift {max_shift} >= length {len(a)}")
    entries = tuple((k, check_realizable(shift(a, k))) for k in range(max_shift + 1))
    return MagicalReport(entries)


def pointwise_product(a: Sequence1, b: Sequence1) -> Sequence1:
    """Termwise product; realizability is preserved under this operation."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    label = f"{a.label}*{b.label}" if a.label and b.label else (a.label or b.label)
    return Sequence1(tuple(x * y for x, y in zip(a.values, b.values)), label)
