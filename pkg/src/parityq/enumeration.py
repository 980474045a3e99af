"""Combinatorial oracles for (over)partitions with parts separated by parity.

A partition has parts separated by parity when every part of one parity
exceeds every part of the other parity; partitions using only one parity
qualify vacuously.  A configuration fixes which parity forms the low
block, plus a restriction (unrestricted or distinct) per block; the high
parity is always the opposite of the low one.  Configurations are named
"<low><high>", e.g. "od-eu" = low block odd & distinct, high block even &
unrestricted.

Three decoration variants:

    plain : ordinary partitions, no overlines
    over  : overpartitions; the first instance of each distinct part size
            may carry an overline (a size in a distinct block still has
            the two decorations: its single part overlined or not)
    mod   : overpartitions where sizes belonging to a distinct block may
            NOT be overlined

Two independent counting algorithms are provided on purpose: explicit
enumeration of decorated partitions (enumerate_sep), and a weighted
dynamic program over undecorated partitions that iterates over the
boundary between the blocks (count_sep).  Tests require them to agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .series import LaurentSeries


class Parity(Enum):
    ODD = "o"
    EVEN = "e"

    @property
    def opposite(self) -> "Parity":
        return Parity.EVEN if self is Parity.ODD else Parity.ODD

    @property
    def smallest(self) -> int:
        return 1 if self is Parity.ODD else 2


class Restriction(Enum):
    UNRESTRICTED = "u"
    DISTINCT = "d"


class Variant(Enum):
    PLAIN = "plain"
    OVERLINED = "over"
    MODIFIED = "mod"


_VARIANT_ALIASES = {
    "plain": Variant.PLAIN,
    "over": Variant.OVERLINED,
    "overlined": Variant.OVERLINED,
    "mod": Variant.MODIFIED,
    "modified": Variant.MODIFIED,
}


def parse_variant(name: str) -> Variant:
    try:
        return _VARIANT_ALIASES[name.lower()]
    except KeyError:
        raise ValueError(f"unknown variant {name!r}; expected plain, over or mod")


@dataclass(frozen=True)
class SepConfig:
    """Which parity is the low block, and the restriction on each block."""

    low_parity: Parity
    low_restriction: Restriction
    high_restriction: Restriction

    @property
    def high_parity(self) -> Parity:
        return self.low_parity.opposite

    @property
    def code(self) -> str:
        return (
            f"{self.low_parity.value}{self.low_restriction.value}"
            f"-{self.high_parity.value}{self.high_restriction.value}"
        )

    @classmethod
    def from_code(cls, code: str) -> "SepConfig":
        """Parse "od-eu"-style codes (low block first, high block second)."""
        norm = code.lower().replace("^", "-").replace("_", "-")
        parts = norm.split("-")
        if len(parts) != 2 or any(len(p) != 2 for p in parts):
            raise ValueError(f"bad family code {code!r}; expected e.g. 'od-eu'")
        (lp, lr), (hp, hr) = parts[0], parts[1]
        try:
            low_parity = Parity(lp)
            high_parity = Parity(hp)
            low_res = Restriction(lr)
            high_res = Restriction(hr)
        except ValueError:
            raise ValueError(f"bad family code {code!r}; expected e.g. 'od-eu'")
        if high_parity is not low_parity.opposite:
            raise ValueError(f"family code {code!r} must use opposite parities")
        return cls(low_parity, low_res, high_res)

    def restriction_of(self, parity: Parity) -> Restriction:
        return self.low_restriction if parity is self.low_parity else self.high_restriction


ALL_CONFIGS = tuple(
    SepConfig(lp, lr, hr)
    for lp in (Parity.EVEN, Parity.ODD)
    for lr in (Restriction.UNRESTRICTED, Restriction.DISTINCT)
    for hr in (Restriction.UNRESTRICTED, Restriction.DISTINCT)
)


@dataclass(frozen=True)
class DecoratedPartition:
    """Non-increasing (size, overlined) parts; at most one overline per size."""

    parts: tuple[tuple[int, bool], ...]

    @property
    def total(self) -> int:
        return sum(s for s, _ in self.parts)

    def render(self) -> str:
        return "+".join(f"{s}~" if o else str(s) for s, o in self.parts)

    def to_json(self) -> list[list]:
        return [[s, o] for s, o in self.parts]

    def is_valid(self, cfg: SepConfig, variant: Variant) -> bool:
        sizes = [s for s, _ in self.parts]
        if any(s < 1 for s in sizes):
            return False
        if any(sizes[i] < sizes[i + 1] for i in range(len(sizes) - 1)):
            return False
        low = [s for s in sizes if (s % 2 == 1) == (cfg.low_parity is Parity.ODD)]
        high = [s for s in sizes if (s % 2 == 1) != (cfg.low_parity is Parity.ODD)]
        if low and high and min(high) <= max(low):
            return False
        for block, res in ((low, cfg.low_restriction), (high, cfg.high_restriction)):
            if res is Restriction.DISTINCT and len(set(block)) != len(block):
                return False
        seen_overline = set()
        prev_of_size: dict[int, int] = {}
        for s, o in self.parts:
            if o:
                if s in seen_overline:
                    return False
                # only the first instance of a size may be overlined
                if prev_of_size.get(s, 0) > 0:
                    return False
                seen_overline.add(s)
                if variant is Variant.PLAIN:
                    return False
                if variant is Variant.MODIFIED:
                    parity = Parity.ODD if s % 2 else Parity.EVEN
                    if cfg.restriction_of(parity) is Restriction.DISTINCT:
                        return False
            prev_of_size[s] = prev_of_size.get(s, 0) + 1
        return True


def _block_partitions(total: int, parity: Parity, res: Restriction, max_part: int):
    """Partitions of `total` into parts of one parity, parts <= max_part,
    distinct if required; yielded as non-increasing tuples."""
    first = parity.smallest

    def rec(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        s = min(cap, remaining)
        if s % 2 != first % 2:
            s -= 1
        while s >= first:
            nxt_cap = s - 2 if res is Restriction.DISTINCT else s
            for rest in rec(remaining - s, nxt_cap):
                yield (s,) + rest
            s -= 2

    if total == 0:
        yield ()
        return
    yield from rec(total, max_part)


def _underlying_partitions(cfg: SepConfig, n: int):
    """All undecorated parity-separated partitions of n for cfg, as
    non-increasing size tuples (each exactly once)."""
    out = []
    for m in range(n + 1):
        for high in _block_partitions(m, cfg.high_parity, cfg.high_restriction, m):
            bound = (min(high) - 1) if high else n - m
            if n - m > 0 and bound < 1:
                continue
            for low in _block_partitions(n - m, cfg.low_parity, cfg.low_restriction, bound):
                out.append(high + low)
    out.sort(reverse=True)
    return out


def _overlinable_sizes(cfg: SepConfig, variant: Variant, sizes: tuple[int, ...]) -> list[int]:
    if variant is Variant.PLAIN:
        return []
    distinct = sorted(set(sizes), reverse=True)
    if variant is Variant.OVERLINED:
        return distinct
    keep = []
    for s in distinct:
        parity = Parity.ODD if s % 2 else Parity.EVEN
        if cfg.restriction_of(parity) is Restriction.UNRESTRICTED:
            keep.append(s)
    return keep


def enumerate_sep(cfg: SepConfig, variant: Variant, n: int):
    """Yield every decorated partition of n exactly once, deterministically.

    Underlying partitions come in descending lexicographic order; for each,
    decoration bitmasks count upward with bit i governing the i-th largest
    overlinable size (so the fully plain decoration comes first).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    for sizes in _underlying_partitions(cfg, n):
        marks = _overlinable_sizes(cfg, variant, sizes)
        for mask in range(1 << len(marks)):
            chosen = {marks[i] for i in range(len(marks)) if mask >> i & 1}
            parts = []
            used = set()
            for s in sizes:
                over = s in chosen and s not in used
                used.add(s)
                parts.append((s, over))
            yield DecoratedPartition(tuple(parts))


def count_sep_enumerated(cfg: SepConfig, variant: Variant, n: int) -> int:
    """Count by literally enumerating decorated partitions (algorithm 1)."""
    return sum(1 for _ in enumerate_sep(cfg, variant, n))


def _size_weight(cfg: SepConfig, variant: Variant, parity: Parity) -> int:
    if variant is Variant.PLAIN:
        return 1
    if variant is Variant.MODIFIED and cfg.restriction_of(parity) is Restriction.DISTINCT:
        return 1
    return 2


def _dp_block(limit: int, sizes, res: Restriction, weight: int) -> list[int]:
    """Weighted counts of partitions of 0..limit into the given sizes.

    Each used size contributes the factor weight * (its multiplicity
    pattern): distinct sizes may appear once, unrestricted any number of
    times, and in both cases the whole size carries one factor `weight`
    (an overline sits on the first instance only).
    """
    table = [0] * (limit + 1)
    table[0] = 1
    for s in sizes:
        if res is Restriction.DISTINCT:
            for m in range(limit, s - 1, -1):
                table[m] += weight * table[m - s]
        else:
            old = list(table)
            aux = [0] * (limit + 1)
            for m in range(s, limit + 1):
                aux[m] = old[m - s] + (aux[m - s] if m - s >= s else 0)
                table[m] = old[m] + weight * aux[m]
    return table


def _count_profile(cfg: SepConfig, variant: Variant, limit: int) -> list[int]:
    """count_sep for all n = 0..limit at once (the weighted-DP algorithm).

    Iterates over the largest low-block part b: low partitions with parts
    <= b minus those with parts <= b-2 isolates "largest part exactly b",
    which pairs with high partitions of parts > b.  The empty low block is
    the separate b-free term, so nothing is double counted.
    """
    low_w = _size_weight(cfg, variant, cfg.low_parity)
    high_w = _size_weight(cfg, variant, cfg.high_parity)
    lo0 = cfg.low_parity.smallest
    hi0 = cfg.high_parity.smallest

    def high_gt(b: int) -> list[int]:
        first = b + 1 if (b + 1) % 2 == hi0 % 2 else b + 2
        sizes = range(first, limit + 1, 2)
        return _dp_block(limit, sizes, cfg.high_restriction, high_w)

    total = list(high_gt(0))  # low block empty
    low_prev = _dp_block(limit, (), cfg.low_restriction, low_w)
    for b in range(lo0, limit + 1, 2):
        low_now = _dp_block(limit, range(lo0, b + 1, 2), cfg.low_restriction, low_w)
        diff = [a - c for a, c in zip(low_now, low_prev)]
        hb = high_gt(b)
        for k in range(b, limit + 1):
            acc = 0
            for m in range(b, k + 1):
                if diff[m]:
                    acc += diff[m] * hb[k - m]
            total[k] += acc
        low_prev = low_now
    return total


def count_sep(cfg: SepConfig, variant: Variant, n: int) -> int:
    """Number of decorated partitions of n (weighted-DP algorithm)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _count_profile(cfg, variant, n)[n]


def series_sep(cfg: SepConfig, variant: Variant, trunc: int) -> LaurentSeries:
    """Generating series of count_sep up to the given truncation."""
    if trunc < 1:
        return LaurentSeries.zero(trunc)
    profile = _count_profile(cfg, variant, trunc - 1)
    return LaurentSeries(0, [Fraction(c) for c in profile], trunc)


def count_overpartitions(n: int) -> int:
    """Unrestricted overpartition count, by brute-force enumeration.

    Sanity anchor for the decoration model: every partition of n carries
    one optional overline per distinct part size.
    """
    if n < 0:
        raise ValueError("n must be >= 0")

    def rec(remaining: int, largest: int, distinct: int) -> int:
        if remaining == 0:
            return 1 << distinct
        total = 0
        for s in range(min(largest, remaining), 0, -1):
            most = remaining // s
            for j in range(1, most + 1):
                total += rec(remaining - j * s, s - 1, distinct + 1)
        return total

    return rec(n, n, 0)
