"""Partitions, hooks, typicality, enumeration, and diagram decompositions.

A partition is a tuple of weakly decreasing positive integers; the empty
tuple is the empty partition.  Out-of-range parts read as 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, Optional

Partition = tuple  # tuple[int, ...], weakly decreasing, positive entries


class HookClass(Enum):
    OUTSIDE = "outside"
    ATYPICAL = "atypical"
    TYPICAL = "typical"


@dataclass(frozen=True)
class Hook:
    """The (k, l) hook: partitions with at most k parts exceeding l.

    (0, 0) is allowed and contains exactly the empty partition, so that
    multiplicity differences against the next-smaller hook stay defined.
    """

    k: int
    l: int

    def __post_init__(self):
        if self.k < 0 or self.l < 0:
            raise ValueError(f"hook entries must be nonnegative: {self}")

    def shrink(self) -> "Hook":
        return Hook(self.k - 1, self.l - 1)

    def __iter__(self):
        return iter((self.k, self.l))


def as_hook(h) -> Hook:
    return h if isinstance(h, Hook) else Hook(*h)


def check_partition(parts) -> Partition:
    parts = tuple(parts)
    for i, p in enumerate(parts):
        if not isinstance(p, int) or p < 1:
            raise ValueError(f"parts must be positive integers: {parts}")
        if i and parts[i - 1] < p:
            raise ValueError(f"parts must be weakly decreasing: {parts}")
    return parts


def parse_partition(text: str) -> Partition:
    """Comma-separated decreasing integers; '' or the empty-set sign is empty."""
    text = text.strip()
    if text in ("", "-", "∅"):
        return ()
    return check_partition(int(p) for p in text.split(","))


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def part(lam: Partition, i: int) -> int:
    """1-indexed part, 0 beyond the length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def size(lam: Partition) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    cols = [0] * lam[0]
    for p in lam:
        for j in range(p):
            cols[j] += 1
    return tuple(cols)


def classify_hook(lam: Partition, h) -> HookClass:
    """Outside iff lam_{k+1} > l; typical iff in hook and lam_k >= l."""
    h = as_hook(h)
    if part(lam, h.k + 1) > h.l:
        return HookClass.OUTSIDE
    if h.k == 0 or part(lam, h.k) >= h.l:
        return HookClass.TYPICAL
    return HookClass.ATYPICAL


def in_hook(lam: Partition, h) -> bool:
    return classify_hook(lam, h) is not HookClass.OUTSIDE


def is_typical(lam: Partition, h) -> bool:
    return classify_hook(lam, h) is HookClass.TYPICAL


def is_self_conjugate(lam: Partition) -> bool:
    return lam == conjugate(lam)


def _gen(n: int, max_part: int) -> Iterator[Partition]:
    """All partitions of n with parts <= max_part, lexicographic descending."""
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _gen(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int,
                         max_height: Optional[int] = None,
                         in_hook=None,
                         typical=None,
                         self_conjugate: bool = False) -> list[Partition]:
    """All partitions of n meeting every given constraint.

    Canonical order is lexicographic descending; determinism is contractual
    for golden-file tests.  `in_hook` and `typical` take Hook or (k, l).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    for lam in _gen(n, n if n else 1):
        if max_height is not None and len(lam) > max_height:
            continue
        if in_hook is not None and classify_hook(lam, in_hook) is HookClass.OUTSIDE:
            continue
        if typical is not None and not is_typical(lam, typical):
            continue
        if self_conjugate and not is_self_conjugate(lam):
            continue
        out.append(lam)
    return out


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    return tuple(_gen(n, n if n else 1))


def add_box_successors(lam: Partition) -> list[Partition]:
    """All partitions of |lam|+1 whose diagram is lam plus one box."""
    out = []
    for i in range(len(lam) + 1):
        here = part(lam, i + 1)
        above = part(lam, i) if i else None
        if above is None or here < above:
            grown = list(lam)
            if i < len(lam):
                grown[i] += 1
            else:
                grown.append(1)
            out.append(tuple(grown))
    return out


def typical_split(lam: Partition, h) -> tuple[Partition, Partition]:
    """Peel the k x l rectangle off a typical partition: (arm mu, leg nu)."""
    h = as_hook(h)
    if classify_hook(lam, h) is not HookClass.TYPICAL:
        raise ValueError(f"{lam} is not typical in H({h.k},{h.l})")
    mu = tuple(p for p in (part(lam, i) - h.l for i in range(1, h.k + 1)) if p > 0)
    lamc = conjugate(lam)
    nu = tuple(p for p in (part(lamc, j) - h.k for j in range(1, h.l + 1)) if p > 0)
    return mu, nu


def square_split(lam: Partition, k: int) -> tuple[Partition, Partition, Partition]:
    """Cut lam along the k x k square: (lam ^ square, right arm, leg conjugated)."""
    lam0 = tuple(min(p, k) for p in lam[:k] if min(p, k) > 0)
    mu = tuple(p - k for p in lam[:k] if p > k)
    below = lam[k:]
    nu = conjugate(below)
    return lam0, mu, nu
