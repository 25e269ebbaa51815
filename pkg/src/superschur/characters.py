"""Symmetric-group characters, Kronecker coefficients, and the tensor
multiplicities summed over a hook.

Character values come from recursive border-strip removal (beta-number
form), memoized in a cache that can be persisted to a key-value file.
"""

from __future__ import annotations

import json
from math import factorial
from typing import Optional

from .partitions import (Hook, Partition, add_box_successors, as_hook,
                         enumerate_partitions, format_partition,
                         parse_partition, partitions_of)


class KroneckerCache:
    """Memo for character values and Kronecker coefficients.

    Not safe for concurrent mutation; confine one instance to one worker.
    Persistable as a JSON object with keys 'chi|lam|rho' and
    'kron|lam|mu|nu' (canonical comma partition forms, decimal values).
    """

    def __init__(self):
        self.chi: dict[tuple, int] = {}
        self.kron: dict[tuple, int] = {}

    def load(self, path: str) -> None:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        for key, value in data.items():
            kind, *parts = key.split("|")
            parts = tuple(parse_partition(p) for p in parts)
            if kind == "chi":
                self.chi[parts] = int(value)
            elif kind == "kron":
                self.kron[parts] = int(value)

    def save(self, path: str) -> None:
        data = {}
        for (lam, rho), v in self.chi.items():
            data[f"chi|{format_partition(lam)}|{format_partition(rho)}"] = v
        for (lam, mu, nu), v in self.kron.items():
            data[f"kron|{format_partition(lam)}|{format_partition(mu)}|{format_partition(nu)}"] = v
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(data, fh, indent=0, sort_keys=True)


_DEFAULT_CACHE = KroneckerCache()


def default_cache() -> KroneckerCache:
    return _DEFAULT_CACHE


def _beta_set(lam: Partition) -> tuple:
    length = len(lam)
    return tuple(sorted(lam[i] + length - 1 - i for i in range(length)))


def _partition_from_beta(beta: tuple) -> Partition:
    beta = sorted(beta)
    lam = [b - i for i, b in enumerate(beta)]
    return tuple(p for p in reversed(lam) if p > 0)


def mn_character(lam: Partition, rho: Partition,
                 cache: Optional[KroneckerCache] = None) -> int:
    """chi^lam evaluated at the class of cycle type rho, exactly."""
    if sum(lam) != sum(rho):
        raise ValueError(f"size mismatch: |{lam}| != |{rho}|")
    cache = cache or _DEFAULT_CACHE
    return _mn(tuple(lam), tuple(rho), cache)


def _mn(lam: Partition, rho: Partition, cache: KroneckerCache) -> int:
    if not rho:
        return 1
    key = (lam, rho)
    hit = cache.chi.get(key)
    if hit is not None:
        return hit
    r = rho[0]
    rest = rho[1:]
    beta = _beta_set(lam)
    beta_lookup = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beta_lookup:
            continue
        jumped = sum(1 for x in beta if target < x < b)
        new_beta = tuple(target if x == b else x for x in beta)
        total += (-1) ** jumped * _mn(_partition_from_beta(new_beta), rest, cache)
    cache.chi[key] = total
    return total


def class_size(rho: Partition) -> int:
    """Conjugacy class size in S_n for cycle type rho: n!/prod(i^a_i a_i!)."""
    n = sum(rho)
    denom = 1
    for i in set(rho):
        a = rho.count(i)
        denom *= i ** a * factorial(a)
    return factorial(n) // denom


def kronecker(lam: Partition, mu: Partition, nu: Partition,
              cache: Optional[KroneckerCache] = None) -> int:
    """Kronecker coefficient: multiplicity of chi^lam in chi^mu (x) chi^nu."""
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        raise ValueError("partitions must have equal size")
    cache = cache or _DEFAULT_CACHE
    key = (lam, mu, nu)
    hit = cache.kron.get(key)
    if hit is not None:
        return hit
    total = 0
    for rho in partitions_of(n):
        total += (class_size(rho)
                  * _mn(lam, rho, cache) * _mn(mu, rho, cache) * _mn(nu, rho, cache))
    g, r = divmod(total, factorial(n))
    assert r == 0, "class-sum for Kronecker coefficient did not divide exactly"
    cache.kron[key] = g
    return g


def m_lambda(lam: Partition, h, cache: Optional[KroneckerCache] = None) -> int:
    """Sum of gamma^lam_{mu,mu} over mu of the same size in the hook."""
    h = as_hook(h)
    n = sum(lam)
    if n == 0:
        return 1
    total = 0
    for mu in enumerate_partitions(n, in_hook=h):
        total += kronecker(lam, mu, mu, cache)
    return total


def m_bar_lambda(lam: Partition, h, cache: Optional[KroneckerCache] = None) -> int:
    """Multiplicity after restricting the hook tensor sum down one S_n level.

    Realized through the branching rule: sum of m over all one-box
    extensions of lam.
    """
    return sum(m_lambda(lp, h, cache) for lp in add_box_successors(lam))


def dimension(lam: Partition, cache: Optional[KroneckerCache] = None) -> int:
    """Degree of chi^lam (number of standard tableaux)."""
    n = sum(lam)
    return mn_character(lam, (1,) * n, cache) if n else 1
