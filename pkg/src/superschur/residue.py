"""Contour integrals as exact constant-term extraction.

The kernel Delta has numerator prod_{i!=j}(1 - x_i x_j^-1) (and the same
in y) and denominator prod_{i,j}(1 + x_i y_j^-1)(1 + x_i^-1 y_j).  The
contour ordering |x| > |y| is realized algebraically: each denominator
pair is rewritten as x_i^-1 y_j * sum_{m>=0} (m+1)(-x_i^-1 y_j)^m, so no
numeric radius exists anywhere.  Truncation of each geometric factor is
per-term and exact: a term can only reach the constant term if its x
exponents stay nonnegative and its y exponents nonpositive while factors
are absorbed.  `slack` widens every truncation window; results must be
independent of it (the truncation-stability invariant).
"""

from __future__ import annotations

from math import factorial

from .hookschur import Alphabet, hook_schur_eval
from .laurent import LaurentPoly, VarTable
from .partitions import Hook, Partition, as_hook

_HS_ON_Z_CACHE: dict = {}


def residue_table(h) -> VarTable:
    h = as_hook(h)
    return VarTable([f"x{i}" for i in range(1, h.k + 1)]
                    + [f"y{j}" for j in range(1, h.l + 1)])


def delta_numerator(table: VarTable, h) -> LaurentPoly:
    """Finite part of Delta after the geometric rewrite: the difference
    products times the monomial prefactor prod x_i^-l prod y_j^k."""
    h = as_hook(h)
    k, ell = h.k, h.l
    result = LaurentPoly.const(table, 1)
    for block, count in ((0, k), (k, ell)):
        for i in range(count):
            for j in range(count):
                if i == j:
                    continue
                e = [0] * len(table)
                e[block + i] = 1
                e[block + j] = -1
                result = result * (1 - LaurentPoly.monomial(table, 1, tuple(e)))
    pre = [-ell] * k + [k] * ell
    return result * LaurentPoly.monomial(table, 1, tuple(pre))


def constant_term_with_delta(f: LaurentPoly, h, slack: int = 0) -> int:
    """Exact constant term of f * Delta, with Delta expanded per the
    |x| > |y| ordering.  Factors are absorbed grouped by x index then y
    index; after all factors touching x_i are in, terms off x_i = 0 are
    discarded (they cannot reach the constant term)."""
    h = as_hook(h)
    k, ell = h.k, h.l
    n = len(f.table)
    if n != k + ell:
        raise ValueError("polynomial table does not match the hook")
    terms = (f * delta_numerator(f.table, h)).terms
    # dead-term prune: x exponents only ever decrease, y only increase
    terms = {e: c for e, c in terms.items()
             if all(e[i] >= -slack for i in range(k))
             and all(e[k + j] <= slack for j in range(ell))}
    for i in range(k):
        for j in range(ell):
            new: dict[tuple, int] = {}
            for e, c in terms.items():
                bound = min(e[i] + slack, slack - e[k + j])
                for m in range(bound + 1):
                    coeff = c * (m + 1) * (1 if m % 2 == 0 else -1)
                    key = list(e)
                    key[i] -= m
                    key[k + j] += m
                    key = tuple(key)
                    s = new.get(key, 0) + coeff
                    if s:
                        new[key] = s
                    elif key in new:
                        del new[key]
            terms = new
        terms = {e: c for e, c in terms.items() if abs(e[i]) <= slack and
                 (slack or e[i] == 0)}
    return terms.get((0,) * n, 0)


def inner_product(f: LaurentPoly, g: LaurentPoly, h, slack: int = 0) -> int:
    """<f, g> = (k! l!)^-1 x constant term of f(X;Y) g(X^-1;Y^-1) Delta."""
    h = as_hook(h)
    if f.table != g.table:
        raise ValueError("variable table mismatch")
    ct = constant_term_with_delta(f * g.invert_variables(), h, slack)
    q, r = divmod(ct, factorial(h.k) * factorial(h.l))
    assert r == 0, "constant term not divisible by k! l! (expansion bug)"
    return q


def z_alphabets(h) -> tuple[VarTable, Alphabet, Alphabet]:
    """The monomial multisets Z0 = X X^-1 u Y Y^-1 (size k^2 + l^2,
    including k + l unit monomials) and Z1 = X Y^-1 u X^-1 Y (size 2kl)."""
    h = as_hook(h)
    k, ell = h.k, h.l
    table = residue_table(h)
    n = len(table)

    def mono(up: int = None, down: int = None) -> tuple[int, tuple]:
        e = [0] * n
        if up is not None:
            e[up] += 1
        if down is not None:
            e[down] -= 1
        return (1, tuple(e))

    z0 = [mono(i, j) for i in range(k) for j in range(k)]
    z0 += [mono(k + i, k + j) for i in range(ell) for j in range(ell)]
    z1 = [mono(i, k + j) for i in range(k) for j in range(ell)]
    z1 += [mono(k + j, i) for i in range(k) for j in range(ell)]
    return table, Alphabet(table, z0), Alphabet(table, z1)


def hs_on_z(lam: Partition, h) -> LaurentPoly:
    """HS_lam(Z0;Z1) as a Laurent polynomial in the hook's variables."""
    h = as_hook(h)
    key = (tuple(lam), h.k, h.l)
    hit = _HS_ON_Z_CACHE.get(key)
    if hit is None:
        _, z0, z1 = z_alphabets(h)
        hit = hook_schur_eval(tuple(lam), z0, z1)
        _HS_ON_Z_CACHE[key] = hit
    return hit


def m_prime_residue(lam: Partition, h, slack: int = 0) -> int:
    """<HS_lam(Z0;Z1), 1> -- the integral form of the multiplicity jump."""
    h = as_hook(h)
    ct = constant_term_with_delta(hs_on_z(lam, h), h, slack)
    q, r = divmod(ct, factorial(h.k) * factorial(h.l))
    assert r == 0, "constant term not divisible by k! l! (expansion bug)"
    return q


def m_bar_prime_residue(lam: Partition, h, slack: int = 0) -> int:
    """Same integral with the extra factor sum_{z in Z0 u Z1} z."""
    h = as_hook(h)
    _, z0, z1 = z_alphabets(h)
    f = hs_on_z(lam, h) * (z0.sum_poly() + z1.sum_poly())
    ct = constant_term_with_delta(f, h, slack)
    q, r = divmod(ct, factorial(h.k) * factorial(h.l))
    assert r == 0, "constant term not divisible by k! l! (expansion bug)"
    return q


def clear_caches() -> None:
    _HS_ON_Z_CACHE.clear()
