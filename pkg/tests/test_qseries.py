import pytest

from superschur.qseries import (TruncatedSeries, check_limit_identity,
                                closed_form_series, expand_product,
                                gf_partitions, u2_factorial_factors)


def test_series_arithmetic():
    a = TruncatedSeries("u", 3, (1, 2, 0, 1))
    b = TruncatedSeries("u", 3, (0, 1, 1, 0))
    assert (a + b).coeffs == (1, 3, 1, 1)
    assert (a - b).coeffs == (1, 1, -1, 1)
    assert (a * b).coeffs == (0, 1, 3, 2)
    assert (a * 3).coeffs == (3, 6, 0, 3)
    assert a.shift(2).coeffs == (0, 0, 1, 2)
    assert a[1] == 2


def test_series_mismatch_rejected():
    a = TruncatedSeries("u", 3, (1, 0, 0, 0))
    with pytest.raises(ValueError):
        a + TruncatedSeries("t", 3, (1, 0, 0, 0))
    with pytest.raises(ValueError):
        a + TruncatedSeries("u", 4, (1, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        TruncatedSeries("u", 2, (1, 0))


def test_expand_product_basics():
    # 1/(1-u) = all ones
    assert expand_product([(-1, 1, -1)], 0, 5).coeffs == (1,) * 6
    # (1+u)^{-1} alternates
    assert expand_product([(1, 1, -1)], 0, 5).coeffs == (1, -1, 1, -1, 1, -1)
    # (1-u^2)(1+u) shifted by 1
    assert expand_product([(-1, 2, 1), (1, 1, 1)], 1, 5).coeffs == (0, 1, 1, -1, -1, 0)
    with pytest.raises(ValueError):
        expand_product([(1, 0, -1)], 0, 5)
    with pytest.raises(ValueError):
        expand_product([(2, 1, 1)], 0, 5)


def test_expand_product_is_partition_gf():
    # 1/prod (1-u^i) counts all partitions
    D = 12
    factors = [(-1, i, -1) for i in range(1, D + 1)]
    assert expand_product(factors, 0, D) == gf_partitions(D)


def test_u2_factorial_factors():
    assert u2_factorial_factors(2) == [(-1, 2, 1), (-1, 4, 1)]
    assert u2_factorial_factors(0) == []


def test_gf_partitions_constraints():
    assert gf_partitions(6, max_height=2).coeffs == (1, 1, 2, 2, 3, 3, 4)
    assert gf_partitions(8, self_conjugate=True).coeffs == (1, 1, 0, 1, 1, 1, 1, 1, 2)


def test_traces_closed_form_counts_hook_members():
    # coefficient of t^n = number of partitions of n in H(k, l),
    # shifted by the k*l box for the typical core
    for k, l in [(1, 1), (2, 1), (2, 2)]:
        series = closed_form_series("traces_n1", (k, l), 12)
        count = gf_partitions(12, typical=(k, l), var="t")
        assert series == count


def test_supertraces_closed_form_counts_typical_self_conjugate():
    for k, l in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)]:
        series = closed_form_series("supertraces_01", (k, l), 14)
        count = gf_partitions(14, typical=(k, l), self_conjugate=True)
        assert series == count


def test_supertraces_requires_wide_hook():
    with pytest.raises(ValueError):
        closed_form_series("supertraces_01", (1, 2), 6)
    with pytest.raises(ValueError):
        closed_form_series("nope", (1, 1), 6)


def test_limit_identity_selfconjugate_sum():
    ok, report = check_limit_identity("selfconjugate_sum", 20)
    assert ok, report
    assert report["first_discrepancy"] is None
    # lhs really is the self-conjugate partition counter
    assert tuple(report["lhs"]) == gf_partitions(20, self_conjugate=True).coeffs


def test_limit_identity_shifted_sum():
    for n in (1, 2, 3):
        ok, report = check_limit_identity("shifted_sum", 20, n=n)
        assert ok, report


def test_limit_identity_reports_discrepancy_degree():
    # the shifted sum without its shift parameter is an error
    with pytest.raises(ValueError):
        check_limit_identity("shifted_sum", 10)
    with pytest.raises(ValueError):
        check_limit_identity("bogus", 10)
