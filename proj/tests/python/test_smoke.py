from itertools import product

import pytest

crgstir = pytest.importorskip("crgstir")


def test_second_kind_example():
    assert crgstir.q_stirling2(2, 2, 1) == [2, 1, 1]
    assert crgstir.stirling2(1, 4, 2) == 25


def test_enumeration_matches_closed_form():
    for m, n in product(range(1, 4), range(0, 4)):
        for k in range(n + 1):
            counts = {}
            for _, d in crgstir.enumerate_partitions(m, n, k):
                counts[d] = counts.get(d, 0) + 1
            poly = crgstir.q_stirling2(m, n, k)
            assert [counts.get(i, 0) for i in range(len(poly))] == poly


def test_worked_partition():
    text = "0 4^0 4^1 4^2 | 1^0 3^2/1^1 3^0/1^2 3^1 | 2^0/2^1/2^2"
    assert crgstir.inv(text, 3) == 11
    assert crgstir.standard_form(text, 3) == "0 4^0 4^1 4^2 | 1^1 3^0/1^2 3^1/1^0 3^2 | 2^1/2^2/2^0"
    with pytest.raises(ValueError):
        crgstir.inv("0 1^0 | 1^1", 2)


def test_lattice_whitney():
    lat = crgstir.lattice(2, 2, barred=True)
    assert len(lat["elements"]) == 4
    assert lat["whitney_second"] == [1, 2, 1]
    assert lat["mobius"][0] == 1


def test_alternating_sum_and_artin():
    assert crgstir.alternating_sum("cr", 3, 2) == [1, 2, 1]
    assert crgstir.super_artin_hilbert(2, 3) == crgstir.super_stirling_generating(2, 3)
    assert crgstir.artin_hilbert(2, 2) == [1, 2, 2, 2, 1]


def test_big_integers():
    assert crgstir.stirling2(4, 30, 5) > 2**64


def test_suites_and_cli():
    reports = crgstir.run_suite("alt-sums", m="1..2", n="0..3")
    assert reports and all(r["status"] == "verified" for r in reports)
    code, out, _ = crgstir.run_cli(["qtable", "--m", "2", "--n", "2"])
    assert code == 0 and "2+q+q^2" in out
    code, _, err = crgstir.run_cli(["table", "--m", "zero"])
    assert code == 2 and "error" in err
