"""Calendar scanning over digit alphabets."""

from collections import Counter
from datetime import date

import pytest

from segmagic.dates import (
    EXACTLY_USES,
    SUBSET_OF,
    digits_of,
    format_date,
    parse_date,
    scan,
)


def test_parse_and_format_round_trip():
    assert parse_date("08.05.2010") == date(2010, 5, 8)
    assert format_date(date(2010, 5, 8)) == "08.05.2010"
    assert format_date(parse_date("01.01.1000")) == "01.01.1000"


def test_parse_rejects_bad_formats():
    for bad in ("8.5.10", "08/05/2010", "08.05", "aa.bb.cccc", "08.05.201O", ""):
        with pytest.raises(ValueError):
            parse_date(bad)


def test_parse_rejects_invalid_calendar_dates():
    with pytest.raises(ValueError):
        parse_date("31.02.2010")
    with pytest.raises(ValueError):
        parse_date("29.02.2011")  # not a leap year
    assert parse_date("29.02.2012") == date(2012, 2, 29)


def test_digits_of_multiset():
    assert digits_of(date(2010, 5, 8)) == Counter({0: 4, 8: 1, 5: 1, 2: 1, 1: 1})
    assert digits_of(date(1111, 11, 11)) == Counter({1: 8})
    assert set(digits_of(date(2010, 8, 25))) == {0, 1, 2, 5, 8}


def test_exact_scan_2010():
    found = scan(date(2010, 1, 1), date(2010, 12, 31), "01258", EXACTLY_USES)
    assert [format_date(d) for d in found] == [
        "08.05.2010",
        "18.05.2010",
        "28.05.2010",
        "05.08.2010",
        "15.08.2010",
        "25.08.2010",
    ]


def test_subset_scan_may_2010():
    found = scan(date(2010, 5, 1), date(2010, 5, 31), "0125", SUBSET_OF)
    assert [format_date(d) for d in found] == [
        "01.05.2010",
        "02.05.2010",
        "05.05.2010",
        "10.05.2010",
        "11.05.2010",
        "12.05.2010",
        "15.05.2010",
        "20.05.2010",
        "21.05.2010",
        "22.05.2010",
        "25.05.2010",
    ]


def test_scan_missing_year_digit_is_empty():
    assert scan(date(2010, 5, 1), date(2010, 5, 31), "015", SUBSET_OF) == []


def test_exact_results_subset_of_subset_results():
    start, end = date(2010, 1, 1), date(2010, 12, 31)
    exact = set(scan(start, end, "01258", EXACTLY_USES))
    subset = set(scan(start, end, "01258", SUBSET_OF))
    assert exact <= subset


def test_single_day_range():
    day = date(2010, 5, 8)
    assert scan(day, day, "01258", EXACTLY_USES) == [day]
    assert scan(day, day, "0125", SUBSET_OF) == []  # the 8 is outside


def test_scan_handles_leap_day():
    found = scan(date(2012, 2, 28), date(2012, 3, 1), "0129", EXACTLY_USES)
    assert found == [date(2012, 2, 29)]


def test_scan_alphabet_without_year_digits_empty_for_2010():
    for alphabet in ("013", "345", "025"):
        missing = {0, 1, 2} - {int(c) for c in alphabet}
        assert missing  # all three alphabets drop a year digit
        assert scan(date(2010, 1, 1), date(2010, 12, 31), alphabet, SUBSET_OF) == []


def test_scan_validation():
    with pytest.raises(ValueError):
        scan(date(2010, 5, 2), date(2010, 5, 1), "0125")
    with pytest.raises(ValueError):
        scan(date(2010, 5, 1), date(2010, 5, 2), "0125", "superset")
    with pytest.raises(ValueError):
        scan(date(999, 1, 1), date(1000, 1, 1), "0125")
